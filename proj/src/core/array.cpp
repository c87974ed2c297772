#include "birkhoff/array.hpp"

#include <algorithm>
#include <stdexcept>

namespace birkhoff {

std::string to_string(PolytopeKind kind) {
    return kind == PolytopeKind::Omega ? "omega" : "sigma";
}

PolytopeKind parse_kind(std::string_view text) {
    if (text == "omega") {
        return PolytopeKind::Omega;
    }
    if (text == "sigma") {
        return PolytopeKind::Sigma;
    }
    throw std::invalid_argument("unknown polytope kind '" + std::string(text) + "'");
}

namespace {

std::size_t int_pow(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= static_cast<std::size_t>(base);
    }
    return r;
}

}  // namespace

Array3::Array3(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("array needs n >= 1 and d >= 1");
    }
    entries_.assign(int_pow(n, d + 1), Rational(0));
}

std::size_t Array3::stride(int axis) const { return int_pow(n_, d_ - axis); }

std::size_t Array3::index_of(std::span<const int> coords) const {
    if (static_cast<int>(coords.size()) != axes()) {
        throw std::invalid_argument("cell has wrong number of coordinates");
    }
    std::size_t idx = 0;
    for (int c : coords) {
        if (c < 0 || c >= n_) {
            throw std::out_of_range("cell coordinate out of range");
        }
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
    }
    return idx;
}

Cell Array3::cell_of(std::size_t index) const {
    Cell cell;
    cell.coords.assign(static_cast<std::size_t>(axes()), 0);
    for (int a = d_; a >= 0; --a) {
        cell.coords[static_cast<std::size_t>(a)] = static_cast<int>(index % static_cast<std::size_t>(n_));
        index /= static_cast<std::size_t>(n_);
    }
    return cell;
}

int Array3::coord(std::size_t index, int axis) const {
    return static_cast<int>((index / stride(axis)) % static_cast<std::size_t>(n_));
}

std::vector<Rational> Array3::line(int axis, std::span<const int> fixed) const {
    if (axis < 0 || axis > d_ || static_cast<int>(fixed.size()) != d_) {
        throw std::invalid_argument("line needs an axis and d fixed coordinates");
    }
    std::vector<int> coords;
    coords.reserve(static_cast<std::size_t>(axes()));
    for (int a = 0, f = 0; a <= d_; ++a) {
        coords.push_back(a == axis ? 0 : fixed[static_cast<std::size_t>(f++)]);
    }
    const std::size_t base = index_of(coords);
    const std::size_t step = stride(axis);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int t = 0; t < n_; ++t) {
        out.push_back(entries_[base + static_cast<std::size_t>(t) * step]);
    }
    return out;
}

std::vector<Rational> Array3::hyperplane(int axis, int k) const {
    if (axis < 0 || axis > d_ || k < 0 || k >= n_) {
        throw std::out_of_range("hyperplane index out of range");
    }
    std::vector<Rational> out;
    out.reserve(int_pow(n_, d_));
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (coord(i, axis) == k) {
            out.push_back(entries_[i]);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> line_index_sets(int n, int d) {
    const Array3 shape(n, d);
    std::vector<std::vector<std::size_t>> lines;
    lines.reserve(static_cast<std::size_t>(d + 1) * int_pow(n, d));
    for (int axis = 0; axis <= d; ++axis) {
        const std::size_t step = shape.stride(axis);
        for (std::size_t base = 0; base < shape.size(); ++base) {
            if (shape.coord(base, axis) != 0) {
                continue;
            }
            std::vector<std::size_t> line;
            line.reserve(static_cast<std::size_t>(n));
            for (int t = 0; t < n; ++t) {
                line.push_back(base + static_cast<std::size_t>(t) * step);
            }
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::vector<std::vector<std::size_t>> hyperplane_index_sets(int n, int d) {
    const Array3 shape(n, d);
    std::vector<std::vector<std::size_t>> planes(static_cast<std::size_t>((d + 1) * n));
    for (std::size_t i = 0; i < shape.size(); ++i) {
        for (int axis = 0; axis <= d; ++axis) {
            planes[static_cast<std::size_t>(axis * n + shape.coord(i, axis))].push_back(i);
        }
    }
    return planes;
}

std::vector<std::vector<std::size_t>> constraint_sets(const PolytopeSpec& spec) {
    return spec.kind == PolytopeKind::Omega ? line_index_sets(spec.n, spec.d)
                                            : hyperplane_index_sets(spec.n, spec.d);
}

bool is_member(const Array3& a, const PolytopeSpec& spec) {
    if (a.n() != spec.n || a.d() != spec.d) {
        throw std::invalid_argument("array shape does not match polytope spec");
    }
    for (const auto& q : a.entries()) {
        if (sgn(q) < 0) {
            return false;
        }
    }
    for (const auto& set : constraint_sets(spec)) {
        Rational sum = 0;
        for (auto idx : set) {
            sum += a[idx];
        }
        if (sum != 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> support_indices(const Array3& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<Cell> support(const Array3& a) {
    std::vector<Cell> out;
    for (auto i : support_indices(a)) {
        out.push_back(a.cell_of(i));
    }
    return out;
}

long long affine_dimension(const PolytopeSpec& spec) {
    if (spec.kind != PolytopeKind::Omega) {
        throw std::invalid_argument("closed-form affine dimension is only defined for Omega");
    }
    long long r = 1;
    for (int i = 0; i <= spec.d; ++i) {
        r *= spec.n - 1;
    }
    return r;
}

bool is_latin(int order, const std::vector<int>& grid) {
    if (order < 1 || grid.size() != static_cast<std::size_t>(order * order)) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(order));
    for (int pass = 0; pass < 2; ++pass) {
        for (int r = 0; r < order; ++r) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int c = 0; c < order; ++c) {
                const int s = pass == 0 ? grid[static_cast<std::size_t>(r * order + c)]
                                        : grid[static_cast<std::size_t>(c * order + r)];
                if (s < 0 || s >= order || seen[static_cast<std::size_t>(s)]) {
                    return false;
                }
                seen[static_cast<std::size_t>(s)] = 1;
            }
        }
    }
    return true;
}

LatinSquare::LatinSquare(int order, std::vector<int> grid) : order_(order), grid_(std::move(grid)) {
    if (!is_latin(order_, grid_)) {
        throw std::invalid_argument("grid is not a Latin square");
    }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
    const int t = static_cast<int>(rows.size());
    std::vector<int> grid;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != t) {
            throw std::invalid_argument("Latin square rows must have length equal to the order");
        }
        for (int s : row) {
            grid.push_back(s - 1);
        }
    }
    return LatinSquare(t, std::move(grid));
}

Array3 latin_to_array(const LatinSquare& latin) {
    const int t = latin.order();
    Array3 a(t, 2);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            a.at({i, j, latin(i, j)}) = 1;
        }
    }
    return a;
}

LatinSquare array_to_latin(const Array3& a) {
    if (a.d() != 2) {
        throw std::invalid_argument("Latin squares correspond to d = 2 arrays");
    }
    const int t = a.n();
    std::vector<int> grid(static_cast<std::size_t>(t * t), -1);
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        const auto& q = a[idx];
        if (q == 0) {
            continue;
        }
        const Cell c = a.cell_of(idx);
        auto& slot = grid[static_cast<std::size_t>(c.coords[0] * t + c.coords[1])];
        if (q != 1 || slot != -1) {
            throw std::invalid_argument("array is not a 0/1 array with one 1 per shaft");
        }
        slot = c.coords[2];
    }
    return LatinSquare(t, std::move(grid));
}

}  // namespace birkhoff
