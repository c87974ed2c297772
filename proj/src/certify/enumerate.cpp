#include "birkhoff/certify.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace birkhoff::certify {

namespace {

struct Ray {
    std::vector<Integer> z;
    std::uint64_t zeros = 0;  // processed constraint rows tight at z
};

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

/// Columns of the inverse of a square nonsingular integer matrix, scaled to primitive integer vectors.
std::vector<std::vector<Integer>> inverse_columns(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t dim = rows.size();
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim, Rational(0)));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            aug[r][c] = Rational(rows[r][c]);
        }
        aug[r][dim + r] = 1;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t p = col;
        while (aug[p][col] == 0) {
            ++p;
        }
        std::swap(aug[p], aug[col]);
        const Rational inv = 1 / aug[col][col];
        for (auto& x : aug[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            if (r != col && aug[r][col] != 0) {
                const Rational f = aug[r][col];
                for (std::size_t c = 0; c < 2 * dim; ++c) {
                    aug[r][c] -= f * aug[col][c];
                }
            }
        }
    }
    std::vector<std::vector<Integer>> out;
    for (std::size_t j = 0; j < dim; ++j) {
        Integer lcm = 1;
        for (std::size_t r = 0; r < dim; ++r) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), aug[r][dim + j].get_den_mpz_t());
        }
        std::vector<Integer> v(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const auto& q = aug[r][dim + j];
            v[r] = q.get_num() * (lcm / q.get_den());
        }
        linalg::make_primitive(v);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Array3> enumerate_vertices(const PolytopeSpec& spec) {
    const Array3 shape(spec.n, spec.d);
    const std::size_t cells = shape.size();
    if (cells > kMaxEnumerationCells) {
        throw PreconditionError("vertex enumeration is limited to n^(d+1) <= 32 cells");
    }
    const auto sets = constraint_sets(spec);

    // Points of the polytope are x = u (1 + N w / s) with u the uniform value and
    // N a kernel basis of the constraints; x >= 0 becomes the cone
    // { (s, w) : s + N_c w >= 0 for every cell c, s >= 0 }.
    const auto kernel = linalg::kernel_basis(constraint_matrix(spec));
    const std::size_t dim = kernel.size() + 1;
    std::vector<std::vector<Integer>> rows(cells + 1, std::vector<Integer>(dim));
    for (std::size_t c = 0; c < cells; ++c) {
        rows[c][0] = 1;
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            rows[c][k + 1] = kernel[k][c];
        }
    }
    rows[cells][0] = 1;

    linalg::IntMatrix row_matrix(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            row_matrix(r, c) = rows[r][c];
        }
    }
    const auto basis_rows = linalg::independent_rows(row_matrix);
    ensure(basis_rows.size() == dim, "cone constraints must have full rank");

    std::vector<std::vector<Integer>> square;
    for (auto r : basis_rows) {
        square.push_back(rows[r]);
    }
    std::uint64_t processed = 0;
    for (auto r : basis_rows) {
        processed |= std::uint64_t{1} << r;
    }
    std::vector<Ray> rays;
    const auto columns = inverse_columns(square);
    for (std::size_t j = 0; j < dim; ++j) {
        Ray ray{columns[j], 0};
        for (std::size_t t = 0; t < dim; ++t) {
            if (t != j) {
                ray.zeros |= std::uint64_t{1} << basis_rows[t];
            }
        }
        rays.push_back(std::move(ray));
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::uint64_t bit = std::uint64_t{1} << r;
        if (processed & bit) {
            continue;
        }
        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(rows[r], rays[i].z);
            if (value[i] > 0) {
                pos.push_back(i);
                next.push_back(rays[i]);
            } else if (value[i] == 0) {
                Ray kept = rays[i];
                kept.zeros |= bit;
                next.push_back(std::move(kept));
            } else {
                neg.push_back(i);
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const std::uint64_t common = rays[p].zeros & rays[q].zeros;
                if (static_cast<std::size_t>(std::popcount(common)) + 2 < dim) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o != p && o != q && (rays[o].zeros & common) == common) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                Ray fresh;
                fresh.z.resize(dim);
                for (std::size_t t = 0; t < dim; ++t) {
                    fresh.z[t] = value[p] * rays[q].z[t] - value[q] * rays[p].z[t];
                }
                linalg::make_primitive(fresh.z);
                fresh.zeros = common | bit;
                next.push_back(std::move(fresh));
            }
        }
        rays = std::move(next);
        processed |= bit;
    }

    std::vector<Array3> vertices;
    for (const auto& ray : rays) {
        ensure(ray.z[0] > 0, "bounded polytope has no recession directions");
        Array3 x(spec.n, spec.d);
        for (std::size_t c = 0; c < cells; ++c) {
            x[c] = Rational(dot(rows[c], ray.z));
        }
        Rational total = 0;
        for (auto idx : sets.front()) {
            total += x[idx];
        }
        for (std::size_t c = 0; c < cells; ++c) {
            x[c] /= total;
        }
        ensure(is_vertex_rank(x, spec).is_vertex, "enumerated point failed the rank test");
        vertices.push_back(std::move(x));
    }
    std::sort(vertices.begin(), vertices.end(), entries_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

VertexCertificate is_vertex_enumeration(const Array3& a, const PolytopeSpec& spec) {
    if (!is_member(a, spec)) {
        throw PreconditionError("enumeration test needs a member of the polytope");
    }
    const auto vertices = enumerate_vertices(spec);
    VertexCertificate cert;
    cert.method = Method::Enumeration;
    cert.is_vertex = std::binary_search(vertices.begin(), vertices.end(), a, entries_less);
    if (!cert.is_vertex) {
        // Any non-vertex member has a rank-test witness.
        cert.witness = is_vertex_rank(a, spec).witness;
    }
    return cert;
}

}  // namespace birkhoff::certify
