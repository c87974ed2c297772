#include "birkhoff/certify.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>

namespace birkhoff::certify {

std::string to_string(Method method) {
    switch (method) {
        case Method::GraphCriterion:
            return "graph";
        case Method::RankTest:
            return "rank";
        case Method::Enumeration:
            return "enumeration";
    }
    return "unknown";
}

bool witness_is_valid(const VertexCertificate& cert, const Array3& a, const PolytopeSpec& spec) {
    if (cert.is_vertex) {
        return !cert.witness.has_value();
    }
    if (!cert.witness) {
        return false;
    }
    const auto& w = *cert.witness;
    if (w.plus == w.minus || !is_member(w.plus, spec) || !is_member(w.minus, spec)) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((w.plus[i] + w.minus[i]) / 2 != a[i]) {
            return false;
        }
    }
    return true;
}

bool has_half_integral_support(const Array3& a, PolytopeKind kind) {
    const Rational half(1, 2);
    for (const auto& set : constraint_sets({kind, a.n(), a.d()})) {
        int halves = 0;
        int ones = 0;
        for (auto idx : set) {
            const auto& q = a[idx];
            if (q == half) {
                ++halves;
            } else if (q == 1) {
                ++ones;
            } else if (q != 0) {
                return false;
            }
        }
        if (!((halves == 2 && ones == 0) || (halves == 0 && ones == 1))) {
            return false;
        }
    }
    return true;
}

VertexCertificate is_vertex_half_integral(const Array3& a, PolytopeKind kind) {
    if (!has_half_integral_support(a, kind)) {
        throw PreconditionError("graph criterion needs one 1 or two ½ entries in every constraint set");
    }
    const auto mode = kind == PolytopeKind::Omega ? AdjacencyMode::Line : AdjacencyMode::Hyperplane;
    const auto g = SupportGraph::build(a, mode);
    VertexCertificate cert;
    cert.method = Method::GraphCriterion;
    for (const auto& comp : g.components()) {
        if (!comp.bipartite) {
            continue;
        }
        Witness w{a, a};
        const Rational half(1, 2);
        for (auto v : comp.members) {
            const auto idx = g.cell_index(v);
            const Rational delta = g.colour(v) == 0 ? half : -half;
            w.plus[idx] += delta;
            w.minus[idx] -= delta;
        }
        cert.is_vertex = false;
        cert.witness = std::move(w);
        return cert;
    }
    cert.is_vertex = true;
    return cert;
}

linalg::IntMatrix constraint_matrix(const PolytopeSpec& spec) {
    const auto sets = constraint_sets(spec);
    const Array3 shape(spec.n, spec.d);
    linalg::IntMatrix m(sets.size(), shape.size());
    for (std::size_t r = 0; r < sets.size(); ++r) {
        for (auto idx : sets[r]) {
            m(r, idx) = 1;
        }
    }
    return m;
}

std::size_t constraint_rank(const PolytopeSpec& spec) { return linalg::exact_rank(constraint_matrix(spec)); }

VertexCertificate is_vertex_rank(const Array3& a, const PolytopeSpec& spec) {
    if (!is_member(a, spec)) {
        throw PreconditionError("rank test needs a member of the polytope");
    }
    const auto supp = support_indices(a);
    std::vector<std::size_t> column_of(a.size(), supp.size());
    for (std::size_t c = 0; c < supp.size(); ++c) {
        column_of[supp[c]] = c;
    }
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& set : constraint_sets(spec)) {
        std::vector<std::size_t> row;
        for (auto idx : set) {
            if (column_of[idx] != supp.size()) {
                row.push_back(column_of[idx]);
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    linalg::IntMatrix m(rows.size(), supp.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (auto c : rows[r]) {
            m(r, c) = 1;
        }
    }

    VertexCertificate cert;
    cert.method = Method::RankTest;
    if (linalg::rank_mod_prime(m) == supp.size() || linalg::exact_rank(m) == supp.size()) {
        cert.is_vertex = true;
        return cert;
    }

    const auto kernel = linalg::kernel_basis(m);
    ensure(!kernel.empty(), "rank-deficient support must have a kernel vector");
    const auto& v = kernel.front();
    // Largest step s with a - s|v| >= 0 on the support; use t = s / 2.
    std::optional<Rational> step;
    for (std::size_t c = 0; c < supp.size(); ++c) {
        if (v[c] == 0) {
            continue;
        }
        Rational ratio = a[supp[c]] / Rational(abs(v[c]));
        if (!step || ratio < *step) {
            step = ratio;
        }
    }
    const Rational t = *step / 2;
    Witness w{a, a};
    for (std::size_t c = 0; c < supp.size(); ++c) {
        const Rational delta = t * Rational(v[c]);
        w.plus[supp[c]] += delta;
        w.minus[supp[c]] -= delta;
    }
    cert.is_vertex = false;
    cert.witness = std::move(w);
    return cert;
}

bool entries_less(const Array3& lhs, const Array3& rhs) {
    return std::lexicographical_compare(lhs.entries().begin(), lhs.entries().end(), rhs.entries().begin(),
                                        rhs.entries().end());
}

Json certificate_to_json(const VertexCertificate& cert, PolytopeKind kind) {
    Json out;
    out["is_vertex"] = cert.is_vertex;
    out["method"] = to_string(cert.method);
    if (cert.witness) {
        out["witness"] = {{"plus", array_to_json(cert.witness->plus, kind)},
                          {"minus", array_to_json(cert.witness->minus, kind)}};
    }
    return out;
}

}  // namespace birkhoff::certify
