#include "cactusnet/response.hpp"

#include <algorithm>
#include <sstream>

#include "cactusnet/error.hpp"

namespace cactusnet {

const Rational& ResponseMatrix::at(VertexId i, VertexId j) const {
    auto index = [this](VertexId v) {
        auto it = std::lower_bound(boundary.begin(), boundary.end(), v);
        if (it == boundary.end() || *it != v) {
            throw UnknownEndpoint("vertex " + std::to_string(v.value) + " is not a boundary vertex");
        }
        return static_cast<std::size_t>(it - boundary.begin());
    };
    return entries(index(i), index(j));
}

namespace {

// Reduces [A | B] in place until A is the identity; B then holds A^-1 B.
void gauss_jordan(RationalMatrix& a, RationalMatrix& b) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularInterior("interior block is singular: an interior component is cut off from the boundary");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(pivot, c), b(col, c));
        }
        const Rational inv = a(col, col).reciprocal();
        for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
        for (std::size_t c = 0; c < b.cols(); ++c) b(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
            for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) -= f * b(col, c);
        }
    }
}

// Forward elimination with largest-magnitude pivots, then back substitution.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!m[r][col].is_zero() && (pivot == n || m[r][col].abs() > m[pivot][col].abs())) pivot = r;
        }
        if (pivot == n) {
            throw SingularInterior("harmonic system is singular: an interior component is cut off from the boundary");
        }
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

} // namespace

ResponseMatrix schur_response(const Network& n) {
    const KirchhoffMatrix k = kirchhoff_matrix(n);
    const std::size_t nb = k.boundary_count;
    const std::size_t ni = k.order.size() - nb;

    ResponseMatrix out;
    out.boundary.assign(k.order.begin(), k.order.begin() + static_cast<std::ptrdiff_t>(nb));
    out.entries = RationalMatrix(nb, nb);
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) out.entries(i, j) = k.entries(i, j);
    }
    if (ni == 0) return out;

    RationalMatrix kii(ni, ni);
    RationalMatrix kib(ni, nb);
    for (std::size_t i = 0; i < ni; ++i) {
        for (std::size_t j = 0; j < ni; ++j) kii(i, j) = k.entries(nb + i, nb + j);
        for (std::size_t j = 0; j < nb; ++j) kib(i, j) = k.entries(nb + i, j);
    }
    gauss_jordan(kii, kib); // kib <- K_II^-1 K_IB
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            Rational acc;
            for (std::size_t t = 0; t < ni; ++t) acc += k.entries(i, nb + t) * kib(t, j);
            out.entries(i, j) -= acc;
        }
    }
    return out;
}

DirichletSolution dirichlet_solve(const Network& n, const std::map<VertexId, Rational>& boundary_potentials) {
    for (const auto& [v, phi] : boundary_potentials) {
        if (!n.has_vertex(v) || n.kind(v) != VertexKind::Boundary) {
            throw UnknownEndpoint("potential given for non-boundary vertex " + std::to_string(v.value));
        }
    }
    std::map<VertexId, Rational> potential;
    for (VertexId b : n.boundary()) {
        auto it = boundary_potentials.find(b);
        potential[b] = it == boundary_potentials.end() ? Rational(0) : it->second;
    }

    const auto interior = n.interior();
    std::map<VertexId, std::size_t> slot;
    for (std::size_t i = 0; i < interior.size(); ++i) slot[interior[i]] = i;

    // Interior i: sum_j g_ij (u_i - u_j) = 0.
    std::vector<std::vector<Rational>> system(interior.size(), std::vector<Rational>(interior.size()));
    std::vector<Rational> rhs(interior.size());
    auto stamp = [&](VertexId self, VertexId other, const Rational& g) {
        auto it = slot.find(self);
        if (it == slot.end()) return;
        const std::size_t r = it->second;
        system[r][r] += g;
        if (auto jt = slot.find(other); jt != slot.end()) {
            system[r][jt->second] -= g;
        } else {
            rhs[r] += g * potential.at(other);
        }
    };
    for (const auto& e : n.edges()) {
        stamp(e.u, e.v, e.conductivity);
        stamp(e.v, e.u, e.conductivity);
    }

    DirichletSolution out;
    if (!interior.empty()) {
        const auto values = solve_linear(std::move(system), std::move(rhs));
        for (std::size_t i = 0; i < interior.size(); ++i) {
            potential[interior[i]] = values[i];
            out.interior_potentials[interior[i]] = values[i];
        }
    }
    for (VertexId b : n.boundary()) out.boundary_currents[b] = Rational(0);
    for (const auto& e : n.edges()) {
        const Rational flow = e.conductivity * (potential.at(e.u) - potential.at(e.v));
        if (auto it = out.boundary_currents.find(e.u); it != out.boundary_currents.end()) it->second += flow;
        if (auto it = out.boundary_currents.find(e.v); it != out.boundary_currents.end()) it->second -= flow;
    }
    return out;
}

ResponseMatrix response_by_dirichlet(const Network& n) {
    ResponseMatrix out;
    out.boundary.assign(n.boundary().begin(), n.boundary().end());
    const std::size_t nb = out.boundary.size();
    out.entries = RationalMatrix(nb, nb);
    for (std::size_t j = 0; j < nb; ++j) {
        const auto sol = dirichlet_solve(n, {{out.boundary[j], Rational(1)}});
        for (std::size_t i = 0; i < nb; ++i) out.entries(i, j) = sol.boundary_currents.at(out.boundary[i]);
    }
    return out;
}

std::optional<std::string> check_response_invariants(const ResponseMatrix& r) {
    const auto& m = r.entries;
    const std::size_t n = r.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        Rational row;
        for (std::size_t j = 0; j < n; ++j) {
            row += m(i, j);
            const std::string where = "(" + std::to_string(r.boundary[i].value) + "," +
                                      std::to_string(r.boundary[j].value) + ")";
            if (m(i, j) != m(j, i)) return "asymmetric entry at " + where;
            if (i != j && m(i, j).sign() > 0) return "positive off-diagonal " + m(i, j).to_string() + " at " + where;
        }
        if (!row.is_zero()) {
            return "row " + std::to_string(r.boundary[i].value) + " sums to " + row.to_string();
        }
    }
    return std::nullopt;
}

std::optional<std::string> first_difference(const ResponseMatrix& a, const ResponseMatrix& b) {
    if (a.boundary != b.boundary) return std::string("boundary sets differ");
    for (std::size_t i = 0; i < a.boundary.size(); ++i) {
        for (std::size_t j = 0; j < a.boundary.size(); ++j) {
            if (a.entries(i, j) != b.entries(i, j)) {
                return "entry (" + std::to_string(a.boundary[i].value) + "," + std::to_string(a.boundary[j].value) +
                       "): " + a.entries(i, j).to_string() + " vs " + b.entries(i, j).to_string();
            }
        }
    }
    return std::nullopt;
}

std::string response_to_csv(const ResponseMatrix& r) {
    std::ostringstream os;
    for (std::size_t j = 0; j < r.boundary.size(); ++j) os << (j ? "," : "") << r.boundary[j].value;
    os << '\n';
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
        for (std::size_t j = 0; j < r.boundary.size(); ++j) os << (j ? "," : "") << r.entries(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

} // namespace cactusnet
