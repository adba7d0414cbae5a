#pragma once

// Brute-force word-growth oracle. Generators act through the geometric
// (Tits) representation with exact entries in Z[y]/(Psi(y)), where
// y = 2cos(pi/L) for L the lcm of all finite labels and Psi its monic
// minimal polynomial, obtained as the trace polynomial of Phi_{2L}.
// Exact equality makes BFS de-duplication safe.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxeter.hpp"
#include "roots.hpp"

namespace coxgrowth {

namespace detail {

struct TitsRing {
    IntPoly psi; // monic
    std::size_t deg;

    explicit TitsRing(int L) {
        psi = trace_poly(cyclotomic(2 * static_cast<unsigned>(L)));
        deg = static_cast<std::size_t>(psi.degree());
    }

    using Elem = std::vector<Int>; // length deg (deg >= 1), power basis of y

    Elem zero() const { return Elem(deg, Int(0)); }
    Elem constant(Int c) const {
        Elem e = zero();
        e[0] = std::move(c);
        return e;
    }

    Elem reduce(const IntPoly& p) const {
        // psi is monic, so plain polynomial remainder stays integral
        std::vector<Int> c(p.coeffs().begin(), p.coeffs().end());
        for (std::size_t k = c.size(); k-- > deg;) {
            Int lead = c[k];
            if (lead == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) c[k - deg + j] -= lead * psi.coeff(j);
            c[k] = 0;
        }
        Elem e = zero();
        for (std::size_t j = 0; j < deg && j < c.size(); ++j) e[j] = c[j];
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (std::size_t i = 0; i < deg; ++i) r[i] += b[i];
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<Int> prod(2 * deg - 1, Int(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) prod[i + j] += a[i] * b[j];
        }
        return reduce(IntPoly(std::move(prod)));
    }

    // 2cos(k*pi/L) through the Chebyshev-like recurrence C_0 = 2,
    // C_1 = y, C_{k+1} = y*C_k - C_{k-1}.
    Elem two_cos(int k) const {
        Elem prev = constant(Int(2));
        if (k == 0) return prev;
        Elem cur = zero();
        if (deg >= 2)
            cur[1] = 1;
        else
            cur = reduce(IntPoly::monomial(1));
        Elem y = cur;
        for (int i = 1; i < k; ++i) {
            Elem next = mul(y, cur);
            for (std::size_t j = 0; j < deg; ++j) next[j] -= prev[j];
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
};

} // namespace detail

struct OracleTooLarge : std::runtime_error {
    OracleTooLarge() : std::runtime_error("tits_bfs: state guard exceeded") {}
};

// Sphere sizes a_0..a_depth of (G, S) by breadth-first search.
inline std::vector<Int> tits_bfs_sphere_sizes(const CoxeterMatrix& m, int depth,
                                              std::size_t max_states = 2'000'000) {
    const int n = m.rank();
    int L = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m.infinite_label(i, j))
                throw std::domain_error("tits_bfs: infinite label not supported by the oracle");
            L = static_cast<int>(std::lcm(L, m.label(i, j)));
        }
    if (L < 2) L = 2; // rank 1: no labels, any ring with 2cos(pi/2) = 0 works

    detail::TitsRing ring(L);
    using Elem = detail::TitsRing::Elem;
    using Matrix = std::vector<Elem>; // n*n entries, row-major

    auto identity = [&] {
        Matrix id(static_cast<std::size_t>(n) * n, ring.zero());
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = ring.constant(Int(1));
        return id;
    }();

    // sigma_i is the identity apart from row i, whose entries are
    // 2cos(pi/m_ij) off the diagonal and -1 on it.
    std::vector<Matrix> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Matrix g = identity;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                g[static_cast<std::size_t>(i) * n + j] = ring.constant(Int(-1));
            else
                g[static_cast<std::size_t>(i) * n + j] = ring.two_cos(L / m.label(i, j));
        }
        gens.push_back(std::move(g));
    }

    auto apply_gen = [&](const Matrix& g, const Matrix& w) {
        Matrix r(static_cast<std::size_t>(n) * n, ring.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Elem s = ring.zero();
                for (int k = 0; k < n; ++k)
                    s = ring.add(s, ring.mul(g[static_cast<std::size_t>(i) * n + k],
                                             w[static_cast<std::size_t>(k) * n + j]));
                r[static_cast<std::size_t>(i) * n + j] = std::move(s);
            }
        return r;
    };

    std::set<Matrix> seen;
    seen.insert(identity);
    std::vector<Matrix> layer{identity};
    std::vector<Int> spheres{Int(1)};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Matrix> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                Matrix x = apply_gen(g, w);
                if (seen.insert(x).second) {
                    next.push_back(std::move(x));
                    if (seen.size() > max_states) throw OracleTooLarge();
                }
            }
        spheres.push_back(Int(next.size()));
        layer = std::move(next);
        if (layer.empty()) {
            while (static_cast<int>(spheres.size()) <= depth) spheres.push_back(Int(0));
            break;
        }
    }
    return spheres;
}

} // namespace coxgrowth
