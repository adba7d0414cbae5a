#pragma once

// Coxeter systems given by their matrices: finite-type recognition
// against the classification catalogue, Solomon growth polynomials of
// finite groups, and Steinberg's alternating-sum formula for the
// growth function of an arbitrary system.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"
#include "ratfunc.hpp"

namespace coxgrowth {

class CoxeterMatrix {
  public:
    static constexpr int kInfinity = -1;

    explicit CoxeterMatrix(int rank) : rank_(rank), m_(rank * rank, 2) {
        if (rank < 1) throw std::invalid_argument("CoxeterMatrix: rank must be positive");
        for (int i = 0; i < rank; ++i) m_[i * rank + i] = 1;
    }

    int rank() const { return rank_; }

    int label(int i, int j) const {
        check(i);
        check(j);
        return m_[i * rank_ + j];
    }

    void set_label(int i, int j, int m) {
        check(i);
        check(j);
        if (i == j) throw std::invalid_argument("CoxeterMatrix: diagonal is fixed at 1");
        if (m != kInfinity && m < 2) throw std::invalid_argument("CoxeterMatrix: label must be >= 2 or infinite");
        m_[i * rank_ + j] = m;
        m_[j * rank_ + i] = m;
    }

    bool infinite_label(int i, int j) const { return label(i, j) == kInfinity; }

    CoxeterMatrix submatrix(const std::vector<int>& idx) const {
        CoxeterMatrix sub(static_cast<int>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                sub.set_label(static_cast<int>(a), static_cast<int>(b), label(idx[a], idx[b]));
        return sub;
    }

  private:
    void check(int i) const {
        if (i < 0 || i >= rank_) throw std::out_of_range("CoxeterMatrix: index out of range");
    }
    int rank_;
    std::vector<int> m_;
};

// One irreducible factor of a finite Coxeter group.
struct FiniteComponent {
    std::string label;          // "A3", "I2(7)", "H3", ...
    std::vector<int> exponents; // classical Coxeter exponents
};

struct FiniteType {
    std::vector<FiniteComponent> components;

    std::vector<int> all_exponents() const {
        std::vector<int> e;
        for (const auto& c : components) e.insert(e.end(), c.exponents.begin(), c.exponents.end());
        return e;
    }
};

namespace detail {

inline std::vector<int> range_exponents(int from, int to, int step) {
    std::vector<int> e;
    for (int x = from; x <= to; x += step) e.push_back(x);
    return e;
}

// Recognizes one connected diagram component (indices into M).
inline std::optional<FiniteComponent> recognize_component(const CoxeterMatrix& m,
                                                          const std::vector<int>& comp) {
    const int n = static_cast<int>(comp.size());
    auto lab = [&](int a, int b) { return m.label(comp[a], comp[b]); };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (lab(a, b) == CoxeterMatrix::kInfinity) return std::nullopt;

    auto named = [&](std::string s, std::vector<int> e) {
        return FiniteComponent{std::move(s), std::move(e)};
    };
    if (n == 1) return named("A1", {1});
    if (n == 2) {
        int p = lab(0, 1);
        if (p == 3) return named("A2", {1, 2});
        return named("I2(" + std::to_string(p) + ")", {1, p - 1});
    }

    // diagram edges: labels >= 3
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (lab(a, b) >= 3) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++edges;
            }
    if (edges != n - 1) return std::nullopt; // a finite diagram is a tree (and the component is connected)

    std::vector<int> branch;
    for (int a = 0; a < n; ++a) {
        if (adj[a].size() > 3) return std::nullopt;
        if (adj[a].size() == 3) branch.push_back(a);
    }
    if (branch.size() > 1) return std::nullopt;

    std::vector<std::pair<int, int>> marked; // (a,b) with label > 3
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (lab(a, b) > 3) marked.emplace_back(a, b);
    if (marked.size() > 1) return std::nullopt;

    if (branch.size() == 1) {
        if (!marked.empty()) return std::nullopt;
        // walk the three branches from the fork
        std::vector<int> lens;
        for (int s : adj[branch[0]]) {
            int len = 1, prev = branch[0], cur = s;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (adj[cur].size() != 1) return std::nullopt;
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens[0] == 1 && lens[1] == 1) {
            // D_n
            std::vector<int> e = range_exponents(1, 2 * n - 3, 2);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            return named("D" + std::to_string(n), e);
        }
        if (lens[0] == 1 && lens[1] == 2 && lens[2] == 2) return named("E6", {1, 4, 5, 7, 8, 11});
        if (lens[0] == 1 && lens[1] == 2 && lens[2] == 3) return named("E7", {1, 5, 7, 9, 11, 13, 17});
        if (lens[0] == 1 && lens[1] == 2 && lens[2] == 4)
            return named("E8", {1, 7, 11, 13, 17, 19, 23, 29});
        return std::nullopt;
    }

    // path: order the vertices from one end
    int end = -1;
    for (int a = 0; a < n; ++a)
        if (adj[a].size() == 1) end = a;
    std::vector<int> path{end};
    int prev = -1, cur = end;
    while (static_cast<int>(path.size()) < n) {
        int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
    }
    if (marked.empty()) return named("A" + std::to_string(n), range_exponents(1, n, 1));

    int p = lab(marked[0].first, marked[0].second);
    // position of the marked edge along the path
    int pos = -1;
    for (int a = 0; a + 1 < n; ++a) {
        auto u = path[a], v = path[a + 1];
        if ((u == marked[0].first && v == marked[0].second) ||
            (v == marked[0].first && u == marked[0].second))
            pos = a;
    }
    bool at_end = (pos == 0 || pos == n - 2);
    if (p == 4) {
        if (at_end) return named("B" + std::to_string(n), range_exponents(1, 2 * n - 1, 2));
        if (n == 4 && pos == 1) return named("F4", {1, 5, 7, 11});
        return std::nullopt;
    }
    if (p == 5 && at_end) {
        if (n == 3) return named("H3", {1, 5, 9});
        if (n == 4) return named("H4", {1, 11, 19, 29});
    }
    return std::nullopt;
}

} // namespace detail

// Decomposition into irreducible finite factors, or absent if the
// group is not finite.
inline std::optional<FiniteType> finite_type(const CoxeterMatrix& m) {
    const int n = m.rank();
    std::vector<int> comp_id(n, -1);
    FiniteType ft;
    for (int s = 0; s < n; ++s) {
        if (comp_id[s] >= 0) continue;
        std::vector<int> comp{s};
        comp_id[s] = s;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (comp_id[j] < 0 && m.label(comp[k], j) != 2 && comp[k] != j) {
                    comp_id[j] = s;
                    comp.push_back(j);
                }
        auto rec = detail::recognize_component(m, comp);
        if (!rec) return std::nullopt;
        ft.components.push_back(std::move(*rec));
    }
    std::sort(ft.components.begin(), ft.components.end(),
              [](const FiniteComponent& a, const FiniteComponent& b) { return a.label < b.label; });
    return ft;
}

// Solomon's product formula: product of [m_i + 1] over the exponents.
inline IntPoly growth_poly_finite(const CoxeterMatrix& m) {
    auto ft = finite_type(m);
    if (!ft) throw std::domain_error("growth_poly_finite: NotFinite");
    IntPoly p(Int(1));
    for (int e : ft->all_exponents()) p = p * qint(static_cast<unsigned>(e + 1));
    return p;
}

// Steinberg's formula with the full finite-subset lattice; keeps the
// virgin (uncancelled) numerator and denominator of F(t).
struct SteinbergResult {
    RatFunc f;             // growth function f(t)
    RatFunc big_f;         // F(t) = 1/f(1/t)
    IntPoly virgin_num;    // numerator of F over the virgin denominator
    IntPoly virgin_den;    // lcm of the f_T over all finite subsets T
};

inline SteinbergResult steinberg_growth_full(const CoxeterMatrix& m) {
    const int n = m.rank();

    // Enumerate subsets inducing no infinite label (only those can be
    // finite), collect multiplicities of each distinct growth polynomial
    // signed by parity.
    std::map<IntPoly, Int> terms;
    terms[IntPoly(Int(1))] += 1; // empty subset
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, int next) -> void {
        for (int s = next; s < n; ++s) {
            bool ok = true;
            for (int c : chosen)
                if (m.infinite_label(c, s)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(s);
            auto sub = m.submatrix(chosen);
            auto ft = finite_type(sub);
            if (ft) {
                IntPoly p(Int(1));
                for (int e : ft->all_exponents()) p = p * qint(static_cast<unsigned>(e + 1));
                terms[p] += (chosen.size() % 2 == 0) ? 1 : -1;
                self(self, s + 1);
            }
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);

    IntPoly lcm_all(Int(1));
    for (const auto& [p, c] : terms) lcm_all = poly_lcm(lcm_all, p);

    IntPoly numer;
    for (const auto& [p, c] : terms) {
        if (c == 0) continue;
        numer = numer + *divide_exact(lcm_all, p) * c;
    }

    SteinbergResult r;
    r.virgin_num = numer;
    r.virgin_den = lcm_all;
    r.big_f = RatFunc(numer, lcm_all);
    if (r.big_f.is_zero()) throw std::domain_error("steinberg_growth: vanishing F (not a Coxeter growth function)");
    r.f = substitute_inverse(r.big_f).inverse();
    return r;
}

inline RatFunc steinberg_growth(const CoxeterMatrix& m) { return steinberg_growth_full(m).f; }

// --- JSON-ish matrix text format ------------------------------------------
// {"rank": n, "labels": [[i, j, m], ...]} lives in io.hpp; here only the
// construction helper used by it and by tests.
inline CoxeterMatrix make_matrix(int rank, const std::vector<std::tuple<int, int, int>>& labels) {
    CoxeterMatrix m(rank);
    for (auto& [i, j, v] : labels) m.set_label(i - 1, j - 1, v);
    return m;
}

// rank-3 triangle group (p, q, r): labels between the three generators
inline CoxeterMatrix triangle_group(int p, int q, int r) {
    CoxeterMatrix m(3);
    m.set_label(0, 1, p);
    m.set_label(1, 2, q);
    m.set_label(0, 2, r);
    return m;
}

} // namespace coxgrowth
