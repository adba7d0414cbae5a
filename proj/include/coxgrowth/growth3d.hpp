#pragma once

// Growth functions of reflection groups of 3-polyhedra: Parry's vertex
// formula, the Steinberg route through face adjacencies, virgin forms,
// ridge-pair difference functions, derivative identities at t = 1, the
// compact/ideal numerator relation, and certified deformation sweeps.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coxeter.hpp"
#include "polyhedron.hpp"
#include "roots.hpp"

namespace coxgrowth {

struct NotCompact : std::domain_error {
    NotCompact() : std::domain_error("NotCompact: Parry's formula needs a compact polyhedron") {}
};

struct NotAdmissible : std::domain_error {
    explicit NotAdmissible(const std::string& w) : std::domain_error("NotAdmissible: " + w) {}
};

// Coxeter matrix of the reflection group: one generator per face,
// labels from shared edges, infinity for non-adjacent faces.
inline std::pair<CoxeterMatrix, std::vector<std::string>> coxeter_matrix_of(const CombPolyhedron& p) {
    std::vector<std::string> order;
    for (const auto& [id, cyc] : p.faces) order.push_back(id);
    CoxeterMatrix m(static_cast<int>(order.size()));
    auto adj = face_adjacency(p);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            auto key = order[i] < order[j] ? std::make_pair(order[i], order[j])
                                           : std::make_pair(order[j], order[i]);
            auto it = adj.find(key);
            if (it == adj.end())
                m.set_label(static_cast<int>(i), static_cast<int>(j), CoxeterMatrix::kInfinity);
            else
                m.set_label(static_cast<int>(i), static_cast<int>(j), angle_label(p, it->second));
        }
    return {m, order};
}

// g_v(t) = (t(1-t)/2) prod_i (t^{m_i}-1)/(t^{m_i+1}-1) over the Coxeter
// exponents m_i of the vertex stabilizer.
inline RatFunc vertex_term(const std::vector<int>& exponents) {
    IntPoly num = IntPoly::monomial(1) * IntPoly{Int(1), Int(-1)}; // t(1-t)
    IntPoly den(Int(2));
    for (int m : exponents) {
        num = num * tk_minus_1(static_cast<unsigned>(m));
        den = den * tk_minus_1(static_cast<unsigned>(m + 1));
    }
    return RatFunc(std::move(num), std::move(den));
}

inline std::vector<int> triangle_exponents(int k, int l, int m) {
    auto ft = finite_type(triangle_group(k, l, m));
    if (!ft)
        throw NotAdmissible("triangle (" + std::to_string(k) + "," + std::to_string(l) + "," +
                            std::to_string(m) + ") is not finite");
    return ft->all_exponents();
}

// F(t) = (t-1)/(t+1) + sum over vertices of g_v(t); f(t) = 1/F(1/t).
inline RatFunc parry_growth(const CombPolyhedron& p) {
    if (!is_compact(p)) throw NotCompact();
    RatFunc F(IntPoly{Int(-1), Int(1)}, IntPoly{Int(1), Int(1)});
    for (VertexId v : vertex_set(p)) {
        std::vector<int> labels;
        for (const auto& e : edges_at_vertex(p, v)) labels.push_back(angle_label(p, e));
        F = F + vertex_term(triangle_exponents(labels[0], labels[1], labels[2]));
    }
    return substitute_inverse(F).inverse();
}

struct GrowthReport {
    RatFunc f;
    RatFunc big_f;
    IntPoly virgin_num, virgin_den;
    IsolatingInterval tau;
    AlgebraicClass tau_class;
    bool anti_reciprocal = false;
    bool compact = false;
};

inline GrowthReport polyhedral_growth(const CombPolyhedron& p, int digits = 12) {
    auto vr = validate(p);
    if (!vr.ok()) throw std::domain_error("polyhedral_growth: invalid polyhedron: " + vr.errors.front());
    auto ar = andreev_check(p);
    if (!ar.all_pass())
        throw std::domain_error("polyhedral_growth: Andreev condition " + ar.failing().front() + " fails");

    auto [mat, order] = coxeter_matrix_of(p);
    (void)order;
    auto st = steinberg_growth_full(mat);

    GrowthReport r;
    r.f = st.f;
    r.big_f = st.big_f;
    r.virgin_num = st.virgin_num;
    r.virgin_den = st.virgin_den;
    r.compact = is_compact(p);
    r.tau = growth_rate(st.f, digits);
    r.tau_class = classify(reciprocal_poly(st.f.den()));
    r.anti_reciprocal = (substitute_inverse(st.f) == -st.f);
    return r;
}

// --- ideal structure (single 4-valent ideal vertex) ------------------------

struct StructureCertificate {
    IntPoly p_inf, q_inf;
    std::vector<std::pair<std::string, bool>> clauses;
    bool ok = true;

    bool clause(const std::string& name) const {
        for (const auto& [n, v] : clauses)
            if (n == name) return v;
        return false;
    }
};

// F in virgin form must be t(t-1)P_inf/Q_inf with cyclotomic Q_inf,
// degree gap 2, P_inf(0) != 0 and P_inf(1) < 0.
inline StructureCertificate ideal_structure_check(const GrowthReport& r) {
    if (r.compact) throw std::domain_error("ideal_structure_check: input is compact");
    StructureCertificate c;
    c.q_inf = r.virgin_den;

    IntPoly t_t1{Int(0), Int(-1), Int(1)}; // t(t-1)
    auto q = divide_exact(r.virgin_num, t_t1);
    bool divisible = q.has_value();
    c.clauses.emplace_back("numerator divisible by t(t-1)", divisible);
    if (divisible) c.p_inf = *q;

    bool cyc = false;
    if (c.q_inf.degree() > 0) {
        auto s = strip_cyclotomic(c.q_inf);
        cyc = (s.remainder.degree() == 0 && s.remainder.coeff(0) == 1);
    }
    c.clauses.emplace_back("Q_inf is a product of cyclotomics", cyc);

    bool gap = divisible && (c.q_inf.degree() - c.p_inf.degree() == 2);
    c.clauses.emplace_back("deg Q_inf - deg P_inf = 2", gap);

    bool p0 = divisible && c.p_inf.coeff(0) != 0;
    c.clauses.emplace_back("P_inf(0) != 0", p0);

    bool p1 = divisible && c.p_inf.eval<Rat>(Rat(1)) < 0;
    c.clauses.emplace_back("P_inf(1) < 0", p1);

    for (const auto& [n, v] : c.clauses) c.ok = c.ok && v;
    return c;
}

// --- ridge-pair differences -------------------------------------------------

// Local contribution of a ridge to 1/f(t): the edge stabilizer minus the
// two vertex stabilizers.
inline RatFunc ridge_local_term(int k1, int k2, int n, int l1, int l2) {
    IntPoly f_e = qint(2) * qint(static_cast<unsigned>(n));
    IntPoly f_v(Int(1)), f_w(Int(1));
    for (int e : triangle_exponents(k1, k2, n)) f_v = f_v * qint(static_cast<unsigned>(e + 1));
    for (int e : triangle_exponents(l1, l2, n)) f_w = f_w * qint(static_cast<unsigned>(e + 1));
    RatFunc one(Int(1));
    return one / RatFunc(f_e) - one / RatFunc(f_v) - one / RatFunc(f_w);
}

// 1/f_1(t) - 1/f_2(t) for two ridges differing only in the middle label.
inline RatFunc ridge_pair_difference(const std::array<int, 5>& h1, const std::array<int, 5>& h2) {
    auto canon = [](std::array<int, 5> h) {
        if (h[0] > h[1]) std::swap(h[0], h[1]);
        if (h[3] > h[4]) std::swap(h[3], h[4]);
        if (std::make_pair(h[3], h[4]) < std::make_pair(h[0], h[1])) {
            std::swap(h[0], h[3]);
            std::swap(h[1], h[4]);
        }
        return h;
    };
    auto a = canon(h1), b = canon(h2);
    if (a[0] != b[0] || a[1] != b[1] || a[3] != b[3] || a[4] != b[4])
        throw NotAdmissible("ridge types differ outside the middle label");
    if (a[2] >= b[2]) throw NotAdmissible("middle labels must increase");
    RatFunc diff = ridge_local_term(a[0], a[1], a[2], a[3], a[4]) -
                   ridge_local_term(b[0], b[1], b[2], b[3], b[4]);
    return substitute_inverse(diff);
}

inline RatFunc ridge_pair_difference(const RidgeDescriptor& h1, const RidgeDescriptor& h2) {
    return ridge_pair_difference(std::array<int, 5>{h1.k1, h1.k2, h1.n, h1.l1, h1.l2},
                                 std::array<int, 5>{h2.k1, h2.k2, h2.n, h2.l1, h2.l2});
}

// (t^n/(1-t^n)) ((1-t)/(1+t))^2, the limit difference at a contracted
// <2,2,n,2,2> ridge.
inline RatFunc ideal_limit_difference(int n) {
    if (n < 2) throw std::invalid_argument("ideal_limit_difference: n must be >= 2");
    IntPoly one_minus_t{Int(1), Int(-1)};
    IntPoly one_plus_t{Int(1), Int(1)};
    IntPoly tn = IntPoly::monomial(static_cast<std::size_t>(n));
    return RatFunc(tn * one_minus_t * one_minus_t,
                   (IntPoly(Int(1)) - tn) * one_plus_t * one_plus_t);
}

// Exact dg_v/dt(1) for a finite triangle stabilizer.
inline Rat vertex_derivative_at_one(int k, int l, int m) {
    return vertex_term(triangle_exponents(k, l, m)).derivative().eval(Rat(1));
}

// --- derivative identity at t = 1 -------------------------------------------

struct DerivativeVerdict {
    Rat dF_n, dF_inf, difference;
    bool matches_quarter_n = false;
    bool vertex_sum_matches = false;
    bool negative = false;
    bool ok() const { return matches_quarter_n && vertex_sum_matches && negative; }
};

inline DerivativeVerdict derivative_identity_check(const CombPolyhedron& p_n,
                                                   const CombPolyhedron& p_inf, int n) {
    DerivativeVerdict v;
    RatFunc F_n = substitute_inverse(parry_growth(p_n)).inverse();
    auto [mat, order] = coxeter_matrix_of(p_inf);
    (void)order;
    RatFunc F_inf = steinberg_growth_full(mat).big_f;

    v.dF_n = F_n.derivative().eval(Rat(1));
    v.dF_inf = F_inf.derivative().eval(Rat(1));
    v.difference = v.dF_n - v.dF_inf;
    v.matches_quarter_n = (v.difference == Rat(1, 4 * n));

    Rat vertex_sum(1, 2);
    for (VertexId vert : vertex_set(p_n)) {
        std::vector<int> labels;
        for (const auto& e : edges_at_vertex(p_n, vert)) labels.push_back(angle_label(p_n, e));
        vertex_sum += vertex_derivative_at_one(labels[0], labels[1], labels[2]);
    }
    v.vertex_sum_matches = (vertex_sum == v.dF_n);
    v.negative = (v.dF_n < 0);
    return v;
}

// --- compact/ideal numerator relation ---------------------------------------

struct FloydVerdict {
    IntPoly p_compact; // t^{n+1} P_inf - reciprocal(P_inf)
    bool matches = false;
    bool vanishes_at_one = false;
    AlgebraicClass cls;
    bool ok() const { return matches && vanishes_at_one; }
};

// The compact member's F must be (t-1)P/((t^n - 1)Q_inf) with
// P = t^{n+1} P_inf - reciprocal(P_inf).
inline FloydVerdict floyd_relation_check(const StructureCertificate& cert, const RatFunc& big_f_n,
                                         int n) {
    if (!cert.ok) throw std::domain_error("floyd_relation_check: certificate is not valid");
    FloydVerdict v;
    v.p_compact = IntPoly::monomial(static_cast<std::size_t>(n + 1)) * cert.p_inf -
                  reciprocal_poly(cert.p_inf);
    IntPoly t_minus_1{Int(-1), Int(1)};
    IntPoly tn_minus_1 = tk_minus_1(static_cast<unsigned>(n));
    v.matches = (RatFunc(t_minus_1 * v.p_compact, tn_minus_1 * cert.q_inf) == big_f_n);
    v.vanishes_at_one = (v.p_compact.eval<Rat>(Rat(1)) == 0);
    v.cls = classify(v.p_compact);
    return v;
}

// --- deformation sweeps ------------------------------------------------------

struct SweepRow {
    std::optional<int> n; // absent for the contracted limit
    RatFunc f;
    IsolatingInterval tau;
    AlgebraicClass cls;
};

struct SweepTable {
    std::vector<SweepRow> rows; // finite labels ascending, then the limit
    bool monotone_certified = false;
    bool all_compact_salem = false;
    bool limit_pisot = false;
};

inline SweepTable deformation_sweep(const CombPolyhedron& p, EdgeKey e, int n_from, int n_to,
                                    int digits = 10, int jobs = 1) {
    e = edge_key(e.first, e.second);
    if (n_from < 2 || n_to < n_from) throw std::invalid_argument("deformation_sweep: bad range");
    if (jobs < 1) jobs = 1;

    std::vector<int> ns;
    for (int n = n_from; n <= n_to; ++n) ns.push_back(n);

    SweepTable table;
    table.rows.resize(ns.size() + 1);
    std::vector<std::string> failures(ns.size() + 1);

    auto run_one = [&](std::size_t idx) {
        try {
            CombPolyhedron q = p;
            q.angles.at(e) = ns[idx];
            auto r = polyhedral_growth(q, digits);
            table.rows[idx] = {ns[idx], r.f, r.tau, r.tau_class};
        } catch (const std::exception& ex) {
            failures[idx] = ex.what();
        }
    };

    if (jobs == 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t i = static_cast<std::size_t>(j); i < ns.size();
                     i += static_cast<std::size_t>(jobs))
                    run_one(i);
            });
        for (auto& t : pool) t.join();
        (void)next;
    }

    // the limit: relabel to 2 (any valid label), then contract
    try {
        CombPolyhedron q = p;
        q.angles.at(e) = 2;
        auto contracted = contract_ridge(q, e);
        auto r = polyhedral_growth(contracted, digits);
        table.rows.back() = {std::nullopt, r.f, r.tau, r.tau_class};
    } catch (const std::exception& ex) {
        failures.back() = ex.what();
    }

    for (const auto& msg : failures)
        if (!msg.empty()) throw std::domain_error("deformation_sweep: " + msg);

    // certify strict interval ordering, refining when intervals touch
    bool mono = true;
    for (std::size_t i = 0; i + 1 < table.rows.size() && mono; ++i) {
        int d = digits;
        int rounds = 0;
        while (true) {
            const auto& a = table.rows[i].tau;
            const auto& b = table.rows[i + 1].tau;
            if (a.hi < b.lo || (a.exact && b.exact && *a.exact < *b.exact)) break;
            if (a.exact && b.exact) {
                mono = false;
                break;
            }
            if (++rounds > 1000) {
                mono = false;
                break;
            }
            d += 6;
            table.rows[i].tau = growth_rate(table.rows[i].f, d);
            table.rows[i + 1].tau = growth_rate(table.rows[i + 1].f, d);
        }
    }
    table.monotone_certified = mono;

    table.all_compact_salem = true;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        if (table.rows[i].cls.kind != AlgKind::Salem &&
            !(table.rows[i].cls.kind == AlgKind::Pisot && table.rows[i].cls.paper_salem_vacuous))
            table.all_compact_salem = false;
    table.limit_pisot = (table.rows.back().cls.kind == AlgKind::Pisot);
    return table;
}

} // namespace coxgrowth
