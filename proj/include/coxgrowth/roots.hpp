#pragma once

// Exact real-root machinery: Sturm sequences, isolating intervals,
// unit-disc root counting via a Cauchy-index winding argument, and the
// Salem / Pisot / cyclotomic classification of integer polynomials.
// No floating point anywhere on the certified path.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "ratfunc.hpp"

namespace coxgrowth {

struct IsolatingInterval {
    Rat lo, hi;
    std::optional<Rat> exact;

    Rat width() const { return hi - lo; }
    Rat mid() const { return exact ? *exact : (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo < x && x <= hi; }
};

namespace detail {

// primitive part keeping the sign of the leading coefficient; Sturm
// chains for Cauchy indices are sign-sensitive
inline IntPoly primitive_signed(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> c(p.coeffs());
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

inline std::vector<IntPoly> sturm_chain(const IntPoly& p0, const IntPoly& p1) {
    std::vector<IntPoly> s;
    s.push_back(primitive_signed(p0));
    s.push_back(primitive_signed(p1));
    while (!s.back().is_zero()) {
        auto r = divmod(to_rat(s[s.size() - 2]), to_rat(s.back())).second;
        s.push_back(primitive_from_rat(-r));
    }
    s.pop_back();
    return s;
}

inline int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int var_at(const std::vector<IntPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sgn(q.eval<Rat>(x)));
    return variations(signs);
}

// sign of q at +inf (dir=+1) or -inf (dir=-1)
inline int var_at_infinity(const std::vector<IntPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        if (q.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(q.leading());
        if (dir < 0 && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

// removes rational roots at a given point
inline IntPoly deflate_at(IntPoly p, const Rat& x) {
    IntPoly lin({-num(x), den(x)});
    while (!p.is_zero() && p.eval<Rat>(x) == 0) p = *divide_exact(primitive_part(p), lin);
    return p;
}

} // namespace detail

// Number of distinct real roots of p in (lo, hi].
inline int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (!(lo < hi)) throw std::domain_error("sturm_count: empty interval");
    IntPoly sf = squarefree_part(p);
    int bonus = 0;
    if (sf.eval<Rat>(hi) == 0) {
        bonus = 1;
        sf = detail::deflate_at(sf, hi);
    }
    sf = detail::deflate_at(sf, lo);
    if (sf.degree() <= 0) return bonus;
    auto chain = detail::sturm_chain(sf, sf.derivative());
    return detail::var_at(chain, lo) - detail::var_at(chain, hi) + bonus;
}

// Number of distinct real roots on the whole line.
inline int sturm_count_all(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = detail::sturm_chain(sf, sf.derivative());
    return detail::var_at_infinity(chain, -1) - detail::var_at_infinity(chain, +1);
}

// Number of distinct real roots in (lo, +inf).
inline int sturm_count_above(const IntPoly& p, const Rat& lo) {
    IntPoly sf = detail::deflate_at(squarefree_part(p), lo);
    if (sf.degree() <= 0) return 0;
    auto chain = detail::sturm_chain(sf, sf.derivative());
    return detail::var_at(chain, lo) - detail::var_at_infinity(chain, +1);
}

namespace detail {

// divisors of |n|, ascending; empty when n is too large to factor cheaply
inline std::vector<Int> small_divisors(Int n) {
    n = coxgrowth::abs(n);
    std::vector<Int> divs;
    if (n == 0 || n > Int("1000000000000")) return divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Bisection refinement of an isolating interval of a squarefree
// polynomial with a strict sign change across the root.
inline void refine_interval(const IntPoly& sf, IsolatingInterval& iv, const Rat& eps) {
    if (iv.exact) {
        iv.lo = *iv.exact;
        iv.hi = *iv.exact;
        return;
    }
    int slo = sgn(sf.eval<Rat>(iv.lo));
    while (iv.hi - iv.lo >= eps) {
        Rat m = (iv.lo + iv.hi) / 2;
        int sm = sgn(sf.eval<Rat>(m));
        if (sm == 0) {
            iv.exact = m;
            iv.lo = m;
            iv.hi = m;
            return;
        }
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

} // namespace detail

// Isolating intervals for all distinct real roots of p in (lo, hi),
// sorted ascending. Roots exactly at lo/hi are excluded.
inline std::vector<IsolatingInterval> isolate_roots(const IntPoly& p, const Rat& lo, const Rat& hi) {
    IntPoly sf = detail::deflate_at(detail::deflate_at(squarefree_part(p), lo), hi);
    std::vector<IsolatingInterval> out;
    if (sf.degree() <= 0) return out;
    auto chain = detail::sturm_chain(sf, sf.derivative());
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> stack{{lo, hi, detail::var_at(chain, lo) - detail::var_at(chain, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.a, s.b, std::nullopt});
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        // a root exactly at the midpoint splits off as an exact interval
        if (sf.eval<Rat>(m) == 0) {
            out.push_back({m, m, m});
            // recurse on the halves so no other interval straddles m
            IntPoly red = detail::deflate_at(sf, m);
            for (const auto& sub : {isolate_roots(red, s.a, m), isolate_roots(red, m, s.b)})
                out.insert(out.end(), sub.begin(), sub.end());
            continue;
        }
        int vleft = detail::var_at(chain, s.a) - detail::var_at(chain, m);
        stack.push_back({s.a, m, vleft});
        stack.push_back({m, s.b, s.count - vleft});
    }
    std::sort(out.begin(), out.end(), [](const IsolatingInterval& x, const IsolatingInterval& y) {
        return x.lo < y.lo;
    });
    return out;
}

// Smallest real root of p in the open interval (0, 1); isolating
// interval of width < 10^-digits, exact when the root is rational.
inline IsolatingInterval smallest_root_in_unit_interval(const IntPoly& p, int digits) {
    if (p.is_zero()) throw std::domain_error("smallest_root_in_unit_interval: zero polynomial");
    auto roots = isolate_roots(p, Rat(0), Rat(1));
    if (roots.empty()) throw std::domain_error("smallest_root_in_unit_interval: no root in (0,1)");
    IsolatingInterval iv = roots.front();
    IntPoly sf = squarefree_part(p);

    if (!iv.exact) {
        // rational-root trial inside the isolating interval
        IntPoly dep = sf;
        std::size_t shift = 0;
        while (dep.coeff(shift) == 0) ++shift; // strip t^k factor
        auto ds = detail::small_divisors(dep.coeff(shift));
        auto ls = detail::small_divisors(dep.leading());
        for (const auto& a : ds) {
            for (const auto& b : ls) {
                Rat r(a, b);
                if (r > iv.lo && r < iv.hi && sf.eval<Rat>(r) == 0) {
                    iv.exact = r;
                    iv.lo = iv.hi = r;
                }
            }
            if (iv.exact) break;
        }
    }
    Rat eps(1);
    for (int i = 0; i < digits; ++i) eps /= 10;
    detail::refine_interval(sf, iv, eps);
    return iv;
}

// Growth rate tau = 1/r where r is the smallest real pole of f in (0,1).
inline IsolatingInterval growth_rate(const RatFunc& f, int digits) {
    if (f.den().coeff(0) == 0 || f.eval(Rat(0)) != 1)
        throw std::domain_error("growth_rate: not a growth function (f(0) != 1)");
    int d = digits;
    while (true) {
        IsolatingInterval r = [&] {
            try {
                return smallest_root_in_unit_interval(f.den(), d);
            } catch (const std::domain_error&) {
                throw std::domain_error("growth_rate: no pole in (0,1)");
            }
        }();
        if (r.exact) {
            Rat tau = 1 / *r.exact;
            return {tau, tau, tau};
        }
        // lo > 0 after enough refinement: the pole is strictly positive
        if (r.lo > 0) {
            IsolatingInterval tau{1 / r.hi, 1 / r.lo, std::nullopt};
            Rat eps(1);
            for (int i = 0; i < digits; ++i) eps /= 10;
            if (tau.width() < eps) return tau;
        }
        d += 4;
        if (d > digits + 4000) throw std::runtime_error("growth_rate: refinement did not converge");
    }
}

// --- cyclotomic stripping --------------------------------------------------

namespace detail {

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace detail

struct CyclotomicFactors {
    std::vector<std::pair<unsigned, unsigned>> factors; // (k, multiplicity)
    IntPoly remainder;
};

// Divides out every cyclotomic factor; the product of the listed
// factors times the remainder equals the input exactly.
inline CyclotomicFactors strip_cyclotomic(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("strip_cyclotomic: zero polynomial");
    CyclotomicFactors out;
    out.remainder = p;
    long d = p.degree();
    unsigned kmax = static_cast<unsigned>(2 * d * d + 8);
    for (unsigned k = 1; k <= kmax && out.remainder.degree() > 0; ++k) {
        if (detail::euler_phi(k) > static_cast<unsigned>(out.remainder.degree())) continue;
        IntPoly phi = cyclotomic(k);
        unsigned mult = 0;
        while (true) {
            auto q = divide_exact(out.remainder, phi);
            if (!q) break;
            out.remainder = *q;
            ++mult;
        }
        if (mult) out.factors.emplace_back(k, mult);
    }
    return out;
}

// --- trace polynomial and unit-disc counting -------------------------------

// For reciprocal R of even degree 2m, the unique T with
// t^m T(t + 1/t) = R(t).
inline IntPoly trace_poly(const IntPoly& r) {
    if (!is_reciprocal(r) || r.degree() % 2 != 0)
        throw std::domain_error("trace_poly: needs a reciprocal polynomial of even degree");
    long m = r.degree() / 2;
    IntPoly y = IntPoly::monomial(1);
    IntPoly c_prev(Int(2)); // C_0 = 2
    IntPoly c_cur = y;      // C_1 = y
    IntPoly t(r.coeff(static_cast<std::size_t>(m)));
    for (long j = 1; j <= m; ++j) {
        t = t + r.coeff(static_cast<std::size_t>(m + j)) * c_cur;
        IntPoly next = y * c_cur - c_prev;
        c_prev = c_cur;
        c_cur = next;
    }
    return t;
}

namespace detail {

struct CPoly {
    IntPoly re, im;
    CPoly operator*(const CPoly& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

} // namespace detail

// Number of roots (with multiplicity) of p strictly inside the unit
// disc. Requires that p has no roots on the unit circle; certified by
// the caller via gcd(p, p~) = const. Realized as an exact winding-number
// count: z = (1+iu)/(1-iu) maps the real line onto the circle, the
// Cauchy index of the resulting pair (Re, Im) gives the winding.
inline int count_roots_in_unit_disc(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("count_roots_in_unit_disc: zero polynomial");
    if (p.eval<Rat>(Rat(1)) == 0 || p.eval<Rat>(Rat(-1)) == 0)
        throw std::domain_error("count_roots_in_unit_disc: root on the unit circle");
    IntPoly work = primitive_part(p);
    if (work.degree() % 2 == 1) work = work * IntPoly({Int(-2), Int(1)}); // pad with root 2
    long d = work.degree();
    if (d == 0) return 0;

    // powers of (1 + iu) and (1 - iu)
    std::vector<detail::CPoly> up(d + 1), dn(d + 1);
    up[0] = dn[0] = {IntPoly(Int(1)), IntPoly()};
    detail::CPoly plus{IntPoly(Int(1)), IntPoly::monomial(1)};
    detail::CPoly minus{IntPoly(Int(1)), -IntPoly::monomial(1)};
    for (long k = 1; k <= d; ++k) {
        up[k] = up[k - 1] * plus;
        dn[k] = dn[k - 1] * minus;
    }
    IntPoly a, b;
    for (long k = 0; k <= d; ++k) {
        detail::CPoly term = up[k] * dn[d - k];
        a = a + work.coeff(static_cast<std::size_t>(k)) * term.re;
        b = b + work.coeff(static_cast<std::size_t>(k)) * term.im;
    }
    auto chain = detail::sturm_chain(a, b);
    int index = detail::var_at_infinity(chain, -1) - detail::var_at_infinity(chain, +1);
    long n2 = d - index;
    if (n2 % 2 != 0) throw std::runtime_error("count_roots_in_unit_disc: inconsistent index");
    return static_cast<int>(n2 / 2);
}

// --- classification --------------------------------------------------------

enum class AlgKind { Salem, Pisot, CyclotomicOnly, Neither };

inline const char* to_string(AlgKind k) {
    switch (k) {
        case AlgKind::Salem: return "Salem";
        case AlgKind::Pisot: return "Pisot";
        case AlgKind::CyclotomicOnly: return "CyclotomicOnly";
        case AlgKind::Neither: return "Neither";
    }
    return "?";
}

struct AlgebraicClass {
    AlgKind kind;
    std::optional<IntPoly> salem_or_pisot_factor;
    std::vector<std::pair<unsigned, unsigned>> cyclotomic_factors;
    // degree-2 reciprocal units satisfy the paper's Salem definition
    // vacuously; they are reported as Pisot with this flag set
    bool paper_salem_vacuous = false;
};

namespace detail {

inline bool salem_shape(const IntPoly& r) {
    if (r.degree() < 4 || r.degree() % 2 != 0 || !is_reciprocal(r)) return false;
    if (poly_gcd(r, r.derivative()).degree() > 0) return false;
    IntPoly t = trace_poly(r);
    long dt = t.degree();
    if (t.eval<Rat>(Rat(2)) == 0 || t.eval<Rat>(Rat(-2)) == 0) return false;
    if (sturm_count_all(t) != dt) return false;
    if (sturm_count_above(t, Rat(2)) != 1) return false;
    return sturm_count(t, Rat(-2), Rat(2)) == dt - 1;
}

inline bool pisot_shape(const IntPoly& r) {
    long d = r.degree();
    if (d < 1) return false;
    if (poly_gcd(r, reciprocal_poly(r)).degree() > 0) return false; // root on unit circle
    if (sturm_count_above(r, Rat(1)) != 1) return false;
    return count_roots_in_unit_disc(r) == d - 1;
}

} // namespace detail

inline AlgebraicClass classify(IntPoly p) {
    if (p.is_zero()) throw std::domain_error("classify: zero polynomial");
    if (p.leading() < 0) p = -p;
    if (p.coeff(0) == 0) throw std::domain_error("classify: ZeroRoot (p(0) = 0)");
    if (p.leading() != 1) throw std::domain_error("classify: NotMonic");

    auto stripped = strip_cyclotomic(p);
    AlgebraicClass out;
    out.cyclotomic_factors = stripped.factors;
    const IntPoly& r = stripped.remainder;

    if (r.degree() == 0) {
        out.kind = AlgKind::CyclotomicOnly;
        return out;
    }
    // quadratic reciprocal units: the Pisot shape genuinely holds but the
    // circle certificate cannot fire (r equals its own reciprocal)
    if (r.degree() == 2 && is_reciprocal(r)) {
        if (sturm_count_above(r, Rat(1)) == 1) {
            out.kind = AlgKind::Pisot;
            out.salem_or_pisot_factor = r;
            out.paper_salem_vacuous = true;
            return out;
        }
        out.kind = AlgKind::Neither;
        out.salem_or_pisot_factor = r;
        return out;
    }
    if (detail::salem_shape(r)) {
        out.kind = AlgKind::Salem;
        out.salem_or_pisot_factor = r;
        return out;
    }
    if (detail::pisot_shape(r)) {
        out.kind = AlgKind::Pisot;
        out.salem_or_pisot_factor = r;
        return out;
    }
    out.kind = AlgKind::Neither;
    out.salem_or_pisot_factor = r;
    return out;
}

// --- Floyd family check ----------------------------------------------------

struct FloydFamilyEntry {
    int m;
    bool division_ok;
    std::optional<AlgebraicClass> cls;
    bool salem_times_cyclotomic;
};

struct FloydFamilyReport {
    AlgebraicClass p_class;
    std::vector<FloydFamilyEntry> entries;
    bool all_salem = true;
};

// Forms (t^m P(t) - P~(t))/(t-1) for each m in [m_from, m_to] and
// classifies it; hypothesis check for Floyd's lemma.
inline FloydFamilyReport floyd_family_check(const IntPoly& p, int m_from, int m_to) {
    if (p.is_zero() || p.leading() != 1) throw std::domain_error("floyd_family_check: P must be monic");
    if (p.coeff(0) == 0) throw std::domain_error("floyd_family_check: P(0) = 0");
    if (p.eval<Rat>(Rat(1)) >= 0) throw std::domain_error("floyd_family_check: P(1) must be negative");
    if (is_reciprocal(p)) throw std::domain_error("floyd_family_check: P must not be reciprocal");

    FloydFamilyReport report;
    report.p_class = classify(p);
    IntPoly pr = reciprocal_poly(p);
    IntPoly tm1({Int(-1), Int(1)});
    for (int m = m_from; m <= m_to; ++m) {
        FloydFamilyEntry e{m, false, std::nullopt, false};
        IntPoly numr = IntPoly::monomial(static_cast<std::size_t>(m)) * p - pr;
        auto q = divide_exact(numr, tm1);
        if (q) {
            e.division_ok = true;
            e.cls = classify(*q);
            e.salem_times_cyclotomic = (e.cls->kind == AlgKind::Salem);
        }
        if (!e.salem_times_cyclotomic) report.all_salem = false;
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace coxgrowth
