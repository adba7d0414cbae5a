#pragma once

// Dense univariate polynomials over exact coefficient rings.
//
// Coefficients are stored ascending: c[k] is the coefficient of t^k.
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace coxgrowth {

template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(T constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(std::size_t k, T coeff = T(1)) {
        if (coeff == 0) return Poly();
        std::vector<T> c(k + 1);
        c[k] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Poly(std::move(d));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }
    friend bool operator<(const Poly& a, const Poly& b) { return a.c_ < b.c_; }

    Poly operator-() const {
        std::vector<T> c(c_);
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> c(a.c_);
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    Poly pow(unsigned e) const {
        Poly r{T(1)};
        Poly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

// Quotient and remainder over the rationals.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r(a.coeffs());
    long db = b.degree();
    long da = static_cast<long>(r.size()) - 1;
    if (da < db) return {RatPoly(), a};
    std::vector<Rat> q(da - db + 1, Rat(0));
    const Rat lb = b.leading();
    for (long k = da; k >= db; --k) {
        Rat f = r[k] / lb;
        if (f == 0) continue;
        q[k - db] = f;
        for (long j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// Exact division over the integers; empty when it does not divide.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) return std::nullopt;
    std::vector<Int> c(q.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!is_integer(q.coeff(k))) return std::nullopt;
        c[k] = num(q.coeff(k));
    }
    return IntPoly(std::move(c));
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> c(p.coeffs());
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

// Clear denominators of a rational polynomial to a primitive integer
// polynomial with the same sign of leading coefficient.
inline IntPoly primitive_from_rat(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, den(c));
    std::vector<Int> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = num(p.coeff(k) * Rat(l));
    Int g = 0;
    for (const auto& x : c) g = gcd(g, x);
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

// gcd over Q realized as primitive-part gcd over Z; result is primitive
// with positive leading coefficient.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        auto r = divmod(to_rat(a), to_rat(b)).second;
        a = b;
        b = primitive_from_rat(r);
    }
    return primitive_part(a);
}

inline IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    auto g = poly_gcd(a, b);
    auto q = divide_exact(primitive_part(a) * primitive_part(b), g);
    return primitive_part(*q);
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return primitive_part(p);
    auto g = poly_gcd(p, p.derivative());
    return primitive_part(*divide_exact(primitive_part(p), g));
}

// [k] = 1 + t + ... + t^{k-1}
inline IntPoly qint(unsigned k) {
    if (k == 0) throw std::domain_error("qint: k must be positive");
    return IntPoly(std::vector<Int>(k, Int(1)));
}

// t^k - 1
inline IntPoly tk_minus_1(unsigned k) {
    std::vector<Int> c(k + 1, Int(0));
    c[0] = -1;
    c[k] = 1;
    return IntPoly(std::move(c));
}

// k-th cyclotomic polynomial, by exact division of t^k - 1 by the
// cyclotomics of the proper divisors of k.
inline IntPoly cyclotomic(unsigned k) {
    if (k == 0) throw std::domain_error("cyclotomic: k must be positive");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<unsigned> todo;
    for (unsigned d = 1; d <= k; ++d)
        if (k % d == 0 && !cache.count(d)) todo.push_back(d);
    for (unsigned d : todo) {
        IntPoly p = tk_minus_1(d);
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) p = *divide_exact(p, cache.at(e));
        cache.emplace(d, std::move(p));
    }
    return cache.at(k);
}

// P~(t) = t^{deg P} P(1/t): the coefficient sequence reversed.
inline IntPoly reciprocal_poly(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("reciprocal_poly: zero polynomial");
    std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(c));
}

inline bool is_reciprocal(const IntPoly& p) { return !p.is_zero() && reciprocal_poly(p) == p; }
inline bool is_anti_reciprocal(const IntPoly& p) { return !p.is_zero() && reciprocal_poly(p) == -p; }
inline bool is_monic_up_to_sign(const IntPoly& p) {
    return !p.is_zero() && (p.leading() == 1 || p.leading() == -1);
}

// --- text form -------------------------------------------------------------

// Renders e.g. "1 - 8*t + 8*t^5 - t^6"; the zero polynomial as "0".
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Int& c = p.coeff(k);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

inline std::string to_coeff_list(const IntPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) os << ", ";
        os << p.coeff(k);
    }
    os << "]";
    return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Int parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::invalid_argument("polynomial parse: expected integer at '" + s.substr(start) + "'");
    return Int(s.substr(start, i - start));
}

} // namespace detail

// Parses both the coefficient-list form "[1, -8, 0, 2]" and the human
// form "1 - 8*t + 8*t^5 - t^6" (terms like 3t^2, -t, +7 are accepted).
inline IntPoly parse_poly(const std::string& text) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<Int> c;
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == ']') return IntPoly(std::move(c));
        while (true) {
            c.push_back(detail::parse_int(text, i));
            detail::skip_ws(text, i);
            if (i >= text.size()) throw std::invalid_argument("polynomial parse: unterminated list");
            if (text[i] == ']') break;
            if (text[i] != ',') throw std::invalid_argument("polynomial parse: expected ','");
            ++i;
        }
        return IntPoly(std::move(c));
    }

    std::map<std::size_t, Int> terms;
    bool any = false;
    while (true) {
        detail::skip_ws(text, i);
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            detail::skip_ws(text, i);
        } else if (any) {
            throw std::invalid_argument("polynomial parse: expected '+' or '-'");
        }
        Int coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = detail::parse_int(text, i);
            have_coeff = true;
        }
        detail::skip_ws(text, i);
        std::size_t expo = 0;
        if (i < text.size() && (text[i] == '*' || text[i] == 't')) {
            if (text[i] == '*') {
                ++i;
                detail::skip_ws(text, i);
            }
            if (i >= text.size() || text[i] != 't')
                throw std::invalid_argument("polynomial parse: expected 't'");
            ++i;
            expo = 1;
            detail::skip_ws(text, i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                Int e = detail::parse_int(text, i);
                if (e < 0) throw std::invalid_argument("polynomial parse: negative exponent");
                expo = static_cast<std::size_t>(e.convert_to<unsigned long>());
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("polynomial parse: expected term");
        }
        terms[expo] += sign * coeff;
        any = true;
    }
    if (!any) throw std::invalid_argument("polynomial parse: empty input");
    std::vector<Int> c(terms.rbegin()->first + 1, Int(0));
    for (auto& [e, v] : terms) c[e] = v;
    return IntPoly(std::move(c));
}

} // namespace coxgrowth
