#pragma once

// Rational functions num/den over the integers, kept in a canonical
// form so that equality is structural equality:
//   - num and den coprime over Q (primitive-part gcd over Z is trivial)
//   - joint integer content of (num, den) is 1
//   - leading coefficient of den is positive

#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace coxgrowth {

class RatFunc {
  public:
    RatFunc() : num_(), den_(Int(1)) {}
    RatFunc(IntPoly num, IntPoly den) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        canonicalize(std::move(num), std::move(den));
    }
    explicit RatFunc(IntPoly p) : RatFunc(std::move(p), IntPoly(Int(1))) {}
    explicit RatFunc(Int constant) : RatFunc(IntPoly(std::move(constant))) {}

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Valid only when den has degree 0; scales away the constant.
    IntPoly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
        if (den_.coeff(0) == 1) return num_;
        auto q = divide_exact(num_, den_);
        if (!q) throw std::domain_error("RatFunc: non-integral polynomial value");
        return *q;
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval<Rat>(x);
        if (d == 0) throw std::domain_error("RatFunc: evaluation at a pole");
        return num_.eval<Rat>(x) / d;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    // d/dt via the quotient rule, canonicalized.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

  private:
    void canonicalize(IntPoly num, IntPoly den) {
        if (num.is_zero()) {
            num_ = IntPoly();
            den_ = IntPoly(Int(1));
            return;
        }
        Int cn = content(num), cd = content(den);
        IntPoly pn = primitive_part(num), pd = primitive_part(den);
        bool neg = (num.leading() < 0) != (den.leading() < 0);
        IntPoly g = poly_gcd(pn, pd);
        if (g.degree() > 0) {
            pn = *divide_exact(pn, g);
            pd = *divide_exact(pd, g);
        }
        Int c = gcd(cn, cd);
        cn /= c;
        cd /= c;
        num_ = pn * cn;
        den_ = pd * cd;
        if (neg) num_ = -num_;
    }

    IntPoly num_, den_;
};

// f(1/t) cleared of negative powers, canonical; involutive.
inline RatFunc substitute_inverse(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("substitute_inverse: zero function");
    long dn = f.num().degree(), dd = f.den().degree();
    long k = std::max(dn, dd);
    IntPoly n = IntPoly::monomial(static_cast<std::size_t>(k - dn)) * reciprocal_poly(f.num());
    IntPoly d = IntPoly::monomial(static_cast<std::size_t>(k - dd)) * reciprocal_poly(f.den());
    return RatFunc(std::move(n), std::move(d));
}

// First `count` Maclaurin coefficients via the linear recurrence
// induced by the denominator. Requires den(0) != 0; coefficients must
// come out integral (they do for growth series).
inline std::vector<Int> taylor_coeffs(const RatFunc& f, std::size_t count) {
    if (f.den().coeff(0) == 0) throw std::domain_error("taylor_coeffs: pole at the origin");
    Rat d0(f.den().coeff(0));
    std::vector<Rat> a;
    a.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rat s(f.num().coeff(k));
        for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(f.den().degree()); ++j)
            s -= Rat(f.den().coeff(j)) * a[k - j];
        a.push_back(s / d0);
    }
    std::vector<Int> out;
    out.reserve(count);
    for (const auto& r : a) {
        if (!is_integer(r)) throw std::domain_error("taylor_coeffs: non-integral coefficient");
        out.push_back(num(r));
    }
    return out;
}

enum class ArithOp { Add, Sub, Mul, Div };

inline RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("arith: bad op");
}

} // namespace coxgrowth
