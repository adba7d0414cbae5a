#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coxgrowth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& x) { return boost::multiprecision::abs(x); }
inline Rat abs(const Rat& x) { return boost::multiprecision::abs(x); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

} // namespace coxgrowth
