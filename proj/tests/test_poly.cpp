#include <catch2/catch_amalgamated.hpp>

#include <coxgrowth/poly.hpp>
#include <coxgrowth/ratfunc.hpp>

using namespace coxgrowth;

TEST_CASE("polynomial arithmetic basics") {
    IntPoly p{Int(1), Int(2), Int(3)}; // 1 + 2t + 3t^2
    IntPoly q{Int(-1), Int(1)};        // t - 1

    CHECK(p.degree() == 2);
    CHECK((p + q).coeff(0) == 0);
    CHECK((p * q) == IntPoly({Int(-1), Int(-1), Int(-1), Int(3)}));
    CHECK(p.eval<Int>(Int(2)) == 17);
    CHECK(p.derivative() == IntPoly({Int(2), Int(6)}));
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly{Int(0), Int(0)}.is_zero()); // trailing zeros trimmed
}

TEST_CASE("monomials and q-integers") {
    CHECK(IntPoly::monomial(3) == IntPoly({Int(0), Int(0), Int(0), Int(1)}));
    CHECK(qint(1) == IntPoly(Int(1)));
    CHECK(qint(4) == IntPoly({Int(1), Int(1), Int(1), Int(1)}));
    CHECK(tk_minus_1(3) == IntPoly({Int(-1), Int(0), Int(0), Int(1)}));
    // [k] * (t - 1) = t^k - 1
    CHECK(qint(6) * IntPoly({Int(-1), Int(1)}) == tk_minus_1(6));
}

TEST_CASE("exact division, gcd, lcm") {
    IntPoly a = qint(2) * qint(6); // (1+t)[6]
    auto q = divide_exact(a, qint(6));
    REQUIRE(q);
    CHECK(*q == qint(2));
    CHECK(!divide_exact(a, IntPoly({Int(1), Int(0), Int(1)})));

    IntPoly g = poly_gcd(tk_minus_1(12), tk_minus_1(8));
    CHECK((g == tk_minus_1(4) || g == -tk_minus_1(4)));

    IntPoly l = poly_lcm(tk_minus_1(4), tk_minus_1(6));
    CHECK(divide_exact(l, tk_minus_1(4)));
    CHECK(divide_exact(l, tk_minus_1(6)));
    CHECK(l.degree() == 8); // lcm degree 4 + 6 - 2
}

TEST_CASE("content and primitive part") {
    IntPoly p{Int(6), Int(-9), Int(12)};
    CHECK(content(p) == 3);
    CHECK(primitive_part(p) == IntPoly({Int(2), Int(-3), Int(4)}));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly({Int(-1), Int(1)}));
    CHECK(cyclotomic(2) == IntPoly({Int(1), Int(1)}));
    CHECK(cyclotomic(6) == IntPoly({Int(1), Int(-1), Int(1)}));
    CHECK(cyclotomic(12) == IntPoly({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
    // prod over divisors of 12 equals t^12 - 1
    IntPoly prod(Int(1));
    for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod = prod * cyclotomic(d);
    CHECK(prod == tk_minus_1(12));
    CHECK(cyclotomic(105).coeff(7) == -2); // first coefficient outside {-1,0,1}
}

TEST_CASE("reciprocal and anti-reciprocal predicates") {
    IntPoly salem{Int(1), Int(-8), Int(1), Int(-8), Int(1)};
    CHECK(is_reciprocal(salem));
    CHECK(reciprocal_poly(salem) == salem);
    IntPoly anti{Int(-1), Int(9), Int(-9), Int(1)};
    CHECK(is_anti_reciprocal(anti));
    CHECK(!is_reciprocal(anti));
    CHECK(reciprocal_poly(IntPoly({Int(1), Int(-8)})) == IntPoly({Int(-8), Int(1)}));
}

TEST_CASE("string round trips") {
    IntPoly p{Int(1), Int(-8), Int(0), Int(0), Int(0), Int(8), Int(-1)};
    CHECK(to_string(p) == "1 - 8*t + 8*t^5 - t^6");
    CHECK(parse_poly("1 - 8*t + 8*t^5 - t^6") == p);
    CHECK(parse_poly("[1,-8,0,0,0,8,-1]") == p);
    CHECK(parse_poly(to_string(-p)) == -p);
}

TEST_CASE("rational function canonical form") {
    // (t^2-1)/(t-1) reduces to t+1
    RatFunc f(IntPoly({Int(-1), Int(0), Int(1)}), IntPoly({Int(-1), Int(1)}));
    CHECK(f == RatFunc(IntPoly({Int(1), Int(1)})));
    CHECK(f.is_polynomial());

    // denominator sign is fixed
    RatFunc g(IntPoly(Int(1)), IntPoly({Int(1), Int(-1)}));
    CHECK(g.den().leading() > 0);
    CHECK(g.num() == IntPoly(Int(-1)));

    // joint content cancels
    RatFunc h(IntPoly(Int(2)), IntPoly(Int(4)));
    CHECK(h.num() == IntPoly(Int(1)));
    CHECK(h.den() == IntPoly(Int(2)));
}

TEST_CASE("rational function arithmetic") {
    RatFunc one(Int(1));
    RatFunc t(IntPoly::monomial(1));
    RatFunc f = one / (one - t); // 1/(1-t)
    CHECK(f + f == RatFunc(IntPoly(Int(2)), IntPoly({Int(1), Int(-1)})));
    CHECK(f * (one - t) == one);
    CHECK(f - f == RatFunc(Int(0)));
    CHECK(f.inverse() == one - t);
    CHECK_THROWS_AS(f / RatFunc(Int(0)), std::domain_error);
    CHECK(f.eval(Rat(1, 2)) == 2);
    CHECK_THROWS_AS(f.eval(Rat(1)), std::domain_error);
}

TEST_CASE("substitution t -> 1/t is involutive") {
    RatFunc f(IntPoly({Int(1), Int(2), Int(1)}), IntPoly({Int(1), Int(0), Int(0), Int(-3)}));
    auto g = substitute_inverse(f);
    CHECK(substitute_inverse(g) == f);
    // check against evaluation
    CHECK(g.eval(Rat(2)) == f.eval(Rat(1, 2)));
}

TEST_CASE("Taylor coefficients via linear recurrence") {
    // 1/(1-t-t^2): Fibonacci
    RatFunc f(IntPoly(Int(1)), IntPoly({Int(1), Int(-1), Int(-1)}));
    auto c = taylor_coeffs(f, 8);
    CHECK(c == std::vector<Int>{1, 1, 2, 3, 5, 8, 13, 21});

    // ideal dodecahedron growth: (1+t)^3/((1-t)(1-8t))
    RatFunc g(qint(2) * qint(2) * qint(2),
              IntPoly({Int(1), Int(-1)}) * IntPoly({Int(1), Int(-8)}));
    auto d = taylor_coeffs(g, 4);
    CHECK(d == std::vector<Int>{1, 12, 103, 832});

    CHECK_THROWS_AS(taylor_coeffs(RatFunc(IntPoly(Int(1)), IntPoly::monomial(1)), 3),
                    std::domain_error);
}

TEST_CASE("squarefree part") {
    IntPoly p = qint(2) * qint(2) * IntPoly({Int(-1), Int(1)});
    IntPoly sf = squarefree_part(p);
    CHECK(sf.degree() == 2);
    CHECK(divide_exact(sf, qint(2)));
}

TEST_CASE("derivative quotient rule") {
    RatFunc f(IntPoly({Int(0), Int(1)}), IntPoly({Int(1), Int(1)})); // t/(1+t)
    auto d = f.derivative();
    CHECK(d == RatFunc(IntPoly(Int(1)), qint(2) * qint(2)));
    CHECK(d.eval(Rat(1)) == Rat(1, 4));
}
