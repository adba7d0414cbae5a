#include <catch2/catch_amalgamated.hpp>

#include <coxgrowth/roots.hpp>

using namespace coxgrowth;

namespace {
Rat approx(double x) { return Rat(static_cast<long long>(x * 1e9), 1000000000LL); }

// the interval pins the root inside [center - tol, center + tol]
bool near(const IsolatingInterval& iv, double center, const Rat& tol) {
    return iv.lo >= approx(center) - tol && iv.hi <= approx(center) + tol;
}

// exact roots carry lo == hi, which the half-open `contains` excludes
bool hits(const IsolatingInterval& iv, const Rat& x) {
    return iv.exact ? *iv.exact == x : iv.contains(x);
}
} // namespace

TEST_CASE("root isolation in an interval") {
    // (t - 1/2)(t - 1/3)(t - 2) up to integer scaling
    IntPoly p = IntPoly({Int(-1), Int(2)}) * IntPoly({Int(-1), Int(3)}) * IntPoly({Int(-2), Int(1)});
    auto roots = isolate_roots(p, Rat(0), Rat(1));
    REQUIRE(roots.size() == 2);
    CHECK(hits(roots[0], Rat(1, 3)));
    CHECK(hits(roots[1], Rat(1, 2)));
    CHECK(roots[0].hi <= roots[1].lo);
}

TEST_CASE("multiple roots are isolated once") {
    IntPoly p = IntPoly({Int(-1), Int(2)}) * IntPoly({Int(-1), Int(2)}); // (2t-1)^2
    auto roots = isolate_roots(p, Rat(0), Rat(1));
    REQUIRE(roots.size() == 1);
    CHECK(hits(roots[0], Rat(1, 2)));
}

TEST_CASE("smallest root of the compact dodecahedron denominators") {
    // 1 - 8t + 8t^4 - t^5: smallest root in (0,1) near 0.1252421
    IntPoly p3{Int(1), Int(-8), Int(0), Int(0), Int(8), Int(-1)};
    auto r = smallest_root_in_unit_interval(p3, 10);
    CHECK(!r.exact);
    CHECK(near(r, 0.12524218, Rat(1, 1000000)));
    CHECK(r.width() < Rat(1, 1000000000));

    // 1 - 8t + 8t^5 - t^6: smallest root near 0.1250301 (not 0.1252421)
    IntPoly p4{Int(1), Int(-8), Int(0), Int(0), Int(0), Int(8), Int(-1)};
    auto r4 = smallest_root_in_unit_interval(p4, 10);
    CHECK(near(r4, 0.12503007, Rat(1, 1000000)));
    CHECK(!near(r4, 0.1252421, Rat(1, 100000)));
}

TEST_CASE("rational roots are reported exactly") {
    // (1-8t)(1-t): root 1/8
    IntPoly p = IntPoly({Int(1), Int(-8)}) * IntPoly({Int(1), Int(-1)});
    auto r = smallest_root_in_unit_interval(p, 6);
    REQUIRE(r.exact);
    CHECK(*r.exact == Rat(1, 8));
}

TEST_CASE("growth rate of rational functions") {
    // f = (1+t)^3/((1-t)(1-8t)): tau = 8 exactly
    RatFunc f(qint(2) * qint(2) * qint(2), IntPoly({Int(1), Int(-1)}) * IntPoly({Int(1), Int(-8)}));
    auto tau = growth_rate(f, 8);
    REQUIRE(tau.exact);
    CHECK(*tau.exact == 8);

    // m = 2 compact dodecahedron: tau = 4 + sqrt(15) = 7.87298...
    RatFunc f2(qint(2) * qint(2) * qint(2),
               IntPoly({Int(1), Int(-1)}) * IntPoly({Int(1), Int(-8), Int(1)}));
    auto t2 = growth_rate(f2, 10);
    CHECK(near(t2, 7.8729833462, Rat(1, 100000000)));

    CHECK_THROWS_AS(growth_rate(RatFunc(IntPoly(Int(1)), qint(2)), 6), std::domain_error);
}

TEST_CASE("cyclotomic stripping") {
    IntPoly p = cyclotomic(1) * cyclotomic(2) * cyclotomic(2) * cyclotomic(10) *
                IntPoly({Int(1), Int(-8), Int(1)});
    auto s = strip_cyclotomic(p);
    CHECK(s.remainder == IntPoly({Int(1), Int(-8), Int(1)}));
    std::map<unsigned, unsigned> f(s.factors.begin(), s.factors.end());
    CHECK(f.at(1) == 1);
    CHECK(f.at(2) == 2);
    CHECK(f.at(10) == 1);
}

TEST_CASE("trace polynomial") {
    // t^2 - 3t + 1 reciprocal: t(y - 3) with y = t + 1/t
    IntPoly p{Int(1), Int(-3), Int(1)};
    CHECK(trace_poly(p) == IntPoly({Int(-3), Int(1)}));
    // Lehmer's polynomial is reciprocal of degree 10
    IntPoly lehmer{Int(1), Int(1), Int(0), Int(-1), Int(-1), Int(-1), Int(-1), Int(-1), Int(0), Int(1), Int(1)};
    auto tr = trace_poly(lehmer);
    CHECK(tr.degree() == 5);
    // y-images of roots: T(t + 1/t) * t^5 = lehmer(t) at a sample point
    Rat x(3, 2);
    Rat y = x + 1 / x;
    CHECK(tr.eval<Rat>(y) * x * x * x * x * x == lehmer.eval<Rat>(x));
}

TEST_CASE("unit disc root counting") {
    // (2t-1)(3t-1): both roots inside
    CHECK(count_roots_in_unit_disc(IntPoly({Int(-1), Int(2)}) * IntPoly({Int(-1), Int(3)})) == 2);
    // t^2 - 3t + 1: one root inside (0.382...), one outside
    CHECK(count_roots_in_unit_disc(IntPoly({Int(1), Int(-3), Int(1)})) == 1);
    // t - 8: none inside
    CHECK(count_roots_in_unit_disc(IntPoly({Int(-8), Int(1)})) == 0);
    // odd degree with complex pair inside: (t-2)(5t^2+t+1)
    CHECK(count_roots_in_unit_disc(IntPoly({Int(-2), Int(1)}) * IntPoly({Int(1), Int(1), Int(5)})) == 2);
    // root on the circle is rejected
    CHECK_THROWS_AS(count_roots_in_unit_disc(qint(2)), std::domain_error);
}

TEST_CASE("classification: Salem") {
    // t^4 - 8t^3 + t^2 - 8t + 1, the m = 4 compact factor
    auto c = classify(IntPoly({Int(1), Int(-8), Int(1), Int(-8), Int(1)}));
    CHECK(c.kind == AlgKind::Salem);
    CHECK(!c.paper_salem_vacuous);

    // Lehmer's polynomial
    IntPoly lehmer{Int(1), Int(1), Int(0), Int(-1), Int(-1), Int(-1), Int(-1), Int(-1), Int(0), Int(1), Int(1)};
    CHECK(classify(lehmer).kind == AlgKind::Salem);

    // with cyclotomic cofactors
    auto c2 = classify(lehmer * cyclotomic(1) * cyclotomic(4));
    CHECK(c2.kind == AlgKind::Salem);
    REQUIRE(c2.salem_or_pisot_factor);
    CHECK(*c2.salem_or_pisot_factor == lehmer);
}

TEST_CASE("classification: Pisot") {
    // t - 8
    auto c = classify(IntPoly({Int(-8), Int(1)}));
    CHECK(c.kind == AlgKind::Pisot);
    // golden ratio t^2 - t - 1
    CHECK(classify(IntPoly({Int(-1), Int(-1), Int(1)})).kind == AlgKind::Pisot);
    // plastic number t^3 - t - 1
    CHECK(classify(IntPoly({Int(-1), Int(-1), Int(0), Int(1)})).kind == AlgKind::Pisot);
}

TEST_CASE("classification: quadratic reciprocal units") {
    // t^2 - 8t + 1: 4 + sqrt(15) with inverse conjugate; the Salem
    // condition set is vacuous in degree 2, reported as Pisot + flag
    auto c = classify(IntPoly({Int(1), Int(-8), Int(1)}));
    CHECK(c.kind == AlgKind::Pisot);
    CHECK(c.paper_salem_vacuous);
}

TEST_CASE("classification: cyclotomic only") {
    auto c = classify(cyclotomic(5) * cyclotomic(2));
    CHECK(c.kind == AlgKind::CyclotomicOnly);
    CHECK(!c.salem_or_pisot_factor);
}

TEST_CASE("classification: neither") {
    // t^3 - 7t^2 - 9t - 9, the reversed ideal-vertex cubic: real root
    // 8.226..., complex pair of modulus > 1
    auto c = classify(IntPoly({Int(-9), Int(-9), Int(-7), Int(1)}));
    CHECK(c.kind == AlgKind::Neither);
}

TEST_CASE("classification preconditions") {
    CHECK_THROWS_AS(classify(IntPoly({Int(0), Int(1)})), std::domain_error);  // zero root
    CHECK_THROWS_AS(classify(IntPoly({Int(1), Int(0), Int(2)})), std::domain_error); // not monic
    // sign normalization: -p classifies like p
    CHECK(classify(-IntPoly({Int(-8), Int(1)})).kind == AlgKind::Pisot);
}

TEST_CASE("family of compact numerators from a limit polynomial") {
    // P_inf = t - 8: (t^m (t-8) - (1-8t))/(t-1) should be Salem times
    // cyclotomic for all m >= 4
    auto rep = floyd_family_check(IntPoly({Int(-8), Int(1)}), 4, 12);
    CHECK(rep.p_class.kind == AlgKind::Pisot);
    for (const auto& e : rep.entries) {
        CHECK(e.division_ok);
        REQUIRE(e.cls);
        CHECK(e.cls->kind == AlgKind::Salem);
    }
    CHECK(rep.all_salem);

    // m = 2 gives t^2 - 7t + 1 and m = 3 contains t^2 - 8t + 1: both
    // land on quadratic reciprocal units, reported as vacuous Pisot
    auto rep2 = floyd_family_check(IntPoly({Int(-8), Int(1)}), 2, 3);
    REQUIRE(rep2.entries.size() == 2);
    for (const auto& e : rep2.entries) {
        REQUIRE(e.cls);
        CHECK(e.cls->kind == AlgKind::Pisot);
        CHECK(e.cls->paper_salem_vacuous);
    }
}
