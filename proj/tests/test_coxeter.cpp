#include <catch2/catch_amalgamated.hpp>

#include <coxgrowth/coxeter.hpp>
#include <coxgrowth/tits.hpp>

using namespace coxgrowth;

TEST_CASE("Coxeter matrix basics") {
    CoxeterMatrix m(3);
    CHECK(m.label(0, 0) == 1);
    CHECK(m.label(0, 1) == 2);
    m.set_label(0, 1, 5);
    CHECK(m.label(1, 0) == 5);
    m.set_label(1, 2, CoxeterMatrix::kInfinity);
    CHECK(m.infinite_label(1, 2));
    CHECK_THROWS_AS(m.set_label(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(m.set_label(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(m.label(0, 3), std::out_of_range);

    auto sub = m.submatrix({0, 1});
    CHECK(sub.rank() == 2);
    CHECK(sub.label(0, 1) == 5);
}

namespace {
std::vector<std::string> type_labels(const CoxeterMatrix& m) {
    auto ft = finite_type(m);
    REQUIRE(ft);
    std::vector<std::string> ls;
    for (const auto& c : ft->components) ls.push_back(c.label);
    return ls;
}

CoxeterMatrix path_matrix(const std::vector<int>& edge_labels) {
    CoxeterMatrix m(static_cast<int>(edge_labels.size()) + 1);
    for (std::size_t i = 0; i < edge_labels.size(); ++i)
        m.set_label(static_cast<int>(i), static_cast<int>(i) + 1, edge_labels[i]);
    return m;
}
} // namespace

TEST_CASE("finite type recognition: classical families") {
    CHECK(type_labels(CoxeterMatrix(1)) == std::vector<std::string>{"A1"});
    CHECK(type_labels(path_matrix({3, 3, 3})) == std::vector<std::string>{"A4"});
    CHECK(type_labels(path_matrix({4, 3, 3})) == std::vector<std::string>{"B4"});
    CHECK(type_labels(path_matrix({3, 3, 4})) == std::vector<std::string>{"B4"});
    CHECK(type_labels(path_matrix({5, 3})) == std::vector<std::string>{"H3"});
    CHECK(type_labels(path_matrix({3, 3, 5})) == std::vector<std::string>{"H4"});
    CHECK(type_labels(path_matrix({3, 4, 3})) == std::vector<std::string>{"F4"});
    CHECK(type_labels(make_matrix(2, {{1, 2, 7}})) == std::vector<std::string>{"I2(7)"});

    // D5: path 0-1-2-3 with a branch 4 at node 1... build explicitly
    CoxeterMatrix d5(5);
    d5.set_label(0, 1, 3);
    d5.set_label(1, 2, 3);
    d5.set_label(2, 3, 3);
    d5.set_label(2, 4, 3);
    CHECK(type_labels(d5) == std::vector<std::string>{"D5"});

    // E6/E7/E8: path of length n-1 with a branch at the third node
    auto En = [](int n) {
        CoxeterMatrix m(n);
        for (int i = 0; i + 2 < n; ++i) m.set_label(i, i + 1, 3);
        m.set_label(2, n - 1, 3);
        return m;
    };
    CHECK(type_labels(En(6)) == std::vector<std::string>{"E6"});
    CHECK(type_labels(En(7)) == std::vector<std::string>{"E7"});
    CHECK(type_labels(En(8)) == std::vector<std::string>{"E8"});
}

TEST_CASE("finite type recognition: reducible and infinite") {
    // A2 x I2(5) on shuffled indices
    CoxeterMatrix m(4);
    m.set_label(0, 2, 3);
    m.set_label(1, 3, 5);
    auto ft = finite_type(m);
    REQUIRE(ft);
    REQUIRE(ft->components.size() == 2);
    CHECK(ft->components[0].label == "A2");
    CHECK(ft->components[1].label == "I2(5)");
    auto e = ft->all_exponents();
    std::sort(e.begin(), e.end());
    CHECK(e == std::vector<int>{1, 1, 2, 4});

    // affine (2,3,6) triangle is not finite
    CHECK(!finite_type(triangle_group(2, 3, 6)));
    // affine (3,3,3) and hyperbolic (2,3,7)
    CHECK(!finite_type(triangle_group(3, 3, 3)));
    CHECK(!finite_type(triangle_group(2, 3, 7)));
    // spherical (2,3,5) is finite H3
    CHECK(type_labels(triangle_group(5, 3, 2)) == std::vector<std::string>{"H3"});
    // infinite label
    CoxeterMatrix inf2(2);
    inf2.set_label(0, 1, CoxeterMatrix::kInfinity);
    CHECK(!finite_type(inf2));
    // E9-like overextended branch is not finite
    CoxeterMatrix e9(9);
    for (int i = 0; i + 2 < 9; ++i) e9.set_label(i, i + 1, 3);
    e9.set_label(2, 8, 3);
    CHECK(!finite_type(e9));
}

TEST_CASE("growth polynomials of finite groups") {
    // H3: [2][6][10], order 120
    auto h3 = growth_poly_finite(triangle_group(5, 3, 2));
    CHECK(h3 == qint(2) * qint(6) * qint(10));
    CHECK(h3.eval<Int>(Int(1)) == 120);

    // B3: [2][4][6], order 48
    auto b3 = growth_poly_finite(triangle_group(4, 3, 2));
    CHECK(b3 == qint(2) * qint(4) * qint(6));
    CHECK(b3.eval<Int>(Int(1)) == 48);

    // A1 x A1 x A1
    CHECK(growth_poly_finite(CoxeterMatrix(3)) == qint(2) * qint(2) * qint(2));

    CHECK_THROWS_AS(growth_poly_finite(triangle_group(2, 3, 7)), std::domain_error);
}

TEST_CASE("Steinberg formula agrees with Solomon on finite groups") {
    auto check_finite = [](const CoxeterMatrix& m) {
        auto st = steinberg_growth_full(m);
        IntPoly sol = growth_poly_finite(m);
        CHECK(st.f == RatFunc(sol));
    };
    check_finite(triangle_group(5, 3, 2)); // H3
    check_finite(triangle_group(4, 3, 2)); // B3
    check_finite(triangle_group(3, 3, 2)); // A3
    check_finite(path_matrix({3, 4, 3}));  // F4
    check_finite(make_matrix(2, {{1, 2, 8}})); // I2(8)
    check_finite(CoxeterMatrix(2));        // A1 x A1
}

TEST_CASE("Steinberg growth of hyperbolic triangle groups") {
    auto st = steinberg_growth_full(triangle_group(2, 3, 7));
    // f(0) = 1 and the Taylor coefficients match the word-growth oracle
    auto c = taylor_coeffs(st.f, 11);
    CHECK(c == std::vector<Int>{1, 3, 5, 7, 9, 12, 16, 20, 24, 28, 33});

    // big F and f are related by t -> 1/t
    CHECK(substitute_inverse(st.big_f).inverse() == st.f);
    // virgin form reproduces F
    CHECK(RatFunc(st.virgin_num, st.virgin_den) == st.big_f);
}

TEST_CASE("Steinberg with infinite labels") {
    // free product Z/2 * Z/2 * Z/2: all labels infinite; f = (1+t)/(1-2t)
    CoxeterMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) m.set_label(i, j, CoxeterMatrix::kInfinity);
    auto f = steinberg_growth(m);
    CHECK(f == RatFunc(IntPoly({Int(1), Int(1)}), IntPoly({Int(1), Int(-2)})));
}

TEST_CASE("word-growth oracle: small groups") {
    // single generator: 1, 1, 0, 0
    CHECK(tits_bfs_sphere_sizes(CoxeterMatrix(1), 3) ==
          std::vector<Int>{1, 1, 0, 0});

    // (Z/2)^3 right-angled: spheres are binomials 1, 3, 3, 1
    CHECK(tits_bfs_sphere_sizes(CoxeterMatrix(3), 4) ==
          std::vector<Int>{1, 3, 3, 1, 0});

    // I2(4): dihedral of order 8
    auto d = tits_bfs_sphere_sizes(make_matrix(2, {{1, 2, 4}}), 6);
    CHECK(d == std::vector<Int>{1, 2, 2, 2, 1, 0, 0});

    // H3 exhausts at order 120
    auto h3 = tits_bfs_sphere_sizes(triangle_group(5, 3, 2), 20);
    Int total = 0;
    for (const auto& x : h3) total += x;
    CHECK(total == 120);
}

TEST_CASE("word-growth oracle matches Steinberg Taylor coefficients") {
    for (auto [p, q, r] : {std::array<int, 3>{2, 3, 7}, {2, 4, 5}, {3, 3, 4}}) {
        auto m = triangle_group(p, q, r);
        auto spheres = tits_bfs_sphere_sizes(m, 10);
        auto taylor = taylor_coeffs(steinberg_growth(m), 11);
        CHECK(std::vector<Int>(spheres.begin(), spheres.end()) == taylor);
    }
}

TEST_CASE("word-growth oracle guards") {
    CoxeterMatrix m(2);
    m.set_label(0, 1, CoxeterMatrix::kInfinity);
    CHECK_THROWS_AS(tits_bfs_sphere_sizes(m, 3), std::domain_error);
    CHECK_THROWS_AS(tits_bfs_sphere_sizes(triangle_group(2, 3, 7), 10, 5), OracleTooLarge);
}
