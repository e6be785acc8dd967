#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ddpoly/numpoly.hpp"

#include <random>

using namespace ddpoly;

TEST_CASE("binomial is total on Z") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 0) == 1);
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(1, 3) == 0);  // vanishing band
    CHECK(binomial(0, 2) == 0);
}

TEST_CASE("eval in the binomial basis") {
    NumericalPolynomial p({Integer(0), Integer(0), Integer(1)});  // C(t+2,2)
    CHECK(p.eval(3) == 10);
    CHECK(NumericalPolynomial{}.eval(17) == 0);
    NumericalPolynomial q({Integer(-1), Integer(2)});  // 2*C(t+1,1) - 1
    CHECK(q.eval(5) == 11);
}

TEST_CASE("to_binomial_basis on the spec inputs") {
    // t + 1 -> C(t+1,1)
    NumericalPolynomial p = to_binomial_basis({Rational(1), Rational(1)});
    CHECK(p.coeffs() == std::vector<Integer>{Integer(0), Integer(1)});

    // (t^2+3t+2)/2 -> C(t+2,2)
    NumericalPolynomial q = to_binomial_basis(
        {Rational(1), Rational(3, 2), Rational(1, 2)});
    CHECK(q.coeffs() == std::vector<Integer>{Integer(0), Integer(0), Integer(1)});

    // t^2 -> 2*C(t+2,2) - 3*C(t+1,1) + C(t,0)
    // derived independently by solving at t = 0, 1, 2
    NumericalPolynomial r =
        to_binomial_basis({Rational(0), Rational(0), Rational(1)});
    CHECK(r.coeffs() ==
          std::vector<Integer>{Integer(1), Integer(-3), Integer(2)});

    CHECK_THROWS_WITH_AS(to_binomial_basis({Rational(1, 2)}),
                         doctest::Contains("NotNumerical"), Error);
}

TEST_CASE("round trip binomial <-> dense at random points") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<int> pt(-10, 10);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Integer> cs(deg(rng) + 1);
        for (auto& c : cs) c = coeff(rng);
        NumericalPolynomial p(cs);
        CHECK(to_binomial_basis(p.to_dense()) == p);
        Dense d = p.to_dense();
        for (int j = 0; j < 20; ++j) {
            Integer t = pt(rng);
            CHECK(Rational(p.eval(t)) == eval_dense(d, t));
        }
    }
}

TEST_CASE("interpolate fits and confirms") {
    NumericalPolynomial line = interpolate({{5, 6}, {6, 7}, {7, 8}}, 1);
    CHECK(line.coeffs() == std::vector<Integer>{Integer(0), Integer(1)});  // t+1

    CHECK_THROWS_WITH_AS(interpolate({{4, 2}, {5, 2}, {6, 3}, {7, 3}}, 1),
                         doctest::Contains("NotEventuallyPolynomial"), Error);

    // values of 3*C(r+2,2) at r = 10..14
    std::vector<std::pair<long long, Integer>> pts;
    NumericalPolynomial target({Integer(0), Integer(0), Integer(3)});
    for (long long r = 10; r <= 14; ++r) pts.emplace_back(r, target.eval(r));
    CHECK(interpolate(pts, 2) == target);

    CHECK_THROWS_WITH_AS(interpolate({{0, 1}, {1, 2}}, 1),
                         doctest::Contains("WindowTooSmall"), Error);
}

TEST_CASE("interpolate recovers random polynomials") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Integer> cs(deg(rng) + 1);
        for (auto& c : cs) c = coeff(rng);
        cs.back() = cs.back() == 0 ? 1 : cs.back();
        NumericalPolynomial p(cs);
        int d = p.degree() < 0 ? 0 : p.degree();
        std::vector<std::pair<long long, Integer>> pts;
        for (long long r = 0; r <= d + 4; ++r) pts.emplace_back(r, p.eval(r));
        CHECK(interpolate(pts, d) == p);
    }
}

TEST_CASE("invariants") {
    NumericalPolynomial p({Integer(0), Integer(1), Integer(3)});
    PolyInvariants i1 = invariants(p, 1, 1);
    CHECK(i1.d == 2);
    CHECK(i1.c_d == 3);
    CHECK(i1.c_top == 3);

    NumericalPolynomial q({Integer(0), Integer(5)});
    PolyInvariants i2 = invariants(q, 1, 2);
    CHECK(i2.d == 1);
    CHECK(i2.c_d == 5);
    CHECK(i2.c_top == 0);

    CHECK_THROWS_WITH_AS(invariants(p, 1, 0),
                         doctest::Contains("DegreeExceedsCap"), Error);

    PolyInvariants z = invariants(NumericalPolynomial{}, 1, 1);
    CHECK(z.d == -1);
    CHECK(z.c_d == 0);
    CHECK(z.c_top == 0);
}

TEST_CASE("c_top equals c_d exactly when d = m+n") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Integer> cs(3);
        for (auto& c : cs) c = coeff(rng);
        NumericalPolynomial p(cs);
        PolyInvariants inv = invariants(p, 1, 1);
        CHECK((inv.c_top == inv.c_d) == (p.degree() == 2 || p.is_zero()));
    }
}

TEST_CASE("maximal_index_set matches the worked example") {
    std::set<IndexTuple> A = {{1, 1, 1}, {2, 3, 0}, {0, 2, 3}, {2, 0, 5},
                              {3, 3, 1}, {4, 1, 1}, {2, 3, 3}};
    std::set<IndexTuple> expect = {{2, 0, 5}, {3, 3, 1}, {4, 1, 1}, {2, 3, 3}};
    CHECK(maximal_index_set(A) == expect);

    CHECK(maximal_index_set({{1, 2}}) == std::set<IndexTuple>{{1, 2}});
    CHECK(maximal_index_set({{0, 0}, {1, 1}, {2, 2}}) ==
          std::set<IndexTuple>{{2, 2}});
    CHECK_THROWS_WITH_AS(maximal_index_set({}), doctest::Contains("EmptySet"),
                         Error);
}

TEST_CASE("maximal_index_set output is dominance-maximal") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> v(0, 4);
    for (int iter = 0; iter < 30; ++iter) {
        std::set<IndexTuple> E;
        for (int i = 0; i < 8; ++i) E.insert({v(rng), v(rng), v(rng)});
        auto M = maximal_index_set(E);
        for (const auto& a : M) {
            for (const auto& b : E) {
                bool dominated = a != b;
                for (size_t k = 0; k < a.size() && dominated; ++k) {
                    if (a[k] > b[k]) dominated = false;
                }
                CHECK_FALSE(dominated);
            }
        }
    }
}

TEST_CASE("multivariate basics") {
    // Phi = C(t1+1,1)*C(t2+1,1)
    MultiNumericalPolynomial phi({1, 1}, {{{1, 1}, Integer(1)}});
    CHECK(phi.eval({Integer(2), Integer(3)}) == 12);
    MultiInvariants inv = multi_invariants(phi);
    CHECK(inv.total_degree == 2);
    CHECK(inv.a_caps == 1);
    CHECK(inv.support_maxima == std::set<IndexTuple>{{1, 1}});

    MultiNumericalPolynomial zero({1, 1});
    CHECK(zero.support().empty());
    CHECK_THROWS_WITH_AS(multi_invariants(zero), doctest::Contains("EmptySet"),
                         Error);
}

TEST_CASE("multivariate basis change round trip") {
    // t1*t2 = C(t1+1,1)C(t2+1,1) - C(t1+1,1) - C(t2+1,1) + 1
    MultiDense d{{{1, 1}, Rational(1)}};
    MultiNumericalPolynomial p = to_multi_binomial_basis(d, {1, 1});
    CHECK(p.coeff({1, 1}) == 1);
    CHECK(p.coeff({1, 0}) == -1);
    CHECK(p.coeff({0, 1}) == -1);
    CHECK(p.coeff({0, 0}) == 1);
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            CHECK(p.eval({Integer(a), Integer(b)}) == a * b);
        }
    }
    CHECK_THROWS_WITH_AS(
        to_multi_binomial_basis({{{2, 0}, Rational(1)}}, {1, 1}),
        doctest::Contains("DegreeExceedsCap"), Error);
}

TEST_CASE("eventual dominance comparison") {
    NumericalPolynomial a({Integer(0), Integer(0), Integer(1)});
    NumericalPolynomial b({Integer(100), Integer(5)});
    CHECK(compare_eventual(a, b) == 1);
    CHECK(compare_eventual(b, a) == -1);
    CHECK(compare_eventual(a, a) == 0);
}
