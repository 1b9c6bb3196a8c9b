#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defw/checks.hpp"
#include "defw/errors.hpp"
#include "defw/invariants_sr.hpp"

#include <random>

using namespace defw;

namespace {

QTruncPolyMatrix scalar_jet(std::vector<Rational> coeffs) {
    QTruncPolyMatrix x(1, static_cast<int>(coeffs.size()) - 1);
    for (std::size_t l = 0; l < coeffs.size(); ++l) x[static_cast<int>(l)](0, 0) = coeffs[l];
    return x;
}

// [t^l] of a polynomial product, coefficients as vectors
std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Rational> entry(const QTruncPolyMatrix& x, int i, int j) {
    std::vector<Rational> e;
    for (int l = 0; l <= x.r(); ++l) e.push_back(x[l](i, j));
    return e;
}

}  // namespace

TEST_CASE("block form of a scalar jet") {
    auto x = scalar_jet({3, 5});
    QMatrix b = to_block(x);
    QMatrix want(2, 2);
    want << 3, 0, 5, 3;
    CHECK(b == want);
    CHECK(from_block(b, 1) == x);
    QMatrix bad = want;
    bad(0, 1) = 1;
    CHECK_THROWS_AS(from_block(bad, 1), ValidationError);
}

TEST_CASE("block powers of a scalar jet") {
    auto x = scalar_jet({3, 5});
    for (int k = 1; k <= 5; ++k) {
        auto y = power_blocks(x, k);
        CHECK(y[0](0, 0) == power(Rational(3), k));
        CHECK(y[1](0, 0) == Rational(k) * power(Rational(3), k - 1) * 5);
    }
}

TEST_CASE("traces and invariants in codimension 1") {
    auto x = scalar_jet({3, 5});
    auto cp = Cprime_kl(x, 1, 1);
    CHECK(cp.rational_part == 5);
    CHECK(cp.pi_exponent == 1);
    CHECK(C_kl(x, 2, 1).rational_part == 15);
    auto c = c_kl(x, 1, 1);
    CHECK(c.rational_part == 5);
    CHECK(c.pi_exponent == 1);
}

TEST_CASE("Newton polynomials") {
    CHECK(newton_phi(1) == FormalPolynomial::variable(1));
    auto p1 = FormalPolynomial::variable(1), p2 = FormalPolynomial::variable(2);
    CHECK(newton_phi(2) == ratio(1, 2) * (p1 * p1 - p2));
    CHECK(newton_phi(3).weight() == 3);
}

TEST_CASE("inverse of a truncated polynomial matrix") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto g = random_trunc_matrix(rng, 3, 3, true);
        auto gi = inverse(g);
        REQUIRE(gi.has_value());
        CHECK(g * *gi == QTruncPolyMatrix::identity(3, 3));
    }
    QTruncPolyMatrix singular(2, 1);
    CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("jet conventions against direct expansion in codimension 2") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        auto x = random_trunc_matrix(rng, 2, 3, false);
        auto tr = entry(x, 0, 0);
        for (int l = 0; l <= 3; ++l) tr[l] += x[l](1, 1);
        auto det = poly_mul(entry(x, 0, 0), entry(x, 1, 1));
        auto off = poly_mul(entry(x, 0, 1), entry(x, 1, 0));
        std::vector<Rational> tr2;
        for (int l = 0; l <= 3; ++l) tr2.push_back((x * x)[l].trace());
        for (int l = 0; l <= 3; ++l) {
            CAPTURE(l);
            CHECK(c_kl(x, 1, l, JetConvention::Derivative).rational_part == factorial(l) * tr[l]);
            CHECK(c_kl(x, 2, l, JetConvention::Derivative).rational_part == factorial(l) * (det[l] - off[l]));
        }
        for (int l = 0; l <= 1; ++l)
            CHECK(c_kl(x, 2, l, JetConvention::AsDefined) == c_kl(x, 2, l, JetConvention::Derivative));
        // delta^2 phi_2 = p1'^2 + p1 p1'' - p2''/2 with p_i^(m) -> [t^m] tr X^i
        CHECK(c_kl(x, 2, 2).rational_part == tr[1] * tr[1] + tr[0] * tr[2] - tr2[2] / 2);
    }
}

TEST_CASE("invariance under conjugation") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        int q = 1 + static_cast<int>(rng() % 3), r = static_cast<int>(rng() % 4);
        auto x = random_trunc_matrix(rng, q, r, false);
        auto g = random_trunc_matrix(rng, q, r, true);
        for (int k = 1; k <= q; ++k)
            for (int l = 0; l <= r; ++l) {
                CHECK(check_ad_invariance(k, l, x, g));
                CHECK(check_ad_invariance(k, l, x, g, JetConvention::Derivative));
            }
    }
    QTruncPolyMatrix x(2, 1), g(2, 1);
    CHECK_THROWS_AS(check_ad_invariance(1, 0, x, g), ValidationError);
}

TEST_CASE("validation") {
    auto x = scalar_jet({1, 2});
    CHECK_THROWS_AS(c_kl(x, 2, 0), ValidationError);
    CHECK_THROWS_AS(C_kl(x, 1, 2), ValidationError);
    ScaledInvariantValue a{1, 1}, b{1, 2};
    CHECK_THROWS_AS(a + b, ValidationError);
    CHECK((a * b).pi_exponent == 3);
}

TEST_CASE("invariants suite") {
    for (const auto& r : invariants_suite(29, 40)) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
}
