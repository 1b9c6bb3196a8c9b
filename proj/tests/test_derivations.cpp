#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defw/checks.hpp"
#include "defw/derivations.hpp"
#include "defw/errors.hpp"
#include "defw/text.hpp"

using namespace defw;

namespace {

const AlgebraContext kQ1 = unbounded(1);
const AlgebraContext kQ2 = unbounded(2);

Element el(const AlgebraContext& ctx, const char* s) { return parse_element(ctx, s); }

void all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
}

}  // namespace

TEST_CASE("d on generators and products") {
    CHECK(to_text(d(el(kQ1, "h[1,3]"))) == "c[1,3]");
    CHECK(d(el(kQ1, "c[1,3]")).is_zero());
    CHECK(to_text(d(el(kQ1, "h[1,0]*h[1,1]"))) == "-h[1,0]*c[1,1] + h[1,1]*c[1,0]");
    CHECK(d(d(el(kQ2, "h[1,0]*h[2,1]*h[2,2]*c[1,1]"))).is_zero());
}

TEST_CASE("delta of GV") {
    CHECK(to_text(delta(el(kQ1, "h[1,0]*c[1,0]"))) == "h[1,0]*c[1,1] + h[1,1]*c[1,0]");
    CHECK(to_text(delta_pow(2, el(kQ1, "h[1,0]*c[1,0]"))) ==
          "h[1,0]*c[1,2] + 2*h[1,1]*c[1,1] + h[1,2]*c[1,0]");
}

TEST_CASE("sigma and sigma' coefficients") {
    for (int a = 0; a <= 6; ++a) {
        Element x = Element::generator(kQ1, h(1, a));
        Element s = sigma(x), sp = sigma_prime(x);
        if (a < 2) CHECK(s.is_zero());
        else CHECK(s == ratio(a * (a - 1), 2) * Element::generator(kQ1, h(1, a - 1)));
        if (a < 1) CHECK(sp.is_zero());
        else CHECK(sp == Rational(a) * Element::generator(kQ1, h(1, a - 1)));
    }
}

TEST_CASE("order and length commutators on a fixed element") {
    Element x = el(kQ2, "h[1,0]*h[2,2]*c[1,1]*c[2,3] - 2/3*h[2,1]*c[1,0]*c[2,4]");
    // ord(x) = 6 and 5, length 4 and 3
    for (const auto& [m, c] : x.terms()) {
        Element t(kQ2, m, c);
        CHECK(sigma(delta(t)) - delta(sigma(t)) == Rational(m.order()) * t);
        CHECK(sigma_prime(delta(t)) - delta(sigma_prime(t)) == Rational(m.length()) * t);
    }
}

TEST_CASE("delta_i sums to delta") {
    Element x = el(kQ2, "h[1,0]*h[2,2]*c[1,1]*c[2,3]");
    CHECK(delta_i(1, x) + delta_i(2, x) == delta(x));
}

TEST_CASE("K is an odd derivation raising c to h") {
    CHECK(to_text(K(el(kQ1, "c[1,2]"))) == "h[1,3]");
    Element x = el(kQ1, "h[1,0]*c[1,1]");
    CHECK(to_text(K(x)) == "-h[1,0]*h[1,2]");
    Element y = el(kQ2, "h[1,0]*c[2,1]*c[1,0]");
    CHECK(K(y) == K_i(1, y) + K_i(2, y));
}

TEST_CASE("truncation") {
    auto ctx = truncated(1, 2);
    Element x = parse_element(ctx, "h[1,2]*c[1,0]");
    CHECK_THROWS_AS(delta(x), OrderOverflowError);
    auto soft = ctx;
    soft.truncate_overflow = true;
    CHECK(to_text(delta(with_context(x, soft))) == "h[1,2]*c[1,1]");
}

TEST_CASE("L is codimension one only") {
    CHECK(to_text(L(el(kQ1, "c[1,0]*c[1,2]"))) == "h[1,0]*c[1,2] + h[1,2]*c[1,0]");
    CHECK_THROWS_AS(L(el(kQ2, "c[2,0]")), UnsupportedError);
}

TEST_CASE("randomized identity suite, codimension 1") {
    all_pass(derivation_identity_suite(1, 7, 150));
}

TEST_CASE("randomized identity suite, codimension 2") {
    all_pass(derivation_identity_suite(2, 11, 100, 5, 4));
}

TEST_CASE("randomized identity suite, codimension 3") {
    all_pass(derivation_identity_suite(3, 13, 40, 4, 3));
}
