#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defw/checks.hpp"
#include "defw/derivations.hpp"
#include "defw/errors.hpp"
#include "defw/projectors.hpp"
#include "defw/quotients.hpp"
#include "defw/codim1_report.hpp"
#include "defw/text.hpp"

#include <random>

using namespace defw;

namespace {

const AlgebraContext kQ1 = unbounded(1);

Element el(const char* s) { return parse_element(kQ1, s); }

void all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        CHECK(r.passed);
    }
}

// homogeneous random element of fixed order and length
Element random_piece(const AlgebraContext& ctx, std::mt19937_64& rng, int degree, int order, int length) {
    Element x(ctx);
    for (const auto& m : enumerate_basis(ctx, degree, order))
        if (m.length() == length && rng() % 2) x.add_term(m, random_rational(rng));
    return x;
}

}  // namespace

TEST_CASE("eigenvalues") {
    CHECK(lambda_mk(1, 5) == 0);
    CHECK(lambda_mk(2, 5) == 4);
    CHECK(lambda_mk(3, 5) == 7);
    CHECK(lambda_mk(5, 5) == 10);
    CHECK(lambda_mk(2, 3) == 2);
}

TEST_CASE("p_{1,k} coefficients") {
    CHECK(p1_coefficients(1) == std::vector<Rational>{1});
    CHECK(p1_coefficients(2) == std::vector<Rational>{1, -1});
    CHECK(p1_coefficients(3) == std::vector<Rational>{1, ratio(-1, 2), ratio(1, 6)});
}

TEST_CASE("printed images") {
    CHECK(reduce(projector_p1(4, el("h[1,4]*c[1,0]"))) ==
          reduce(el("-1/5*h[1,3]*c[1,1] + 3/5*h[1,2]*c[1,2] - 1/5*h[1,1]*c[1,3]")));
    CHECK(reduce(projector_p1(3, el("h[1,1]*c[1,2]*c[1,0]"))) == reduce(el("-h[1,1]*c[1,1]^2")));
    for (const auto& e : printed_projector_images()) {
        CAPTURE(e.input);
        Element diff = projector_p1(e.k, el(e.input)) - el(e.printed);
        CHECK(is_in_ideal(diff));
    }
}

TEST_CASE("projectors validate the order") {
    CHECK_THROWS_AS(projector_p1(3, el("h[1,1]*c[1,1]")), ValidationError);
    CHECK_THROWS_AS(projector_p(4, 3, el("h[1,1]*c[1,2]")), ValidationError);
    CHECK_THROWS_AS(projector_p_prime(0, 3, 3, el("h[1,1]*c[1,2]")), ValidationError);
}

TEST_CASE("structure identities, codimension 1") {
    all_pass(structure_suite(kQ1, {0, 7, 1, 5}));
}

TEST_CASE("structure identities, codimension 2 and the primed quotient") {
    all_pass(structure_suite(unbounded(2), {0, 5, 1, 3}));
    all_pass(structure_suite(unbounded(2, Variant::WPrime), {0, 5, 1, 3}));
}

TEST_CASE("length projectors") {
    std::mt19937_64 rng(5);
    for (const auto& ctx : {unbounded(1, Variant::Free), unbounded(2, Variant::Free)})
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= n; ++l) {
                    Element x = random_piece(ctx, rng, n, k, l);
                    if (x.is_zero()) continue;
                    CAPTURE(to_text(x));
                    Element total(ctx);
                    for (int i = 0; i <= k; ++i) {
                        Element p = projector_p_prime(i, k, l, x);
                        total += p;
                        CHECK(delta(sigma_prime(p)) == Rational(i * l) * p);
                        CHECK(projector_p_prime(i, k, l, p) == p);
                        for (int j = 0; j <= k; ++j)
                            if (j != i) CHECK(projector_p_prime(j, k, l, p).is_zero());
                    }
                    CHECK(total == x);
                }
}

TEST_CASE("length projectors descend to the primed quotient") {
    auto ctx = unbounded(2, Variant::WPrime);
    for (int k = 1; k <= 3; ++k) {
        auto slice = ideal_slice(ctx, 5, k);
        for (Eigen::Index r = 0; r < slice->echelon().rank(); ++r) {
            Element g = slice->element(slice->echelon().row(r));
            for (int i = 0; i <= k; ++i) {
                Element p(ctx);
                for (const auto& [m, c] : g.terms())
                    if (m.length() == 3) p += projector_p_prime(i, k, 3, Element(ctx, m, c));
                CHECK(is_in_ideal(p));
            }
        }
    }
}
