#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defw/checks.hpp"
#include "defw/derivations.hpp"
#include "defw/errors.hpp"
#include "defw/parallel.hpp"
#include "defw/text.hpp"

using namespace defw;

namespace {

const AlgebraContext kQ1 = unbounded(1);

Element el(const char* s) { return parse_element(kQ1, s); }

void passes(const CheckResult& r) {
    CAPTURE(r.name);
    CAPTURE(r.note);
    CAPTURE(r.counterexample);
    CHECK(r.passed);
}

}  // namespace

TEST_CASE("dimensions in codimension one") {
    // independent sympy computation over the same quotient
    const int frozen[4][7] = {{1, 0, 0, 1, 0, 0, 0},
                              {0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 1, 1, 0, 0}};
    for (int k = 0; k < 4; ++k)
        for (int n = 0; n < 7; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(cohomology(kQ1, n, k)->dim() == frozen[k][n]);
        }
}

TEST_CASE("GV and FLK") {
    auto h = cohomology(kQ1, 3, 0);
    REQUIRE(h->dim() == 1);
    CHECK(h->representatives()[0] == el("h[1,0]*c[1,0]"));
    auto f = F_lambda(kQ1, 0, 4, 1);
    CHECK(f->dim() == 1);
    auto v = f->class_coords(el("h[1,0]*h[1,1]*c[1,0]"));
    REQUIRE(v.has_value());
    CHECK_FALSE(v->isZero());
}

TEST_CASE("class_of rejects non-cocycles") {
    CHECK_THROWS_AS(class_of(el("h[1,0]*h[1,1]"), 2, 1), ValidationError);
    CHECK(class_of(d(el("h[1,0]*h[1,1]")), 3, 1).is_zero());
}

TEST_CASE("derivations act on classes") {
    auto gv = class_of(el("h[1,0]*c[1,0]"));
    auto dgv = class_delta(gv);
    CHECK(dgv.piece->order() == 1);
    CHECK(dgv.coords == class_of(el("2*h[1,1]*c[1,0]")).coords);
    CHECK_THROWS_AS(class_sigma(gv), ValidationError);
    CHECK(class_sigma(dgv).is_zero());
}

TEST_CASE("products of derivatives of GV") {
    // sympy reduction of (2 h1 c0)(2 h4 c0 + 6 h3 c1 + 6 h2 c2 + 2 h1 c3) gives 12 h1 h2 c0 c2
    Element gv = el("h[1,0]*c[1,0]");
    auto c1 = class_of(delta(gv));
    auto c4 = class_of(delta_pow(4, gv));
    auto c2 = class_of(delta_pow(2, gv));
    auto c3 = class_of(delta_pow(3, gv));
    auto g = class_of(el("h[1,1]*h[1,2]*c[1,0]*c[1,2]"));
    CHECK_FALSE(g.is_zero());
    CHECK(class_mul(c1, c4).coords == QVector(Rational(12) * g.coords));
    CHECK(class_mul(c2, c3).coords == QVector(Rational(-12) * g.coords));
    CHECK(class_mul(c1, c3).is_zero());
}

TEST_CASE("degree 7 class of order 5") {
    auto f = F_lambda(kQ1, 0, 7, 5);
    auto v = f->class_coords(el("h[1,0]*h[1,1]*h[1,2]*c[1,0]*c[1,2]"));
    REQUIRE(v.has_value());
    CHECK_FALSE(v->isZero());
}

TEST_CASE("type filter and eigenvalue restrictions") {
    auto f = F_lambda(kQ1, 0, 6, 5, Type{2, 2});
    CHECK(f->dim() == 1);
    CHECK(f->cochain_dim() == 3);
    CHECK(type_filtered_cohomology(kQ1, 3, 0, Type{1, 1})->dim() == 1);
    CHECK_THROWS_AS(type_filtered_cohomology(unbounded(2), 3, 0, Type{1, 1}), UnsupportedError);
    QuotientPiece plus(unbounded(1, Variant::WPlus), 3, 1, std::nullopt, {});
    CHECK_THROWS_AS(delta_sigma_matrix(plus), UnsupportedError);
}

TEST_CASE("eigen decomposition of cohomology") {
    passes(eigen_decomposition(kQ1, {0, 7, 0, 5}));
    passes(eigen_decomposition(unbounded(2), {0, 5, 0, 2}));
}

TEST_CASE("delta is injective on cohomology") {
    passes(delta_injectivity(kQ1, {0, 8, 0, 4}));
    passes(delta_injectivity(unbounded(2), {0, 6, 1, 2}));
    passes(delta_injectivity(unbounded(2, Variant::WPrime), {0, 6, 0, 2}));
}

TEST_CASE("type (1,b) vanishing and rho rigidity on small grids") {
    passes(type_1b_vanishing({0, 6, 0, 4}));
    passes(rho_rigidity(1, {0, 6, 0, 1}));
}

TEST_CASE("truncated algebra") {
    auto ctx = truncated(1, 2);
    CHECK(cohomology(ctx, 3, 0)->dim() == 1);
    CHECK_NOTHROW(cohomology(ctx, 3, 3));
}

TEST_CASE("concurrent evaluation matches sequential") {
    auto ctx = unbounded(2);
    std::vector<std::pair<int, int>> cells;
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 2; ++k) cells.emplace_back(n, k);
    std::vector<Eigen::Index> par(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { par[i] = cohomology(ctx, cells[i].first, cells[i].second)->dim(); });
    for (std::size_t i = 0; i < cells.size(); ++i)
        CHECK(par[i] == CohomologyPiece(ctx, cells[i].first, cells[i].second, {}).dim());
}
