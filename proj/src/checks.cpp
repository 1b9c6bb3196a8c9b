#include "defw/checks.hpp"
#include "defw/derivations.hpp"
#include "defw/projectors.hpp"
#include "defw/text.hpp"

#include <algorithm>
#include <functional>

namespace defw {

Rational random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Element random_element(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree, int max_order,
                       int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_degree), ord(0, max_order), nterms(1, max_terms);
    for (;;) {
        auto basis = enumerate_basis(ctx, deg(rng), ord(rng));
        if (basis.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        Element x(ctx);
        for (int t = nterms(rng); t > 0; --t) x.add_term(basis[pick(rng)], random_rational(rng));
        if (!x.is_zero()) return x;
    }
}

QTruncPolyMatrix random_trunc_matrix(std::mt19937_64& rng, int q, int r, bool invertible) {
    for (;;) {
        QTruncPolyMatrix x(q, r);
        for (int l = 0; l <= r; ++l)
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) x[l](i, j) = random_rational(rng);
        if (!invertible || determinant(QMatrix(x[0])) != 0) return x;
    }
}

namespace {

// sum over terms of f(monomial) * coeff * monomial
Element weighted(const Element& x, const std::function<int(const Monomial&)>& f) {
    Element out(x.context());
    for (const auto& [m, c] : x.terms()) out.add_term(m, c * f(m));
    return out;
}

void expect_equal(CheckResult& r, const Element& lhs, const Element& rhs, const Element& input) {
    ++r.cases;
    if (!(lhs == rhs)) r.fail("input " + to_text(input) + ": " + to_text(lhs) + " != " + to_text(rhs));
}

}  // namespace

std::vector<CheckResult> derivation_identity_suite(int q, std::uint64_t seed, int trials,
                                                   int max_degree, int max_order) {
    AlgebraContext ctx = unbounded(q, Variant::Free);
    std::mt19937_64 rng(seed);
    CheckResult dd{"d_squared"}, ddelta{"d_delta_commute"}, dsigma{"d_sigma_commute"},
        dsigmap{"d_sigma_prime_commute"}, ordc{"order_commutator"}, lenc{"length_commutator"},
        kih{"K_i_homotopy"}, kh{"K_homotopy"}, kn{"K_norm_bound"}, lh{"L_homotopy"};
    ordc.note = "sigma delta - delta sigma = order";
    lenc.note = "sigma' delta - delta sigma' = length";
    kih.note = "delta_i = K_i d + d K_i";
    kh.note = "delta = K d + d K";
    kn.note = "||K m|| >= ||m|| - 1 for every monomial";
    lh.note = "(1+b) w = L d w + d L w on type (1,b)";

    for (int t = 0; t < trials; ++t) {
        Element x = random_element(ctx, rng, max_degree, max_order);
        expect_equal(dd, d(d(x)), Element(ctx), x);
        expect_equal(ddelta, d(delta(x)), delta(d(x)), x);
        expect_equal(dsigma, d(sigma(x)), sigma(d(x)), x);
        expect_equal(dsigmap, d(sigma_prime(x)), sigma_prime(d(x)), x);
        expect_equal(ordc, sigma(delta(x)) - delta(sigma(x)),
                     weighted(x, [](const Monomial& m) { return m.order(); }), x);
        expect_equal(lenc, sigma_prime(delta(x)) - delta(sigma_prime(x)),
                     weighted(x, [](const Monomial& m) { return m.length(); }), x);
        for (int i = 1; i <= q; ++i) expect_equal(kih, delta_i(i, x), K_i(i, d(x)) + d(K_i(i, x)), x);
        expect_equal(kh, delta(x), K(d(x)) + d(K(x)), x);
        for (const auto& [m, _] : x.terms()) {
            Element km = K(Element(ctx, m));
            for (const auto& [n, __] : km.terms()) {
                ++kn.cases;
                if (n.norm() < m.norm() - 1) kn.fail(to_text(m) + " -> " + to_text(n));
            }
        }
    }
    if (q == 1) {
        std::uniform_int_distribution<int> bdist(0, 3), odist(0, max_order);
        for (int t = 0; t < trials; ++t) {
            int b = bdist(rng);
            auto basis = enumerate_basis(ctx, 1 + 2 * b, odist(rng), Type{1, b});
            if (basis.empty()) {
                --t;
                continue;
            }
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            Element w(ctx);
            for (int k = 0; k < 3; ++k) w.add_term(basis[pick(rng)], random_rational(rng));
            expect_equal(lh, Rational(1 + b) * w, L(d(w)) + d(L(w)), w);
        }
        return {dd, ddelta, dsigma, dsigmap, ordc, lenc, kih, kh, kn, lh};
    }
    return {dd, ddelta, dsigma, dsigmap, ordc, lenc, kih, kh, kn};
}

std::vector<CheckResult> ideal_stability_suite(const AlgebraContext& ctx, const Grid& grid) {
    struct Op {
        CheckResult res;
        Operator f;
        int dn, dk;
    };
    std::vector<Op> ops;
    const std::string tag = " on " + to_string(ctx.variant) + ", q = " + std::to_string(ctx.q);
    ops.push_back({CheckResult("ideal_stable_d", "d" + tag), d, 1, 0});
    ops.push_back({CheckResult("ideal_stable_delta", "delta" + tag), delta, 0, 1});
    ops.push_back({CheckResult("ideal_stable_sigma", "sigma" + tag), sigma, 0, -1});
    if (ctx.variant == Variant::WPrime || ctx.q == 1)
        ops.push_back({CheckResult("ideal_stable_sigma_prime", "sigma'" + tag), sigma_prime, 0, -1});
    for (int n = grid.min_degree; n <= grid.max_degree; ++n)
        for (int k = grid.min_order; k <= grid.max_order; ++k) {
            auto slice = ideal_slice(ctx, n, k);
            for (auto& op : ops) {
                if (k + op.dk < 0) continue;
                if (ctx.r && k + op.dk > *ctx.r) continue;
                for (Eigen::Index i = 0; i < slice->echelon().rank(); ++i) {
                    Element g = slice->element(slice->echelon().row(i));
                    ++op.res.cases;
                    if (!is_in_ideal(op.f(g))) op.res.fail(to_text(g));
                }
            }
        }
    std::vector<CheckResult> out;
    for (auto& op : ops) out.push_back(op.res);
    return out;
}

CheckResult sigma_prime_instability_witness(int q) {
    CheckResult r{"sigma_prime_not_stable_on_I"};
    if (q < 2) throw ValidationError("the witness needs q >= 2");
    AlgebraContext ctx = unbounded(q, Variant::W);
    Element s = parse_element(ctx, "h[" + std::to_string(q) + ",1]*c[1,0]*c[1,0]");
    Element img = sigma_prime(s);
    r.cases = 1;
    r.note = "s = " + to_text(s) + " lies in I, sigma'(s) = " + to_text(img);
    if (!is_in_ideal(s)) r.fail("seed not in the ideal");
    if (is_in_ideal(img)) r.fail("sigma'(s) stayed in the ideal");
    return r;
}

std::vector<CheckResult> structure_suite(const AlgebraContext& ctx, const Grid& grid) {
    CheckResult comp{"projector_completeness"}, idem{"projector_idempotence"},
        eig{"projector_eigenvalues"}, shift{"sigma_shift"}, inv{"delta_inverse"};
    comp.note = "sum_m p_{m,k} = id";
    idem.note = "p_{m,k} p_{m',k} = [m = m'] p_{m,k}";
    eig.note = "delta sigma p_{m,k} = lambda_{m,k} p_{m,k}";
    shift.note = "sigma maps E_{lambda,k} into E_{lambda-k+1,k-1}";
    inv.note = "(1/lambda) delta sigma = id on E_{lambda,k}, lambda != 0";
    for (int n = grid.min_degree; n <= grid.max_degree; ++n)
        for (int k = std::max(1, grid.min_order); k <= grid.max_order; ++k) {
            QuotientPiece p(ctx, n, k, std::nullopt, {});
            if (p.dim() == 0) continue;
            QuotientPiece lower(ctx, n, k - 1, std::nullopt, {});
            const std::string at = "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
            std::vector<QMatrix> P;
            for (int m = 1; m <= k; ++m)
                P.push_back(operator_matrix(p, p, [m, k](const Element& x) {
                    return projector_p(m, k, x);
                }));
            QMatrix T = delta_sigma_matrix(p);
            QMatrix S = operator_matrix(p, lower, sigma);
            QMatrix D = operator_matrix(lower, p, delta);
            QMatrix Tl = delta_sigma_matrix(lower);

            QMatrix sum = QMatrix::Zero(p.dim(), p.dim());
            for (const auto& m : P) sum += m;
            ++comp.cases;
            if (sum != QMatrix::Identity(p.dim(), p.dim())) comp.fail(at);
            for (int a = 0; a < k; ++a) {
                const Rational lam = lambda_mk(a + 1, k);
                for (int b = 0; b < k; ++b) {
                    ++idem.cases;
                    QMatrix want = a == b ? P[a] : QMatrix::Zero(p.dim(), p.dim());
                    if (P[a] * P[b] != want) idem.fail(at + " m = " + std::to_string(a + 1));
                }
                ++eig.cases;
                if (T * P[a] != lam * P[a]) eig.fail(at + " m = " + std::to_string(a + 1));
                ++shift.cases;
                QMatrix SP = S * P[a];
                if (Tl * SP != (lam - (k - 1)) * SP) shift.fail(at + " m = " + std::to_string(a + 1));
                if (lam != 0) {
                    ++inv.cases;
                    if ((D * SP) / lam != P[a]) inv.fail(at + " m = " + std::to_string(a + 1));
                }
            }
        }
    return {comp, idem, eig, shift, inv};
}

CheckResult delta_injectivity(const AlgebraContext& ctx, const Grid& grid) {
    CheckResult r{"delta_injective"};
    r.note = "on " + to_string(ctx.variant) + ", q = " + std::to_string(ctx.q) + ", orders " +
             std::to_string(grid.min_order) + ".." + std::to_string(grid.max_order);
    for (int n = std::max(1, grid.min_degree); n <= grid.max_degree; ++n)
        for (int k = grid.min_order; k <= grid.max_order; ++k) {
            auto h = cohomology(ctx, n, k);
            if (h->dim() == 0) continue;
            auto h1 = cohomology(ctx, n, k + 1);
            ++r.cases;
            QMatrix m = induced_matrix(*h, *h1, delta);
            if (rank(m) != h->dim())
                r.fail("(" + std::to_string(n) + ", " + std::to_string(k) + ")");
        }
    return r;
}

CheckResult eigen_decomposition(const AlgebraContext& ctx, const Grid& grid) {
    CheckResult r{"eigen_decomposition"};
    r.note = "dim H = sum dim F_lambda, and F_lambda matches the eigenspaces of the induced delta sigma";
    for (int n = grid.min_degree; n <= grid.max_degree; ++n)
        for (int k = grid.min_order; k <= grid.max_order; ++k) {
            auto h = cohomology(ctx, n, k);
            QMatrix t = induced_matrix(*h, *h, [](const Element& x) { return delta(sigma(x)); });
            Eigen::Index total = 0;
            const int top = std::max(k, 1);
            for (int m = 1; m <= top; ++m) {
                const Rational lam = lambda_mk(m, top);
                auto f = F_lambda(ctx, lam, n, k);
                total += f->dim();
                ++r.cases;
                if (eigenspace(t, lam).cols() != f->dim())
                    r.fail("(" + std::to_string(n) + ", " + std::to_string(k) + ") lambda " + to_string(lam));
            }
            if (total != h->dim()) r.fail("(" + std::to_string(n) + ", " + std::to_string(k) + ") sum");
        }
    return r;
}

CheckResult rho_rigidity(int q, const Grid& grid) {
    CheckResult r{"rho_image_rigid"};
    AlgebraContext src = unbounded(q + 1, Variant::WPlus);
    AlgebraContext dst = unbounded(q, Variant::W);
    long cocycles = 0;
    for (int n = std::max(1, grid.min_degree); n <= grid.max_degree; ++n)
        for (int k = grid.min_order; k <= grid.max_order; ++k) {
            auto h = cohomology(src, n, k);
            const auto& z = h->cocycles();
            for (Eigen::Index j = 0; j < z.cols(); ++j) {
                ++cocycles;
                Element phi = h->cochains().element(z.col(j));
                const std::string at = "(" + std::to_string(n) + ", " + std::to_string(k) + ") " + to_text(phi);
                Element dphi = d(phi);
                for (const auto& [m, _] : dphi.terms())
                    if (m.norm() <= q + 1) r.fail(at + ": d-image has a term of norm <= q+1");
                Element rp = with_context(apply_rho(phi, q), dst);
                ++r.cases;
                if (!is_in_ideal(d(rp))) {
                    r.fail(at + ": rho image is not a cocycle");
                    continue;
                }
                auto cls = class_of(delta(rp), n, k + 1);
                if (!cls.is_zero()) r.fail(at + ": delta of the rho class is nonzero");
            }
        }
    r.note = std::to_string(cocycles) + " cocycle basis vectors of Wplus_" + std::to_string(q + 1);
    return r;
}

CheckResult type_1b_vanishing(const Grid& grid) {
    CheckResult r{"type_1b_vanishing"};
    AlgebraContext ctx = unbounded(1, Variant::W);
    std::string line;
    for (int k = grid.min_order; k <= grid.max_order; ++k)
        for (int b = 0; 1 + 2 * b <= grid.max_degree; ++b) {
            auto h = type_filtered_cohomology(ctx, 1 + 2 * b, k, Type{1, b});
            ++r.cases;
            const std::string at = "(order " + std::to_string(k) + ", b = " + std::to_string(b) + ")";
            if (b == 1) {
                line += (line.empty() ? "" : ", ") + std::to_string(h->dim());
                if (h->dim() != 1) r.fail(at + " GV line has dim " + std::to_string(h->dim()));
            } else if (h->dim() != 0) {
                r.fail(at + " dim " + std::to_string(h->dim()));
            }
        }
    r.note = "type (1,1) dims by order: " + line;
    return r;
}

Rational elementary_symmetric_minors(const QMatrix& a, int k) {
    const int n = static_cast<int>(a.rows());
    if (k == 0) return 1;
    Rational total = 0;
    std::vector<int> sel(k);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == k) {
            QMatrix s(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) s(i, j) = a(sel[i], sel[j]);
            total += determinant(s);
            return;
        }
        for (int i = from; i < n; ++i) {
            sel[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return total;
}

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b) {
    Series c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Laplace expansion along the first row
Series series_det(const std::vector<std::vector<Series>>& m, std::size_t len) {
    const std::size_t n = m.size();
    if (n == 0) {
        Series one(len, 0);
        one[0] = 1;
        return one;
    }
    Series total(len, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Series>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Series> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(row);
        }
        Series t = series_mul(m[0][j], series_det(minor, len));
        for (std::size_t l = 0; l < len; ++l) total[l] += j % 2 ? Rational(-t[l]) : t[l];
    }
    return total;
}

}  // namespace

std::vector<Rational> chern_series_minors(const QTruncPolyMatrix& x, int k) {
    const int n = x.q();
    const std::size_t len = static_cast<std::size_t>(x.r()) + 1;
    Series total(len, 0);
    std::vector<int> sel(k);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == k) {
            std::vector<std::vector<Series>> m(k, std::vector<Series>(k, Series(len, 0)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (std::size_t l = 0; l < len; ++l) m[i][j][l] = x[static_cast<int>(l)](sel[i], sel[j]);
            Series s = series_det(m, len);
            for (std::size_t l = 0; l < len; ++l) total[l] += s[l];
            return;
        }
        for (int i = from; i < n; ++i) {
            sel[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return total;
}

std::vector<CheckResult> invariants_suite(std::uint64_t seed, int trials, int max_q, int max_r) {
    std::mt19937_64 rng(seed);
    CheckResult round{"block_roundtrip"}, pw{"power_blocks"}, tau{"tau_identity"}, chern{"chern_k0"},
        dcomp{"delta_compatibility"}, ad{"ad_invariance"};
    round.note = "from_block o to_block = id; to_block respects products and brackets";
    pw.note = "power_blocks(X, k) are the blocks of to_block(X)^k, k <= 4";
    tau.note = "tr X(t)^k = sum_l tr Y_l(k) t^l";
    chern.note = "c_{k,0}(X) = e_k(A_0) by principal minors";
    dcomp.note = "derivative convention c_{k,l} = l! [t^l] c_k(X(t)); as-defined agrees for l <= 1";
    ad.note = "c_{k,l}(g X g^-1) = c_{k,l}(X), both conventions";
    for (int t = 0; t < trials; ++t) {
        const int q = 1 + t % max_q;
        const int r = (t / max_q) % (max_r + 1);
        const std::string at = "trial " + std::to_string(t) + " (q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")";
        auto x = random_trunc_matrix(rng, q, r, false);
        auto y = random_trunc_matrix(rng, q, r, false);
        auto g = random_trunc_matrix(rng, q, r, true);

        ++round.cases;
        if (!(from_block(to_block(x), q) == x) || to_block(x * y) != to_block(x) * to_block(y) ||
            to_block(bracket(x, y)) != to_block(x) * to_block(y) - to_block(y) * to_block(x))
            round.fail(at);

        QMatrix bx = to_block(x);
        QMatrix bp = QMatrix::Identity(bx.rows(), bx.cols());
        for (int k = 0; k <= 4; ++k) {
            auto ys = power_blocks(x, k);
            auto series = trace_power_series(x, k);
            ++pw.cases;
            ++tau.cases;
            for (int l = 0; l <= r; ++l) {
                if (bp.block(l * q, 0, q, q) != ys[l]) pw.fail(at + " k = " + std::to_string(k));
                if (series[l] != ys[l].trace()) tau.fail(at + " k = " + std::to_string(k));
            }
            bp = bp * bx;
        }

        for (int k = 1; k <= q; ++k) {
            ++chern.cases;
            auto c0 = c_kl(x, k, 0);
            if (c0.rational_part != elementary_symmetric_minors(x[0], k) || c0.pi_exponent != k)
                chern.fail(at + " k = " + std::to_string(k));
            auto series = chern_series_minors(x, k);
            for (int l = 0; l <= r; ++l) {
                ++dcomp.cases;
                auto v = c_kl(x, k, l, JetConvention::Derivative);
                if (v.rational_part != factorial(l) * series[l])
                    dcomp.fail(at + " k = " + std::to_string(k) + ", l = " + std::to_string(l));
                if (l <= 1 && c_kl(x, k, l).rational_part != series[l])
                    dcomp.fail(at + " as-defined, k = " + std::to_string(k) + ", l = " + std::to_string(l));
                ++ad.cases;
                if (!check_ad_invariance(k, l, x, g) ||
                    !check_ad_invariance(k, l, x, g, JetConvention::Derivative))
                    ad.fail(at + " k = " + std::to_string(k) + ", l = " + std::to_string(l));
            }
        }
    }
    return {round, pw, tau, chern, dcomp, ad};
}

}  // namespace defw
