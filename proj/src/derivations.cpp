#include "defw/derivations.hpp"

namespace defw {

namespace {

// raising the order of g; past r this is an error unless the context truncates
GeneratorImage raise(Kind k, const Generator& g, const AlgebraContext& ctx) {
    Generator up{k, g.index, g.order + 1};
    if (!ctx.admits(up)) {
        if (ctx.truncate_overflow) return std::nullopt;
        throw OrderOverflowError("order of " + std::string(g.kind == Kind::H ? "h" : "c") + "_" +
                                 std::to_string(g.index) + " would exceed r = " +
                                 std::to_string(*ctx.r));
    }
    return std::make_pair(Rational(1), up);
}

}  // namespace

Element apply_derivation(const DerivationRule& rule, const Element& x) {
    const AlgebraContext& ctx = x.context();
    Element out(ctx);
    for (const auto& [m, v] : x.terms()) {
        const auto& f = m.factors();
        int odd_before = 0;
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (auto img = rule.image(f[t], ctx)) {
                std::vector<Generator> seq = f;
                seq[t] = img->second;
                auto [s, mono] = Monomial::from_factors(std::move(seq));
                if (s != 0) {
                    if (rule.odd && odd_before % 2) s = -s;
                    out.add_term(mono, s * img->first * v);
                }
            }
            if (f[t].odd()) ++odd_before;
        }
    }
    return out;
}

DerivationRule rule_d() {
    return {true, [](const Generator& g, const AlgebraContext&) -> GeneratorImage {
                if (g.kind == Kind::C) return std::nullopt;
                return std::make_pair(Rational(1), Generator{Kind::C, g.index, g.order});
            }};
}

DerivationRule rule_delta() {
    return {false, [](const Generator& g, const AlgebraContext& ctx) {
                return raise(g.kind, g, ctx);
            }};
}

DerivationRule rule_delta_i(int i) {
    return {false, [i](const Generator& g, const AlgebraContext& ctx) -> GeneratorImage {
                if (g.index != i) return std::nullopt;
                return raise(g.kind, g, ctx);
            }};
}

DerivationRule rule_sigma() {
    return {false, [](const Generator& g, const AlgebraContext&) -> GeneratorImage {
                if (g.order < 2) return std::nullopt;
                return std::make_pair(ratio(g.order * (g.order - 1), 2),
                                      Generator{g.kind, g.index, g.order - 1});
            }};
}

DerivationRule rule_sigma_prime() {
    return {false, [](const Generator& g, const AlgebraContext&) -> GeneratorImage {
                if (g.order < 1) return std::nullopt;
                return std::make_pair(Rational(g.order), Generator{g.kind, g.index, g.order - 1});
            }};
}

DerivationRule rule_K_i(int i) {
    return {true, [i](const Generator& g, const AlgebraContext& ctx) -> GeneratorImage {
                if (g.kind != Kind::C || g.index != i) return std::nullopt;
                return raise(Kind::H, g, ctx);
            }};
}

DerivationRule rule_L() {
    return {true, [](const Generator& g, const AlgebraContext& ctx) -> GeneratorImage {
                if (ctx.q != 1) throw UnsupportedError("L is only defined in codimension 1");
                if (g.kind != Kind::C) return std::nullopt;
                return std::make_pair(Rational(1), Generator{Kind::H, g.index, g.order});
            }};
}

Element d(const Element& x) { return apply_derivation(rule_d(), x); }
Element delta(const Element& x) { return apply_derivation(rule_delta(), x); }
Element delta_i(int i, const Element& x) { return apply_derivation(rule_delta_i(i), x); }
Element sigma(const Element& x) { return apply_derivation(rule_sigma(), x); }
Element sigma_prime(const Element& x) { return apply_derivation(rule_sigma_prime(), x); }
Element K_i(int i, const Element& x) { return apply_derivation(rule_K_i(i), x); }
Element L(const Element& x) {
    if (x.context().q != 1) throw UnsupportedError("L is only defined in codimension 1");
    return apply_derivation(rule_L(), x);
}

Element K(const Element& x) {
    Element out(x.context());
    for (int i = 1; i <= x.context().q; ++i) out += K_i(i, x);
    return out;
}

Element delta_pow(int n, Element x) {
    for (int k = 0; k < n; ++k) x = delta(x);
    return x;
}

Element sigma_pow(int n, Element x) {
    for (int k = 0; k < n; ++k) x = sigma(x);
    return x;
}

Element sigma_prime_pow(int n, Element x) {
    for (int k = 0; k < n; ++k) x = sigma_prime(x);
    return x;
}

}  // namespace defw
