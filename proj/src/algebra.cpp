#include "defw/algebra.hpp"

#include <algorithm>
#include <functional>

namespace defw {

int norm(const Generator& g) {
    if (g.kind == Kind::H && g.order == 0) return 0;
    return std::max(g.index - g.order, 0);
}

std::pair<int, Monomial> Monomial::from_factors(std::vector<Generator> seq) {
    // only h factors anticommute; c factors are even and commute with all
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].kind != Kind::H) continue;
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j].kind == Kind::H && seq[j] < seq[i]) ++inversions;
    }
    std::sort(seq.begin(), seq.end());
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].kind == Kind::H && seq[i] == seq[i - 1]) return {0, Monomial{}};
    Monomial m;
    m.f_ = std::move(seq);
    return {inversions % 2 ? -1 : 1, std::move(m)};
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& g : f_) d += g.degree();
    return d;
}

int Monomial::order() const {
    int o = 0;
    for (const auto& g : f_) o += g.order;
    return o;
}

Type Monomial::type() const {
    Type t;
    for (const auto& g : f_) (g.kind == Kind::H ? t.h : t.c) += 1;
    return t;
}

int Monomial::norm() const {
    int n = 0;
    for (const auto& g : f_) n += defw::norm(g);
    return n;
}

int Monomial::max_index() const {
    int m = 0;
    for (const auto& g : f_) m = std::max(m, g.index);
    return m;
}

int Monomial::max_order() const {
    int m = 0;
    for (const auto& g : f_) m = std::max(m, g.order);
    return m;
}

std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) {
    std::vector<Generator> seq = a.factors();
    seq.insert(seq.end(), b.factors().begin(), b.factors().end());
    return Monomial::from_factors(std::move(seq));
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::W: return "W";
        case Variant::WPrime: return "Wprime";
        case Variant::WPlus: return "Wplus";
        case Variant::Free: return "free";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "W") return Variant::W;
    if (s == "Wprime") return Variant::WPrime;
    if (s == "Wplus") return Variant::WPlus;
    if (s == "free") return Variant::Free;
    throw ValidationError("unknown variant '" + s + "'");
}

bool AlgebraContext::admits(const Generator& g) const {
    if (g.index < 1 || g.index > q || g.order < 0) return false;
    return !r || g.order <= *r;
}

void AlgebraContext::validate() const {
    if (q < 1) throw ValidationError("codimension q must be >= 1");
    if (r && *r < 0) throw ValidationError("jet order r must be >= 0");
}

AlgebraContext unbounded(int q, Variant v) {
    AlgebraContext ctx{q, std::nullopt, v, false};
    ctx.validate();
    return ctx;
}

AlgebraContext truncated(int q, int r, Variant v) {
    AlgebraContext ctx{q, r, v, false};
    ctx.validate();
    return ctx;
}

Generator make_generator(const AlgebraContext& ctx, Kind kind, int i, int a) {
    Generator g{kind, i, a};
    if (!ctx.admits(g))
        throw ValidationError("generator (" + std::string(kind == Kind::H ? "h" : "c") + ", " +
                              std::to_string(i) + ", " + std::to_string(a) +
                              ") outside the context");
    return g;
}

Monomial make_monomial(const AlgebraContext& ctx, const std::vector<Generator>& gens) {
    for (const auto& g : gens)
        if (!ctx.admits(g)) throw ValidationError("generator outside the context");
    auto [s, m] = Monomial::from_factors(gens);
    if (s == 0) throw ValidationError("repeated h factor gives zero");
    if (s < 0) throw ValidationError("factor sequence is not in canonical order");
    return m;
}

Element::Element(AlgebraContext ctx, const Monomial& m, Rational coeff) : ctx_(ctx) {
    add_term(m, coeff);
}

Element Element::generator(const AlgebraContext& ctx, const Generator& g) {
    return Element(ctx, make_monomial(ctx, {g}));
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, coeff);
    if (fresh) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

void Element::check(const Element& o) const {
    if (!ctx_.same_algebra(o.ctx_)) throw ValidationError("elements live in different algebras");
}

Element& Element::operator+=(const Element& o) {
    check(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check(o);
    for (const auto& [m, v] : o.terms_) add_term(m, -v);
    return *this;
}

Element& Element::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= s;
    return *this;
}

namespace {

template <typename F>
auto common(const Element::Terms& t, F f) -> std::optional<decltype(f(t.begin()->first))> {
    if (t.empty()) return std::nullopt;
    auto v = f(t.begin()->first);
    for (const auto& [m, _] : t)
        if (f(m) != v) return std::nullopt;
    return v;
}

}  // namespace

std::optional<int> Element::degree() const {
    return common(terms_, [](const Monomial& m) { return m.degree(); });
}
std::optional<int> Element::order() const {
    return common(terms_, [](const Monomial& m) { return m.order(); });
}
std::optional<int> Element::length() const {
    return common(terms_, [](const Monomial& m) { return m.length(); });
}
std::optional<Type> Element::type() const {
    return common(terms_, [](const Monomial& m) { return m.type(); });
}

std::optional<int> Element::min_norm() const {
    if (terms_.empty()) return std::nullopt;
    int n = terms_.begin()->first.norm();
    for (const auto& [m, _] : terms_) n = std::min(n, m.norm());
    return n;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Rational(-1); }
Element operator*(const Rational& s, Element a) { return a *= s; }

Element operator*(const Element& a, const Element& b) {
    if (!a.context().same_algebra(b.context()))
        throw ValidationError("elements live in different algebras");
    Element out(a.context());
    for (const auto& [ma, va] : a.terms())
        for (const auto& [mb, vb] : b.terms()) {
            auto [s, m] = multiply(ma, mb);
            if (s != 0) out.add_term(m, s * va * vb);
        }
    return out;
}

Element with_context(const Element& x, const AlgebraContext& ctx) {
    Element out(ctx);
    for (const auto& [m, v] : x.terms()) {
        for (const auto& g : m.factors())
            if (!ctx.admits(g)) throw ValidationError("term outside the target context");
        out.add_term(m, v);
    }
    return out;
}

std::vector<Monomial> enumerate_basis(const AlgebraContext& ctx, int degree, int order,
                                      std::optional<Type> type) {
    std::vector<Monomial> out;
    if (degree < 0 || order < 0) return out;
    std::vector<Generator> gens;
    const int top = ctx.r ? std::min(*ctx.r, order) : order;
    for (Kind k : {Kind::H, Kind::C})
        for (int i = 1; i <= ctx.q; ++i)
            for (int a = 0; a <= top; ++a) gens.push_back({k, i, a});

    std::vector<Generator> cur;
    std::function<void(std::size_t, int, int, int, int)> rec = [&](std::size_t from, int deg,
                                                                    int ord, int nh, int nc) {
        if (deg == 0 && ord == 0) {
            if (!type || (type->h == nh && type->c == nc)) {
                auto [s, m] = Monomial::from_factors(cur);
                out.push_back(std::move(m));
            }
            return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) {
            const auto& g = gens[k];
            if (g.degree() > deg || g.order > ord) continue;
            if (type && (g.kind == Kind::H ? nh + 1 > type->h : nc + 1 > type->c)) continue;
            cur.push_back(g);
            rec(g.kind == Kind::H ? k + 1 : k, deg - g.degree(), ord - g.order,
                nh + (g.kind == Kind::H), nc + (g.kind == Kind::C));
            cur.pop_back();
        }
    };
    rec(0, degree, order, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Element apply_rho(const Element& x, int q) {
    if (q < 1 || q > x.context().q) throw ValidationError("rho: target codimension out of range");
    AlgebraContext ctx = x.context();
    ctx.q = q;
    Element out(ctx);
    for (const auto& [m, v] : x.terms())
        if (m.max_index() <= q) out.add_term(m, v);
    return out;
}

}  // namespace defw
