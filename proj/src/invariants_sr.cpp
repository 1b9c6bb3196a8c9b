#include "defw/invariants_sr.hpp"

#include <algorithm>

namespace defw {

ScaledInvariantValue operator+(const ScaledInvariantValue& a, const ScaledInvariantValue& b) {
    if (a.rational_part == 0) return b;
    if (b.rational_part == 0) return a;
    if (a.pi_exponent != b.pi_exponent)
        throw ValidationError("adding invariant values of different pi weight");
    return {a.rational_part + b.rational_part, a.pi_exponent};
}

ScaledInvariantValue operator*(const ScaledInvariantValue& a, const ScaledInvariantValue& b) {
    return {a.rational_part * b.rational_part, a.pi_exponent + b.pi_exponent};
}

ScaledInvariantValue operator*(const Rational& s, const ScaledInvariantValue& a) {
    return {s * a.rational_part, a.pi_exponent};
}

namespace {

void check_kl(const QTruncPolyMatrix& x, int k, int l) {
    if (k < 0) throw ValidationError("k must be >= 0");
    if (l < 0 || l > x.r()) throw ValidationError("l must lie in 0..r");
}

}  // namespace

ScaledInvariantValue Cprime_kl(const QTruncPolyMatrix& x, int k, int l) {
    check_kl(x, k, l);
    return {power_blocks(x, k)[l].trace(), k};
}

ScaledInvariantValue C_kl(const QTruncPolyMatrix& x, int k, int l) {
    auto v = Cprime_kl(x, k, l);
    v.rational_part /= factorial(k);
    return v;
}

std::vector<Rational> trace_power_series(const QTruncPolyMatrix& x, int k) {
    auto p = power(x, k);
    std::vector<Rational> out;
    for (int l = 0; l <= x.r(); ++l) out.push_back(p[l].trace());
    return out;
}

FormalPolynomial FormalPolynomial::constant(const Rational& c) {
    FormalPolynomial p;
    p.add_term({}, c);
    return p;
}

FormalPolynomial FormalPolynomial::variable(int i, int m) {
    FormalPolynomial p;
    p.add_term({{{i, m}, 1}}, 1);
    return p;
}

void FormalPolynomial::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FormalPolynomial& FormalPolynomial::operator+=(const FormalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
}

namespace {

FormalPolynomial::Mono mono_mul(const FormalPolynomial::Mono& a, const FormalPolynomial::Mono& b) {
    std::map<FormalPolynomial::Var, int> e;
    for (const auto& [v, k] : a) e[v] += k;
    for (const auto& [v, k] : b) e[v] += k;
    return {e.begin(), e.end()};
}

}  // namespace

FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b) {
    FormalPolynomial p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(mono_mul(ma, mb), ca * cb);
    return p;
}

FormalPolynomial operator*(const Rational& s, FormalPolynomial a) {
    FormalPolynomial p;
    for (const auto& [m, c] : a.terms_) p.add_term(m, s * c);
    return p;
}

FormalPolynomial FormalPolynomial::delta() const {
    FormalPolynomial out;
    for (const auto& [m, c] : terms_)
        for (std::size_t t = 0; t < m.size(); ++t) {
            auto [v, e] = m[t];
            Mono rest = m;
            if (e == 1)
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            else
                rest[t].second = e - 1;
            out.add_term(mono_mul(rest, {{{v.first, v.second + 1}, 1}}), c * e);
        }
    return out;
}

std::optional<int> FormalPolynomial::weight() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (const auto& [v, e] : m) s += v.first * e;
        if (w && *w != s) return std::nullopt;
        w = s;
    }
    return w;
}

std::string to_text(const FormalPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string body;
        for (const auto& [v, e] : m) {
            if (!body.empty()) body += "*";
            body += "x" + std::to_string(v.first) + "^(" + std::to_string(v.second) + ")";
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty())
            s += to_string(a);
        else if (a == 1)
            s += body;
        else
            s += to_string(a) + "*" + body;
    }
    return s;
}

FormalPolynomial newton_phi(int k) {
    if (k < 0) throw ValidationError("newton_phi: k must be >= 0");
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<FormalPolynomial> e{FormalPolynomial::constant(1)};
    for (int n = 1; n <= k; ++n) {
        FormalPolynomial s;
        for (int i = 1; i <= n; ++i) {
            FormalPolynomial t = e[n - i] * FormalPolynomial::variable(i);
            s += (i % 2 ? Rational(1) : Rational(-1)) * t;
        }
        e.push_back(Rational(1, n) * s);
    }
    return e[k];
}

ScaledInvariantValue c_kl(const QTruncPolyMatrix& x, int k, int l, JetConvention conv) {
    if (k < 1 || k > x.q()) throw ValidationError("c_kl needs 1 <= k <= q");
    check_kl(x, k, l);
    FormalPolynomial phi = newton_phi(k);
    for (int i = 0; i < l; ++i) phi = phi.delta();
    std::map<std::pair<int, int>, Rational> memo;
    Rational v = phi.evaluate([&](int i, int m) {
        auto [it, fresh] = memo.try_emplace({i, m});
        if (fresh) {
            it->second = Cprime_kl(x, i, m).rational_part;
            if (conv == JetConvention::Derivative) it->second *= factorial(m);
        }
        return it->second;
    });
    return {v, k};
}

bool check_ad_invariance(int k, int l, const QTruncPolyMatrix& x, const QTruncPolyMatrix& g,
                         JetConvention conv) {
    auto gi = inverse(g);
    if (!gi) throw ValidationError("check_ad_invariance: g is not invertible");
    return c_kl(g * x * *gi, k, l, conv) == c_kl(x, k, l, conv);
}

}  // namespace defw
