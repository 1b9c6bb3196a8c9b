#include "defw/projectors.hpp"
#include "defw/derivations.hpp"

namespace defw {

namespace {

void expect_order(const Element& x, int k) {
    auto o = x.order();
    if (!x.is_zero() && (!o || *o != k))
        throw ValidationError("projector of order " + std::to_string(k) +
                              " applied to an element of another order");
}

}  // namespace

Rational lambda_mk(int m, int k) { return ratio((m - 1) * (2 * k - m), 2); }

std::vector<Rational> p1_coefficients(int k) {
    std::vector<Rational> a;
    for (int i = 0; i < k; ++i) {
        Rational v = power(Rational(2), i) * factorial(2 * k - i - 2) /
                     (factorial(2 * k - 2) * factorial(i));
        a.push_back(i % 2 ? Rational(-v) : v);
    }
    return a;
}

Element projector_p1(int k, const Element& x) {
    if (k < 1) throw ValidationError("p_{1,k} needs k >= 1");
    expect_order(x, k);
    auto a = p1_coefficients(k);
    Element out(x.context());
    Element s = x;
    for (int i = 0; i < k; ++i) {
        if (i > 0) s = sigma(s);
        if (s.is_zero()) break;
        out += a[i] * delta_pow(i, s);
    }
    return out;
}

Element projector_p(int m, int k, const Element& x) {
    if (m < 1 || m > k) throw ValidationError("p_{m,k} needs 1 <= m <= k");
    expect_order(x, k);
    // p_{m,k} = c * delta^{m-1} p_{1,k-m+1} sigma^{m-1}
    const int a = k - m;
    Rational coeff = power(Rational(2), m - 1) * factorial(2 * a + 1) /
                     (factorial(m - 1) * factorial(k + a));
    Element y = sigma_pow(m - 1, x);
    return coeff * delta_pow(m - 1, projector_p1(a + 1, y));
}

Element projector_p_prime(int i, int k, int l, const Element& x) {
    if (i < 0 || i > k) throw ValidationError("p'_{i,k,l} needs 0 <= i <= k");
    if (l < 1) throw ValidationError("p'_{i,k,l} needs l >= 1");
    expect_order(x, k);
    auto len = x.length();
    if (!x.is_zero() && (!len || *len != l))
        throw ValidationError("p'_{i,k,l} applied to an element of another length");
    Element out(x.context());
    Element s = sigma_prime_pow(i, x);
    for (int m = 0; m <= k - i; ++m) {
        if (m > 0) s = sigma_prime(s);
        if (s.is_zero()) break;
        Rational c = Rational(m % 2 ? -1 : 1) /
                     (factorial(i) * factorial(m) * power(Rational(l), m + i));
        out += c * delta_pow(m + i, s);
    }
    return out;
}

}  // namespace defw
