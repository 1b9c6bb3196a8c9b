#include "defw/rational.hpp"
#include "defw/errors.hpp"

#include <cctype>

namespace defw {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty rational");
    auto digits = [](std::string_view v) {
        if (!v.empty() && (v[0] == '+' || v[0] == '-')) v.remove_prefix(1);
        if (v.empty()) return false;
        for (char ch : v)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + t + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + t + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational ratio(long n, long d) {
    if (d == 0) throw ValidationError("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational power(const Rational& x, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace defw
