#pragma once

#include "defw/errors.hpp"
#include "defw/linalg.hpp"
#include "defw/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace defw {

// q x q matrix over R[t]/(t^{r+1}), stored as coefficients A_0..A_r
template <typename Scalar>
class TruncPolyMatrix {
public:
    TruncPolyMatrix(int q, int r) : q_(q), r_(r), a_(r + 1, Mat<Scalar>::Zero(q, q)) {
        if (q < 1 || r < 0) throw ValidationError("TruncPolyMatrix: need q >= 1 and r >= 0");
    }

    static TruncPolyMatrix identity(int q, int r) {
        TruncPolyMatrix x(q, r);
        x.a_[0] = Mat<Scalar>::Identity(q, q);
        return x;
    }

    int q() const { return q_; }
    int r() const { return r_; }
    Mat<Scalar>& operator[](int l) { return a_.at(l); }
    const Mat<Scalar>& operator[](int l) const { return a_.at(l); }

    TruncPolyMatrix& operator+=(const TruncPolyMatrix& o) {
        same_shape(o);
        for (int l = 0; l <= r_; ++l) a_[l] += o.a_[l];
        return *this;
    }
    TruncPolyMatrix& operator-=(const TruncPolyMatrix& o) {
        same_shape(o);
        for (int l = 0; l <= r_; ++l) a_[l] -= o.a_[l];
        return *this;
    }

    friend TruncPolyMatrix operator+(TruncPolyMatrix a, const TruncPolyMatrix& b) { return a += b; }
    friend TruncPolyMatrix operator-(TruncPolyMatrix a, const TruncPolyMatrix& b) { return a -= b; }

    friend TruncPolyMatrix operator*(const TruncPolyMatrix& a, const TruncPolyMatrix& b) {
        a.same_shape(b);
        TruncPolyMatrix c(a.q_, a.r_);
        for (int i = 0; i <= a.r_; ++i)
            for (int j = 0; i + j <= a.r_; ++j) c.a_[i + j] += a.a_[i] * b.a_[j];
        return c;
    }

    bool operator==(const TruncPolyMatrix& o) const {
        return q_ == o.q_ && r_ == o.r_ && a_ == o.a_;
    }

private:
    void same_shape(const TruncPolyMatrix& o) const {
        if (q_ != o.q_ || r_ != o.r_) throw ValidationError("TruncPolyMatrix: shape mismatch");
    }

    int q_;
    int r_;
    std::vector<Mat<Scalar>> a_;
};

template <typename Scalar>
TruncPolyMatrix<Scalar> bracket(const TruncPolyMatrix<Scalar>& a, const TruncPolyMatrix<Scalar>& b) {
    return a * b - b * a;
}

// nullopt when A_0 is singular
template <typename Scalar>
std::optional<TruncPolyMatrix<Scalar>> inverse(const TruncPolyMatrix<Scalar>& x) {
    auto b0 = inverse(x[0]);
    if (!b0) return std::nullopt;
    TruncPolyMatrix<Scalar> y(x.q(), x.r());
    y[0] = *b0;
    for (int n = 1; n <= x.r(); ++n) {
        Mat<Scalar> s = Mat<Scalar>::Zero(x.q(), x.q());
        for (int j = 1; j <= n; ++j) s += x[j] * y[n - j];
        y[n] = -(*b0) * s;
    }
    return y;
}

template <typename Scalar>
TruncPolyMatrix<Scalar> power(const TruncPolyMatrix<Scalar>& x, int k) {
    if (k < 0) throw ValidationError("negative power");
    auto y = TruncPolyMatrix<Scalar>::identity(x.q(), x.r());
    for (int i = 0; i < k; ++i) y = y * x;
    return y;
}

// block (i, j) = A_{i-j} for i >= j, zero above the diagonal
template <typename Scalar>
Mat<Scalar> to_block(const TruncPolyMatrix<Scalar>& x) {
    const int q = x.q(), n = x.r() + 1;
    Mat<Scalar> b = Mat<Scalar>::Zero(n * q, n * q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) b.block(i * q, j * q, q, q) = x[i - j];
    return b;
}

template <typename Scalar>
TruncPolyMatrix<Scalar> from_block(const Mat<Scalar>& b, int q) {
    if (q < 1 || b.rows() != b.cols() || b.rows() % q != 0)
        throw ValidationError("from_block: size is not a multiple of q");
    const int n = static_cast<int>(b.rows()) / q;
    TruncPolyMatrix<Scalar> x(q, n - 1);
    for (int l = 0; l < n; ++l) x[l] = b.block(l * q, 0, q, q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<Scalar> want = i >= j ? x[i - j] : Mat<Scalar>::Zero(q, q);
            if (b.block(i * q, j * q, q, q) != want)
                throw ValidationError("from_block: not block lower-triangular Toeplitz");
        }
    return x;
}

// Y_0(k)..Y_r(k): the coefficients of X^k
template <typename Scalar>
std::vector<Mat<Scalar>> power_blocks(const TruncPolyMatrix<Scalar>& x, int k) {
    auto p = power(x, k);
    std::vector<Mat<Scalar>> y;
    for (int l = 0; l <= x.r(); ++l) y.push_back(p[l]);
    return y;
}

// rational_part * (-1/(2 pi))^pi_exponent
struct ScaledInvariantValue {
    Rational rational_part;
    int pi_exponent = 0;

    bool operator==(const ScaledInvariantValue& o) const {
        return rational_part == o.rational_part && (pi_exponent == o.pi_exponent || rational_part == 0);
    }
};

ScaledInvariantValue operator+(const ScaledInvariantValue& a, const ScaledInvariantValue& b);
ScaledInvariantValue operator*(const ScaledInvariantValue& a, const ScaledInvariantValue& b);
ScaledInvariantValue operator*(const Rational& s, const ScaledInvariantValue& a);

using QTruncPolyMatrix = TruncPolyMatrix<Rational>;

ScaledInvariantValue C_kl(const QTruncPolyMatrix& x, int k, int l);
ScaledInvariantValue Cprime_kl(const QTruncPolyMatrix& x, int k, int l);

// tr X(t)^k as coefficients of t^0..t^r
std::vector<Rational> trace_power_series(const QTruncPolyMatrix& x, int k);

// Polynomials in x_i^{(m)}; variables keyed by (i, m).
class FormalPolynomial {
public:
    using Var = std::pair<int, int>;
    using Mono = std::vector<std::pair<Var, int>>;  // sorted, positive exponents

    static FormalPolynomial constant(const Rational& c);
    static FormalPolynomial variable(int i, int m = 0);

    const std::map<Mono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Mono& m, const Rational& c);

    FormalPolynomial& operator+=(const FormalPolynomial& o);
    friend FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b) { return a += b; }
    friend FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b);
    friend FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b);
    friend FormalPolynomial operator*(const Rational& s, FormalPolynomial a);
    bool operator==(const FormalPolynomial& o) const { return terms_ == o.terms_; }

    // x_i^{(m)} -> x_i^{(m+1)}, extended as an unsigned derivation
    FormalPolynomial delta() const;
    // sum of i * exponent, when all terms agree
    std::optional<int> weight() const;

    template <typename F>
    Rational evaluate(F&& value) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m) t *= power(value(v.first, v.second), e);
            total += t;
        }
        return total;
    }

private:
    std::map<Mono, Rational> terms_;
};

std::string to_text(const FormalPolynomial& p);

// e_k through the power sums p_1..p_k
FormalPolynomial newton_phi(int k);

// AsDefined substitutes x_i^{(m)} -> C'_{i,m}; Derivative substitutes m! C'_{i,m},
// which makes c_{k,l} the l-th t-derivative of c_k(X(t)) at t = 0.
enum class JetConvention { AsDefined, Derivative };

ScaledInvariantValue c_kl(const QTruncPolyMatrix& x, int k, int l,
                          JetConvention conv = JetConvention::AsDefined);

// throws ValidationError if A_0 of g is singular
bool check_ad_invariance(int k, int l, const QTruncPolyMatrix& x, const QTruncPolyMatrix& g,
                         JetConvention conv = JetConvention::AsDefined);

}  // namespace defw
