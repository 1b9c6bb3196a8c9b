#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace defw {

using Rational = mpq_class;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;

// "p/q" or "p"; always canonical
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view s);

// canonical n/d
Rational ratio(long n, long d);
Rational factorial(int n);
Rational binomial(int n, int k);
Rational power(const Rational& x, int n);

}  // namespace defw
