#pragma once

#include "defw/quotients.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace defw {

using Operator = std::function<Element(const Element&)>;

// column j = coordinates of op(basis_j of from) in `to`
QMatrix operator_matrix(const QuotientPiece& from, const QuotientPiece& to, const Operator& op);

// delta o sigma on one piece of the quotient
QMatrix delta_sigma_matrix(const QuotientPiece& piece);

struct CohomologyOptions {
    std::optional<Type> type;      // q = 1 only
    std::optional<Rational> lambda;  // restrict to the delta-sigma eigencomplex
    IdealOptions ideal;
};

// H at (degree, order) of the quotient, or of a subcomplex selected by the options.
// Representatives: cocycles reduced against the echelon form of the coboundaries,
// then put in reduced echelon form themselves.
class CohomologyPiece {
public:
    CohomologyPiece(const AlgebraContext& ctx, int degree, int order, const CohomologyOptions& opts);

    const QuotientPiece& cochains() const { return cur_; }
    const CohomologyOptions& options() const { return opts_; }
    int degree() const { return cur_.degree(); }
    int order() const { return cur_.order(); }

    Eigen::Index dim() const { return reps_.rank(); }
    Eigen::Index cocycle_dim() const { return cocycles_.cols(); }
    Eigen::Index coboundary_dim() const { return boundaries_.rank(); }
    // dimension of the cochain space (or eigenspace when lambda is set)
    Eigen::Index cochain_dim() const { return cochain_dim_; }

    const QMatrix& cocycles() const { return cocycles_; }
    const RowEchelon<Rational>& coboundaries() const { return boundaries_; }
    const RowEchelon<Rational>& representative_echelon() const { return reps_; }
    std::vector<Element> representatives() const;

    bool is_cocycle(const QVector& v) const;
    bool is_coboundary(const QVector& v) const;
    // coordinates on the representatives; nullopt if v is not a cocycle of this complex
    std::optional<QVector> class_coords(const QVector& v) const;
    std::optional<QVector> class_coords(const Element& x) const;
    Element representative(const QVector& class_coords) const;

private:
    CohomologyOptions opts_;
    QuotientPiece cur_;
    QMatrix d_next_;
    QMatrix shifted_;  // delta sigma - lambda, empty without lambda
    QMatrix cocycles_;
    RowEchelon<Rational> boundaries_;
    RowEchelon<Rational> reps_;
    Eigen::Index cochain_dim_ = 0;
};

// memoised
std::shared_ptr<const CohomologyPiece> cohomology(const AlgebraContext& ctx, int degree, int order,
                                                  const CohomologyOptions& opts = {});

std::shared_ptr<const CohomologyPiece> type_filtered_cohomology(const AlgebraContext& ctx,
                                                                int degree, int order, Type type,
                                                                const IdealOptions& ideal = {});

struct EigenSpace {
    QuotientPiece piece;
    QMatrix basis;  // columns, in piece coordinates
    std::vector<Element> elements() const;
};

EigenSpace eigenspace_E(const AlgebraContext& ctx, const Rational& lambda, int degree, int order,
                        std::optional<Type> type = std::nullopt);

std::shared_ptr<const CohomologyPiece> F_lambda(const AlgebraContext& ctx, const Rational& lambda,
                                                int degree, int order,
                                                std::optional<Type> type = std::nullopt);

// matrix of an operator induced on cohomology, in representative coordinates
QMatrix induced_matrix(const CohomologyPiece& from, const CohomologyPiece& to, const Operator& op);

struct CohomologyClass {
    std::shared_ptr<const CohomologyPiece> piece;
    QVector coords;

    bool is_zero() const { return coords.isZero(); }
    Element representative() const { return piece->representative(coords); }
};

// throws ValidationError if x is not a cocycle
CohomologyClass class_of(const Element& x, int degree, int order, const CohomologyOptions& opts = {});
CohomologyClass class_of(const Element& x, const CohomologyOptions& opts = {});

CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_delta(const CohomologyClass& a);
CohomologyClass class_sigma(const CohomologyClass& a);

}  // namespace defw
