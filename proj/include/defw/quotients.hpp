#pragma once

#include "defw/algebra.hpp"
#include "defw/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace defw {

// closure_depth caps the number of delta applications to each seed
struct IdealOptions {
    std::optional<int> closure_depth;
    auto operator<=>(const IdealOptions&) const = default;
};

// Monomial generators of the ideal before delta-closure, minimal under division.
// W: norm > q.  Wprime / Wplus: c_{1,(0)}^{j1}...c_{q,(0)}^{jq} with weight j1 + 2 j2 + ... > q.
std::vector<Monomial> ideal_seeds(const AlgebraContext& ctx);

// The ideal inside one (degree, order) piece of the free algebra, as an echelon
// form on the monomials of that piece taken in descending order.  Pivots are
// therefore the largest monomials and the surviving monomials span the quotient.
class IdealSlice {
public:
    IdealSlice(const AlgebraContext& ctx, int degree, int order, const IdealOptions& opts);

    const AlgebraContext& context() const { return ctx_; }
    int degree() const { return degree_; }
    int order() const { return order_; }
    const std::vector<Monomial>& columns() const { return columns_; }
    int column(const Monomial& m) const;
    const RowEchelon<Rational>& echelon() const { return echelon_; }
    std::vector<Monomial> normal_monomials() const;
    std::size_t spanning_size() const { return spanning_; }

    QVector vector(const Element& x) const;
    Element element(const QVector& v) const;
    bool contains(const Element& x) const;
    Element reduce(const Element& x) const;

private:
    AlgebraContext ctx_;
    int degree_;
    int order_;
    std::vector<Monomial> columns_;
    std::map<Monomial, int> index_;
    RowEchelon<Rational> echelon_;
    std::size_t spanning_ = 0;
};

// memoised, safe to call from several threads
std::shared_ptr<const IdealSlice> ideal_slice(const AlgebraContext& ctx, int degree, int order,
                                              const IdealOptions& opts = {});

bool is_in_ideal(const Element& x, const IdealOptions& opts = {});
Element reduce(const Element& x, const IdealOptions& opts = {});

// One graded piece of the quotient, optionally restricted to a single type.
class QuotientPiece {
public:
    QuotientPiece(const AlgebraContext& ctx, int degree, int order, std::optional<Type> type,
                  const IdealOptions& opts);

    const AlgebraContext& context() const { return ctx_; }
    int degree() const { return degree_; }
    int order() const { return order_; }
    const std::optional<Type>& type() const { return type_; }
    const IdealOptions& options() const { return opts_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }

    QVector coords(const Element& x) const;
    Element element(const QVector& v) const;

private:
    AlgebraContext ctx_;
    int degree_;
    int order_;
    std::optional<Type> type_;
    IdealOptions opts_;
    std::shared_ptr<const IdealSlice> slice_;
    std::vector<Monomial> basis_;
    std::vector<int> slice_column_;
};

QuotientPiece cochain_space(const AlgebraContext& ctx, int degree, int order,
                            std::optional<Type> type = std::nullopt, const IdealOptions& opts = {});

}  // namespace defw
