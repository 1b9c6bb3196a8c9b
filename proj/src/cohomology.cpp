#include "defw/cohomology.hpp"
#include "defw/derivations.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace defw {

QMatrix operator_matrix(const QuotientPiece& from, const QuotientPiece& to, const Operator& op) {
    QMatrix m = QMatrix::Zero(to.dim(), from.dim());
    for (Eigen::Index j = 0; j < from.dim(); ++j) {
        Element img = op(Element(from.context(), from.basis()[j]));
        if (!img.is_zero()) m.col(j) = to.coords(img);
    }
    return m;
}

QMatrix delta_sigma_matrix(const QuotientPiece& piece) {
    if (piece.context().variant == Variant::WPlus)
        throw UnsupportedError("delta does not preserve the Wplus ideal");
    return operator_matrix(piece, piece, [](const Element& x) { return delta(sigma(x)); });
}

namespace {

std::optional<Type> shift(std::optional<Type> t, int dh) {
    if (!t) return t;
    return Type{t->h + dh, t->c - dh};
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
    QMatrix s(a.rows() + b.rows(), a.cols());
    if (a.rows()) s.topRows(a.rows()) = a;
    if (b.rows()) s.bottomRows(b.rows()) = b;
    return s;
}

QMatrix shifted_delta_sigma(const QuotientPiece& p, const Rational& lambda) {
    QMatrix t = delta_sigma_matrix(p);
    for (Eigen::Index i = 0; i < t.rows(); ++i) t(i, i) -= lambda;
    return t;
}

}  // namespace

CohomologyPiece::CohomologyPiece(const AlgebraContext& ctx, int degree, int order,
                                 const CohomologyOptions& opts)
    : opts_(opts), cur_(ctx, degree, order, opts.type, opts.ideal) {
    if (opts.type && ctx.q != 1)
        throw UnsupportedError("type filtration is only a grading in codimension 1");
    // d lowers the number of h factors by one
    QuotientPiece next(ctx, degree + 1, order, shift(opts.type, -1), opts.ideal);
    d_next_ = operator_matrix(cur_, next, d);

    QMatrix d_prev;
    if (degree > 0) {
        QuotientPiece prev(ctx, degree - 1, order, shift(opts.type, +1), opts.ideal);
        d_prev = operator_matrix(prev, cur_, d);
        if (opts.lambda) d_prev = d_prev * kernel(QMatrix(shifted_delta_sigma(prev, *opts.lambda)));
    } else {
        d_prev = QMatrix::Zero(cur_.dim(), 0);
    }

    if (opts.lambda) {
        shifted_ = shifted_delta_sigma(cur_, *opts.lambda);
        cochain_dim_ = kernel(shifted_).cols();
        cocycles_ = kernel(stack(d_next_, shifted_));
    } else {
        cochain_dim_ = cur_.dim();
        cocycles_ = kernel(d_next_);
    }
    boundaries_ = column_space(d_prev);
    reps_ = RowEchelon<Rational>(cur_.dim());
    for (Eigen::Index j = 0; j < cocycles_.cols(); ++j)
        reps_.insert(boundaries_.reduced(cocycles_.col(j)));
}

std::vector<Element> CohomologyPiece::representatives() const {
    std::vector<Element> out;
    for (Eigen::Index i = 0; i < reps_.rank(); ++i) out.push_back(cur_.element(reps_.row(i)));
    return out;
}

bool CohomologyPiece::is_cocycle(const QVector& v) const {
    if (d_next_.rows() && !(d_next_ * v).isZero()) return false;
    if (opts_.lambda && shifted_.rows() && !(shifted_ * v).isZero()) return false;
    return true;
}

bool CohomologyPiece::is_coboundary(const QVector& v) const { return boundaries_.contains(v); }

std::optional<QVector> CohomologyPiece::class_coords(const QVector& v) const {
    if (!is_cocycle(v)) return std::nullopt;
    auto c = reps_.coordinates(boundaries_.reduced(v));
    if (!c) throw std::logic_error("cocycle outside cocycles + coboundaries");
    return c;
}

std::optional<QVector> CohomologyPiece::class_coords(const Element& x) const {
    return class_coords(cur_.coords(x));
}

Element CohomologyPiece::representative(const QVector& coords) const {
    QVector v = QVector::Zero(cur_.dim());
    for (Eigen::Index i = 0; i < coords.size(); ++i) v += coords[i] * reps_.row(i);
    return cur_.element(v);
}

namespace {

struct PieceKey {
    int q, r, variant, depth, degree, order;
    std::optional<Type> type;
    std::optional<Rational> lambda;

    bool operator<(const PieceKey& o) const {
        auto a = std::tie(q, r, variant, depth, degree, order, type);
        auto b = std::tie(o.q, o.r, o.variant, o.depth, o.degree, o.order, o.type);
        if (a != b) return a < b;
        if (lambda.has_value() != o.lambda.has_value()) return !lambda.has_value();
        return lambda && *lambda < *o.lambda;
    }
};

std::shared_mutex piece_mutex;
std::map<PieceKey, std::shared_ptr<const CohomologyPiece>> piece_cache;

}  // namespace

std::shared_ptr<const CohomologyPiece> cohomology(const AlgebraContext& ctx, int degree, int order,
                                                  const CohomologyOptions& opts) {
    ctx.validate();
    if (degree < 0 || order < 0) throw ValidationError("negative degree or order");
    PieceKey key{ctx.q,
                 ctx.r ? *ctx.r : -1,
                 static_cast<int>(ctx.variant),
                 opts.ideal.closure_depth ? *opts.ideal.closure_depth : -1,
                 degree,
                 order,
                 opts.type,
                 opts.lambda};
    {
        std::shared_lock lock(piece_mutex);
        auto it = piece_cache.find(key);
        if (it != piece_cache.end()) return it->second;
    }
    auto made = std::make_shared<const CohomologyPiece>(ctx, degree, order, opts);
    std::unique_lock lock(piece_mutex);
    auto [it, _] = piece_cache.try_emplace(key, made);
    return it->second;
}

std::shared_ptr<const CohomologyPiece> type_filtered_cohomology(const AlgebraContext& ctx,
                                                                int degree, int order, Type type,
                                                                const IdealOptions& ideal) {
    if (type.h + 2 * type.c != degree) throw ValidationError("type does not match degree");
    CohomologyOptions o;
    o.type = type;
    o.ideal = ideal;
    return cohomology(ctx, degree, order, o);
}

std::vector<Element> EigenSpace::elements() const {
    std::vector<Element> out;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) out.push_back(piece.element(basis.col(j)));
    return out;
}

EigenSpace eigenspace_E(const AlgebraContext& ctx, const Rational& lambda, int degree, int order,
                        std::optional<Type> type) {
    QuotientPiece p(ctx, degree, order, type, {});
    QMatrix b = eigenspace(delta_sigma_matrix(p), lambda);
    return {std::move(p), std::move(b)};
}

std::shared_ptr<const CohomologyPiece> F_lambda(const AlgebraContext& ctx, const Rational& lambda,
                                                int degree, int order, std::optional<Type> type) {
    CohomologyOptions o;
    o.type = type;
    o.lambda = lambda;
    return cohomology(ctx, degree, order, o);
}

QMatrix induced_matrix(const CohomologyPiece& from, const CohomologyPiece& to, const Operator& op) {
    auto reps = from.representatives();
    QMatrix m = QMatrix::Zero(to.dim(), from.dim());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        auto c = to.class_coords(op(reps[j]));
        if (!c) throw ValidationError("operator does not map cocycles to cocycles");
        m.col(static_cast<Eigen::Index>(j)) = *c;
    }
    return m;
}

CohomologyClass class_of(const Element& x, int degree, int order, const CohomologyOptions& opts) {
    auto piece = cohomology(x.context(), degree, order, opts);
    auto c = piece->class_coords(x);
    if (!c) throw ValidationError("element is not a cocycle");
    return {piece, *c};
}

CohomologyClass class_of(const Element& x, const CohomologyOptions& opts) {
    auto deg = x.degree();
    auto ord = x.order();
    if (!deg || !ord) throw ValidationError("class_of needs a nonzero bihomogeneous element");
    return class_of(x, *deg, *ord, opts);
}

namespace {

CohomologyClass image_class(const CohomologyClass& a, const Element& img, int degree, int order) {
    CohomologyOptions o;
    o.ideal = a.piece->options().ideal;
    return class_of(img, degree, order, o);
}

void plain_only(const CohomologyClass& a) {
    if (a.piece->options().type || a.piece->options().lambda)
        throw UnsupportedError("class operations act on the full cohomology");
}

}  // namespace

CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b) {
    plain_only(a);
    plain_only(b);
    Element prod = a.representative() * b.representative();
    return image_class(a, prod, a.piece->degree() + b.piece->degree(),
                       a.piece->order() + b.piece->order());
}

CohomologyClass class_delta(const CohomologyClass& a) {
    plain_only(a);
    return image_class(a, delta(a.representative()), a.piece->degree(), a.piece->order() + 1);
}

CohomologyClass class_sigma(const CohomologyClass& a) {
    plain_only(a);
    if (a.piece->order() == 0) throw ValidationError("sigma of an order 0 class");
    return image_class(a, sigma(a.representative()), a.piece->degree(), a.piece->order() - 1);
}

}  // namespace defw
