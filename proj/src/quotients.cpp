#include "defw/quotients.hpp"
#include "defw/derivations.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace defw {

namespace {

std::vector<Monomial> minimal_words(const std::vector<Generator>& pool,
                                    const std::function<int(const Generator&)>& weight,
                                    int bound) {
    std::vector<Monomial> out;
    std::vector<Generator> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int w) {
        if (w > bound) {
            int least = weight(cur.front());
            for (const auto& g : cur) least = std::min(least, weight(g));
            if (w - least <= bound) out.push_back(Monomial::from_factors(cur).second);
            return;
        }
        for (std::size_t k = from; k < pool.size(); ++k) {
            cur.push_back(pool[k]);
            rec(pool[k].kind == Kind::H ? k + 1 : k, w + weight(pool[k]));
            cur.pop_back();
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Monomial> ideal_seeds(const AlgebraContext& ctx) {
    std::vector<Generator> pool;
    switch (ctx.variant) {
        case Variant::Free:
            return {};
        case Variant::W:
            for (Kind k : {Kind::H, Kind::C})
                for (int i = 1; i <= ctx.q; ++i)
                    for (int l = 0; l < i; ++l) {
                        Generator g{k, i, l};
                        if (ctx.admits(g) && norm(g) > 0) pool.push_back(g);
                    }
            return minimal_words(pool, [](const Generator& g) { return norm(g); }, ctx.q);
        case Variant::WPrime:
        case Variant::WPlus:
            for (int i = 1; i <= ctx.q; ++i) pool.push_back({Kind::C, i, 0});
            return minimal_words(pool, [](const Generator& g) { return g.index; }, ctx.q);
    }
    return {};
}

IdealSlice::IdealSlice(const AlgebraContext& ctx, int degree, int order, const IdealOptions& opts)
    : ctx_(ctx), degree_(degree), order_(order) {
    columns_ = enumerate_basis(ctx, degree, order);
    std::reverse(columns_.begin(), columns_.end());
    for (std::size_t j = 0; j < columns_.size(); ++j) index_[columns_[j]] = static_cast<int>(j);
    echelon_ = RowEchelon<Rational>(static_cast<Eigen::Index>(columns_.size()));
    if (columns_.empty()) return;

    AlgebraContext strict = ctx;
    strict.truncate_overflow = false;
    for (const auto& s : ideal_seeds(ctx)) {
        if (s.degree() > degree || s.order() > order) continue;
        int depth = order - s.order();
        if (ctx.variant == Variant::WPlus) depth = 0;
        if (opts.closure_depth) depth = std::min(depth, *opts.closure_depth);
        Element g(strict, s);
        for (int j = 0; j <= depth; ++j) {
            if (j > 0) {
                try {
                    g = delta(g);
                } catch (const OrderOverflowError&) {
                    break;
                }
            }
            for (const auto& x : enumerate_basis(ctx, degree - s.degree(), order - s.order() - j)) {
                ++spanning_;
                echelon_.insert(vector(Element(strict, x) * g));
                if (echelon_.full()) return;
            }
        }
    }
}

int IdealSlice::column(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Monomial> IdealSlice::normal_monomials() const {
    std::vector<Monomial> out;
    for (auto j : echelon_.free_columns()) out.push_back(columns_[j]);
    return out;
}

QVector IdealSlice::vector(const Element& x) const {
    QVector v = QVector::Zero(static_cast<Eigen::Index>(columns_.size()));
    for (const auto& [m, c] : x.terms()) {
        int j = column(m);
        if (j < 0)
            throw ValidationError("term outside the (" + std::to_string(degree_) + ", " +
                                  std::to_string(order_) + ") piece");
        v[j] += c;
    }
    return v;
}

Element IdealSlice::element(const QVector& v) const {
    Element out(ctx_);
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.add_term(columns_[j], v[j]);
    return out;
}

bool IdealSlice::contains(const Element& x) const { return echelon_.contains(vector(x)); }

Element IdealSlice::reduce(const Element& x) const { return element(echelon_.reduced(vector(x))); }

namespace {

using SliceKey = std::tuple<int, int, int, int, int, int>;

SliceKey key_of(const AlgebraContext& ctx, int degree, int order, const IdealOptions& opts) {
    return {ctx.q, ctx.r ? *ctx.r : -1, static_cast<int>(ctx.variant),
            opts.closure_depth ? *opts.closure_depth : -1, degree, order};
}

std::shared_mutex slice_mutex;
std::map<SliceKey, std::shared_ptr<const IdealSlice>> slice_cache;

// splits a possibly inhomogeneous element into (degree, order) components
std::map<std::pair<int, int>, Element> components(const Element& x) {
    std::map<std::pair<int, int>, Element> parts;
    for (const auto& [m, c] : x.terms()) {
        auto [it, _] = parts.try_emplace({m.degree(), m.order()}, Element(x.context()));
        it->second.add_term(m, c);
    }
    return parts;
}

}  // namespace

std::shared_ptr<const IdealSlice> ideal_slice(const AlgebraContext& ctx, int degree, int order,
                                              const IdealOptions& opts) {
    ctx.validate();
    auto key = key_of(ctx, degree, order, opts);
    {
        std::shared_lock lock(slice_mutex);
        auto it = slice_cache.find(key);
        if (it != slice_cache.end()) return it->second;
    }
    AlgebraContext plain = ctx;
    plain.truncate_overflow = false;
    auto made = std::make_shared<const IdealSlice>(plain, degree, order, opts);
    std::unique_lock lock(slice_mutex);
    auto [it, _] = slice_cache.try_emplace(key, made);
    return it->second;
}

bool is_in_ideal(const Element& x, const IdealOptions& opts) {
    for (const auto& [bi, part] : components(x))
        if (!ideal_slice(x.context(), bi.first, bi.second, opts)->contains(part)) return false;
    return true;
}

Element reduce(const Element& x, const IdealOptions& opts) {
    Element out(x.context());
    for (const auto& [bi, part] : components(x))
        out += with_context(ideal_slice(x.context(), bi.first, bi.second, opts)->reduce(part),
                            x.context());
    return out;
}

QuotientPiece::QuotientPiece(const AlgebraContext& ctx, int degree, int order,
                             std::optional<Type> type, const IdealOptions& opts)
    : ctx_(ctx), degree_(degree), order_(order), type_(type), opts_(opts) {
    slice_ = ideal_slice(ctx, degree, order, opts);
    for (const auto& m : slice_->normal_monomials()) {
        if (type && m.type() != *type) continue;
        basis_.push_back(m);
        slice_column_.push_back(slice_->column(m));
    }
}

QVector QuotientPiece::coords(const Element& x) const {
    QVector full = slice_->echelon().reduced(slice_->vector(x));
    QVector v(dim());
    for (Eigen::Index k = 0; k < dim(); ++k) v[k] = full[slice_column_[k]];
    return v;
}

Element QuotientPiece::element(const QVector& v) const {
    Element out(ctx_);
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v[k] != 0) out.add_term(basis_[k], v[k]);
    return out;
}

QuotientPiece cochain_space(const AlgebraContext& ctx, int degree, int order,
                            std::optional<Type> type, const IdealOptions& opts) {
    return QuotientPiece(ctx, degree, order, type, opts);
}

}  // namespace defw
