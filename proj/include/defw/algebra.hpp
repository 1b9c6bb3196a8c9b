#pragma once

#include "defw/errors.hpp"
#include "defw/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defw {

enum class Kind : std::uint8_t { H = 0, C = 1 };

// H sorts before C, then by index, then by order
struct Generator {
    Kind kind;
    int index;
    int order;

    int degree() const { return kind == Kind::H ? 1 : 2; }
    bool odd() const { return kind == Kind::H; }
    auto operator<=>(const Generator&) const = default;
};

inline Generator h(int i, int a) { return {Kind::H, i, a}; }
inline Generator c(int i, int b) { return {Kind::C, i, b}; }

int norm(const Generator& g);

struct Type {
    int h = 0;
    int c = 0;
    auto operator<=>(const Type&) const = default;
};

// Product of generators in canonical order; no repeated h factor.
class Monomial {
public:
    Monomial() = default;

    // canonicalises an arbitrary factor sequence; sign is 0 when an h repeats
    static std::pair<int, Monomial> from_factors(std::vector<Generator> seq);

    const std::vector<Generator>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int degree() const;
    int order() const;
    int length() const { return static_cast<int>(f_.size()); }
    Type type() const;
    int norm() const;
    int max_index() const;
    int max_order() const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Generator> f_;
};

// sign and product of two monomials, sign 0 if it vanishes
std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b);

enum class Variant { W, WPrime, WPlus, Free };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

// q = codimension, r = jet order (nullopt means unbounded)
struct AlgebraContext {
    int q = 1;
    std::optional<int> r;
    Variant variant = Variant::W;
    bool truncate_overflow = false;

    bool same_algebra(const AlgebraContext& o) const { return q == o.q && r == o.r; }
    bool admits(const Generator& g) const;
    void validate() const;
    auto operator<=>(const AlgebraContext&) const = default;
};

AlgebraContext unbounded(int q, Variant v = Variant::W);
AlgebraContext truncated(int q, int r, Variant v = Variant::W);

Generator make_generator(const AlgebraContext& ctx, Kind kind, int i, int a);
Monomial make_monomial(const AlgebraContext& ctx, const std::vector<Generator>& gens);

class Element {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Element(AlgebraContext ctx = {}) : ctx_(ctx) {}
    Element(AlgebraContext ctx, const Monomial& m, Rational coeff = 1);

    static Element unit(const AlgebraContext& ctx) { return Element(ctx, Monomial{}); }
    static Element generator(const AlgebraContext& ctx, const Generator& g);

    const AlgebraContext& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& coeff);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& s);

    // homogeneous gradings, nullopt when the element mixes them or is zero
    std::optional<int> degree() const;
    std::optional<int> order() const;
    std::optional<int> length() const;
    std::optional<Type> type() const;
    // least norm over the terms
    std::optional<int> min_norm() const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    void check(const Element& o) const;

    AlgebraContext ctx_;
    Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Rational& s, Element a);
Element operator*(const Element& a, const Element& b);

Element with_context(const Element& x, const AlgebraContext& ctx);

// monomials of the free algebra with the given gradings, ascending order
std::vector<Monomial> enumerate_basis(const AlgebraContext& ctx, int degree, int order,
                                      std::optional<Type> type = std::nullopt);

// drops every term that involves an index above q
Element apply_rho(const Element& x, int q);

}  // namespace defw
