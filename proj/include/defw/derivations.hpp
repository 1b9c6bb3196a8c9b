#pragma once

#include "defw/algebra.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace defw {

// image of a single generator: a multiple of one generator, or nothing
using GeneratorImage = std::optional<std::pair<Rational, Generator>>;

// Extended to products by the Leibniz rule; odd rules pick up the Koszul sign.
struct DerivationRule {
    bool odd = false;
    std::function<GeneratorImage(const Generator&, const AlgebraContext&)> image;
};

Element apply_derivation(const DerivationRule& rule, const Element& x);

DerivationRule rule_d();
DerivationRule rule_delta();
DerivationRule rule_delta_i(int i);
DerivationRule rule_sigma();
DerivationRule rule_sigma_prime();
DerivationRule rule_K_i(int i);
DerivationRule rule_L();

Element d(const Element& x);
Element delta(const Element& x);
Element delta_i(int i, const Element& x);
Element sigma(const Element& x);
Element sigma_prime(const Element& x);
Element K_i(int i, const Element& x);
Element K(const Element& x);
Element L(const Element& x);

Element delta_pow(int n, Element x);
Element sigma_pow(int n, Element x);
Element sigma_prime_pow(int n, Element x);

}  // namespace defw
