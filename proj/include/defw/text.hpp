#pragma once

#include "defw/algebra.hpp"

#include <string>
#include <string_view>

namespace defw {

// h[i,a] / c[i,b] factors joined by '*', e.g. "-1/5*h[1,3]*c[1,1] + h[1,1]*c[1,2]"
std::string to_text(const Generator& g);
std::string to_text(const Monomial& m);
std::string to_text(const Element& x);

// accepts "p/q*term", "(p/q) term", "p/q term", "c[1,1]^2" and any factor order
Element parse_element(const AlgebraContext& ctx, std::string_view text);

}  // namespace defw
