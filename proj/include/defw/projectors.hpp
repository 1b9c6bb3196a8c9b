#pragma once

#include "defw/algebra.hpp"

#include <vector>

namespace defw {

// eigenvalue of delta o sigma on the m-th summand of order k
Rational lambda_mk(int m, int k);

// coefficients a_i of p_{1,k} = sum_i a_i delta^i sigma^i, i = 0..k-1
std::vector<Rational> p1_coefficients(int k);

// Projectors onto the delta-sigma eigenspaces of order k, m = 1..k.
// They act on the free algebra and descend to the W and Wprime quotients.
Element projector_p1(int k, const Element& x);
Element projector_p(int m, int k, const Element& x);

// Projector onto the eigenvalue i*l part of delta o sigma' on order k, length l.
Element projector_p_prime(int i, int k, int l, const Element& x);

}  // namespace defw
