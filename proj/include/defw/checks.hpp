#pragma once

#include "defw/cohomology.hpp"
#include "defw/invariants_sr.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace defw {

struct CheckResult {
    CheckResult(std::string n = {}, std::string nt = {}) : name(std::move(n)), note(std::move(nt)) {}

    std::string name;
    bool passed = true;
    long cases = 0;
    std::string counterexample;
    std::string note;

    void fail(const std::string& witness) {
        if (passed) counterexample = witness;
        passed = false;
    }
};

struct Grid {
    int min_degree = 0;
    int max_degree = 0;
    int min_order = 0;
    int max_order = 0;
};

Rational random_rational(std::mt19937_64& rng, int bound = 10);
Element random_element(const AlgebraContext& ctx, std::mt19937_64& rng, int max_degree, int max_order,
                       int max_terms = 4);
QTruncPolyMatrix random_trunc_matrix(std::mt19937_64& rng, int q, int r, bool invertible);

// d^2, commutation with d, order/length commutators, K and L homotopies, norm bound; L only for q = 1
std::vector<CheckResult> derivation_identity_suite(int q, std::uint64_t seed, int trials,
                                                   int max_degree = 6, int max_order = 5);

// the ideal of ctx is carried into itself by d, delta, sigma (and sigma' for Wprime)
std::vector<CheckResult> ideal_stability_suite(const AlgebraContext& ctx, const Grid& grid);

// a generator of the W ideal whose sigma' image leaves the ideal (q >= 2)
CheckResult sigma_prime_instability_witness(int q);

// projector algebra and eigenvalue identities on quotient pieces of order >= 1
std::vector<CheckResult> structure_suite(const AlgebraContext& ctx, const Grid& grid);

// delta : H^{n,k} -> H^{n,k+1} has trivial kernel for n >= 1, k in the grid
CheckResult delta_injectivity(const AlgebraContext& ctx, const Grid& grid);

// eigen-decomposition of cohomology: sum of F dimensions, and a direct eigen check on classes
CheckResult eigen_decomposition(const AlgebraContext& ctx, const Grid& grid);

// rho-images of Wplus cocycles in codimension q+1 have delta-image zero in codimension q
CheckResult rho_rigidity(int q, const Grid& grid);

// type (1,b) classes vanish for b >= 2 (q = 1); also reports the (1,1) line
CheckResult type_1b_vanishing(const Grid& grid);

// elementary symmetric polynomial e_k(A) as a sum of principal minors
Rational elementary_symmetric_minors(const QMatrix& a, int k);

// coefficients t^0..t^r of e_k(X(t)) via principal minors over truncated polynomials
std::vector<Rational> chern_series_minors(const QTruncPolyMatrix& x, int k);

std::vector<CheckResult> invariants_suite(std::uint64_t seed, int trials, int max_q = 3, int max_r = 3);

}  // namespace defw
