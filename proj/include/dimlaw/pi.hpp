#pragma once

#include <optional>
#include <vector>

#include "dimlaw/dimension.hpp"
#include "dimlaw/linalg.hpp"

namespace dimlaw {

/// The general functional form permitted by unit invariance:
///
///   target = prod W_i^{y_i} * F(pi_1, ..., pi_k),   pi_j = prod W_i^{x_i^(j)}
///
/// y is the particular solution of B y = a with free-column entries zero;
/// the kernel vectors are the canonical nullspace basis of B in
/// primitive-integer form; k = n - rank(B).
struct PiSolution {
    Problem problem;
    RatVec y;
    std::vector<RatVec> kernel;
    std::size_t k = 0;
};

/// A power-law monomial over a problem's explanatory quantities. The
/// constant is symbolic ("const") when absent.
struct Monomial {
    RatVec exponents;
    std::optional<double> constant;
};

/// Runs the dimensional analysis. Throws DimensionallyUnattainable when the
/// target's dimension vector is outside the column space of the dimension
/// matrix, i.e. no unit-invariant relation exists.
PiSolution solve_pi(const Problem& problem);

/// Specializes the single unknown function to f(z) = const * z^p, collapsing
/// the solution to the monomial with exponents y + p * kernel[0]. Only valid
/// for k == 1.
Monomial specialize_power(const PiSolution& solution, const Rational& p);

/// True iff (y_alt, x_alt) describes the same solution family: span(x_alt)
/// equals span(kernel) and y_alt differs from y by a kernel element.
bool forms_equivalent(const PiSolution& solution, const RatVec& y_alt,
                      const std::vector<RatVec>& x_alt);

}  // namespace dimlaw
