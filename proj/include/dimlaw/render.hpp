#pragma once

#include <string>

#include "dimlaw/pi.hpp"

namespace dimlaw {

enum class RenderStyle { plain, latex };

/// Deterministic pretty-printer for solved forms, e.g.
///
///   G = const * sigma2^(1/2) * (Q/V)^(1/2)                        (k = 0)
///   G = sigma2^(1/2) * (Q/V)^(1/2) * f(Q^3 * P^2 * sigma2 / (V * C^2))
///
/// The monomial part pairs each negative-exponent quantity with the earliest
/// positive-exponent quantity of equal magnitude into a ratio; unpaired
/// factors come first. Each dimensionless group goes inside f(.) (k = 1) or
/// F(., .) (k >= 2); the numerator always carries the positive exponents.
std::string render(const PiSolution& solution, RenderStyle style = RenderStyle::plain);

/// Monomial with its constant: "G = const * ..." or "G = 0.3 * ...".
std::string render(const Problem& problem, const Monomial& monomial,
                   RenderStyle style = RenderStyle::plain);

/// Just the dimensionless group: "Q^3 * P^2 * sigma2 / (V * C^2)".
std::string render_group(const Problem& problem, const RatVec& exponents,
                         RenderStyle style = RenderStyle::plain);

}  // namespace dimlaw
