#include "dimlaw/pi.hpp"

#include <string>
#include <utility>

#include "dimlaw/errors.hpp"

namespace dimlaw {

PiSolution solve_pi(const Problem& problem) {
    const RatMatrix b = problem.dimension_matrix();
    const RatVec a = problem.target_exponents();

    std::vector<RatVec> kernel;
    for (const auto& x : kernel_basis(b)) kernel.push_back(primitive_integer(x));

    RatVec y;
    try {
        y = solve_particular(b, a);
    } catch (const Inconsistent& e) {
        std::string message = "target '" + problem.target().name +
                              "' is dimensionally unattainable from the explanatory quantities";
        throw DimensionallyUnattainable(std::move(message), e.row_combination, e.mismatch);
    }

    const std::size_t k = kernel.size();
    return PiSolution{problem, std::move(y), std::move(kernel), k};
}

Monomial specialize_power(const PiSolution& solution, const Rational& p) {
    if (solution.k != 1)
        throw NotOneDegreeOfFreedom("specialize_power needs exactly one degree of freedom, got " +
                                    std::to_string(solution.k));
    RatVec exponents = solution.y;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        exponents[i] += p * solution.kernel[0][i];
    return Monomial{std::move(exponents), std::nullopt};
}

bool forms_equivalent(const PiSolution& solution, const RatVec& y_alt,
                      const std::vector<RatVec>& x_alt) {
    const std::size_t n = solution.problem.quantity_count();
    if (y_alt.size() != n) throw LengthMismatch("alternative y has wrong length");
    for (const auto& x : x_alt)
        if (x.size() != n) throw LengthMismatch("alternative kernel vector has wrong length");

    return same_span(x_alt, solution.kernel, n) &&
           in_affine_span(y_alt, solution.y, solution.kernel);
}

}  // namespace dimlaw
