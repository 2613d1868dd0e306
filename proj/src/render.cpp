#include "dimlaw/render.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include "dimlaw/errors.hpp"

namespace dimlaw {

namespace {

std::string plain_exponent(const Rational& e) {
    if (e == 1) return "";
    if (e > 0 && denominator(e) == 1) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

std::string latex_exponent(const Rational& e) {
    if (e == 1) return "";
    return "^{" + to_string(e) + "}";
}

std::string singleton(const std::string& name, const Rational& e, RenderStyle style) {
    if (style == RenderStyle::plain) return name + plain_exponent(e);
    if (e == Rational(1, 2)) return "\\sqrt{" + name + "}";
    return name + latex_exponent(e);
}

std::string ratio(const std::string& num, const std::string& den, const Rational& e,
                  RenderStyle style) {
    if (style == RenderStyle::plain) return "(" + num + "/" + den + ")" + plain_exponent(e);
    const std::string frac = "\\frac{" + num + "}{" + den + "}";
    if (e == Rational(1, 2)) return "\\sqrt{" + frac + "}";
    if (e == 1) return frac;
    return "\\left(" + frac + "\\right)" + latex_exponent(e);
}

std::string join(const std::vector<std::string>& parts, RenderStyle style) {
    const std::string sep = style == RenderStyle::plain ? " * " : " \\cdot ";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

/// Factors of the monomial part. Negative-exponent quantities pair greedily
/// (in declaration order) with the earliest positive quantity of equal
/// exponent magnitude; whatever stays unpaired renders on its own.
std::vector<std::string> monomial_factors(const Problem& problem, const RatVec& exponents,
                                          RenderStyle style) {
    const auto& quantities = problem.explanatory();
    std::vector<std::size_t> positives;
    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0) positives.push_back(i);
        if (exponents[i] < 0) negatives.push_back(i);
    }

    std::vector<bool> pos_used(positives.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (positive idx, negative idx)
    std::vector<std::size_t> lone_negatives;
    for (std::size_t n : negatives) {
        bool paired = false;
        for (std::size_t p = 0; p < positives.size(); ++p) {
            if (pos_used[p] || exponents[positives[p]] != -exponents[n]) continue;
            pos_used[p] = true;
            pairs.emplace_back(positives[p], n);
            paired = true;
            break;
        }
        if (!paired) lone_negatives.push_back(n);
    }

    std::vector<std::string> factors;
    for (std::size_t p = 0; p < positives.size(); ++p)
        if (!pos_used[p])
            factors.push_back(
                singleton(quantities[positives[p]].name, exponents[positives[p]], style));
    for (std::size_t n : lone_negatives)
        factors.push_back(singleton(quantities[n].name, exponents[n], style));
    for (const auto& [p, n] : pairs)
        factors.push_back(
            ratio(quantities[p].name, quantities[n].name, exponents[p], style));
    return factors;
}

std::string group_product(const Problem& problem, const std::vector<std::size_t>& indices,
                          const RatVec& exponents, bool flip_sign, RenderStyle style) {
    std::vector<std::string> parts;
    for (std::size_t i : indices) {
        const Rational e = flip_sign ? -exponents[i] : exponents[i];
        if (style == RenderStyle::plain)
            parts.push_back(problem.explanatory()[i].name + plain_exponent(e));
        else
            parts.push_back(problem.explanatory()[i].name + latex_exponent(e));
    }
    const std::string sep = style == RenderStyle::plain ? " * " : " ";
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::string constant_symbol(RenderStyle style) {
    return style == RenderStyle::plain ? "const" : "\\mathrm{const}";
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

}  // namespace

std::string render_group(const Problem& problem, const RatVec& exponents, RenderStyle style) {
    if (exponents.size() != problem.quantity_count())
        throw LengthMismatch("group exponent vector has wrong length");

    std::vector<std::size_t> num;
    std::vector<std::size_t> den;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0) num.push_back(i);
        if (exponents[i] < 0) den.push_back(i);
    }

    const std::string numerator =
        num.empty() ? "1" : group_product(problem, num, exponents, false, style);
    if (den.empty()) return numerator;
    const std::string denominator = group_product(problem, den, exponents, true, style);

    if (style == RenderStyle::latex) return "\\frac{" + numerator + "}{" + denominator + "}";
    if (den.size() == 1 && exponents[den.front()] == -1)
        return numerator + " / " + denominator;
    return numerator + " / (" + denominator + ")";
}

std::string render(const PiSolution& solution, RenderStyle style) {
    std::vector<std::string> factors;
    if (solution.k == 0) factors.push_back(constant_symbol(style));
    auto monomial = monomial_factors(solution.problem, solution.y, style);
    factors.insert(factors.end(), monomial.begin(), monomial.end());

    if (solution.k == 1) {
        const std::string group = render_group(solution.problem, solution.kernel[0], style);
        factors.push_back(style == RenderStyle::plain ? "f(" + group + ")"
                                                      : "f\\left(" + group + "\\right)");
    } else if (solution.k >= 2) {
        std::string args;
        for (const auto& x : solution.kernel) {
            if (!args.empty()) args += ", ";
            args += render_group(solution.problem, x, style);
        }
        factors.push_back(style == RenderStyle::plain ? "F(" + args + ")"
                                                      : "F\\left(" + args + "\\right)");
    }

    return solution.problem.target().name + " = " + join(factors, style);
}

std::string render(const Problem& problem, const Monomial& monomial, RenderStyle style) {
    if (monomial.exponents.size() != problem.quantity_count())
        throw LengthMismatch("monomial exponent vector has wrong length");

    std::vector<std::string> factors;
    factors.push_back(monomial.constant ? format_double(*monomial.constant)
                                        : constant_symbol(style));
    auto parts = monomial_factors(problem, monomial.exponents, style);
    factors.insert(factors.end(), parts.begin(), parts.end());
    return problem.target().name + " = " + join(factors, style);
}

}  // namespace dimlaw
