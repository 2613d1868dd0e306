#include "dimlaw/casestudies.hpp"

#include <utility>

#include "dimlaw/errors.hpp"
#include "dimlaw/parse.hpp"

namespace dimlaw {

namespace {

Rational R(long long num, long long den = 1) { return Rational(num, den); }

std::vector<CaseStudy> build_case_studies() {
    std::vector<CaseStudy> studies;

    // Market impact of a meta-order from order size, price, traded volume and
    // squared volatility, with leverage neutrality as a fourth scaling row.
    CaseStudy market4;
    market4.name = "market4";
    market4.summary = "square-root market impact law from (Q, P, V, sigma2)";
    market4.problem_text =
        "# market impact of a meta-order, four explanatory quantities\n"
        "dimensions: S U T M\n"
        "quantity Q : S\n"
        "quantity P : S^-1 * U * M^-1\n"
        "quantity V : S * T^-1\n"
        "quantity sigma2 : T^-1 * M^2\n"
        "target G : M\n";
    market4.expected_y = {R(1, 2), R(0), R(-1, 2), R(1, 2)};
    market4.expected_k = 0;
    studies.push_back(std::move(market4));

    CaseStudy market5c;
    market5c.name = "market5c";
    market5c.summary = "impact with a bet-cost column C; one degree of freedom";
    market5c.problem_text =
        "# market impact with the bet cost C as a fifth explanatory quantity\n"
        "dimensions: S U T M\n"
        "quantity Q : S\n"
        "quantity P : S^-1 * U * M^-1\n"
        "quantity V : S * T^-1\n"
        "quantity sigma2 : T^-1 * M^2\n"
        "quantity C : U\n"
        "target G : M\n";
    market5c.expected_y = {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)};
    market5c.expected_kernel = {{R(3), R(2), R(-1), R(1), R(-2)}};
    market5c.expected_k = 1;
    market5c.presets = {
        {"proportional", R(-1, 6), {R(0), R(-1, 3), R(-1, 3), R(1, 3), R(1, 3)}},
        {"square_root", R(0), {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)}},
        {"linear", R(1, 6), {R(1), R(1, 3), R(-2, 3), R(2, 3), R(-1, 3)}},
    };
    // Liquidity L = (PV/(sigma2 C))^(1/3) carries the inverse target
    // dimension (G * L is dimensionless); bet size Z = (Q^3 P^2 sigma2 /
    // (V C^2))^(1/3) is dimensionless outright.
    market5c.derived_monomials = {
        {"L", {R(0), R(1, 3), R(1, 3), R(-1, 3), R(-1, 3)}, {R(0), R(0), R(0), R(-1)}},
        {"Z", {R(1), R(2, 3), R(-1, 3), R(1, 3), R(-2, 3)}, {R(0), R(0), R(0), R(0)}},
    };
    market5c.equivalent_forms = {
        {"thirds",
         {R(0), R(-1, 3), R(-1, 3), R(1, 3), R(1, 3)},
         {{R(1), R(2, 3), R(-1, 3), R(1, 3), R(-2, 3)}}},
        {"half_integer",
         {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)},
         {{R(3), R(2), R(-1), R(1), R(-2)}}},
        {"unit_cost", {R(-1), R(-1), R(0), R(0), R(1)}, {{R(3), R(2), R(-1), R(1), R(-2)}}},
    };
    studies.push_back(std::move(market5c));

    CaseStudy market5t;
    market5t.name = "market5t";
    market5t.summary = "impact with the execution-interval length T as fifth quantity";
    market5t.problem_text =
        "# market impact with the execution horizon T as a fifth explanatory quantity\n"
        "dimensions: S U T M\n"
        "quantity Q : S\n"
        "quantity P : S^-1 * U * M^-1\n"
        "quantity V : S * T^-1\n"
        "quantity sigma2 : T^-1 * M^2\n"
        "quantity T : T\n"
        "target G : M\n";
    market5t.expected_y = {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)};
    market5t.expected_kernel = {{R(1), R(0), R(-1), R(0), R(-1)}};
    market5t.expected_k = 1;
    market5t.presets = {
        {"square_root", R(0), {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)}},
    };
    // The same span, written with the opposite sign.
    market5t.equivalent_forms = {
        {"flipped_sign",
         {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)},
         {{R(-1), R(0), R(1), R(0), R(1)}}},
    };
    studies.push_back(std::move(market5t));

    // Replacing the bet cost C by the spread cost Cs (same dimension, same
    // leverage behaviour) must leave the solution unchanged up to renaming.
    CaseStudy spread;
    spread.name = "spread";
    spread.summary = "impact with the spread cost Cs in place of the bet cost";
    spread.problem_text =
        "# market impact with the spread cost Cs as a fifth explanatory quantity\n"
        "dimensions: S U T M\n"
        "quantity Q : S\n"
        "quantity P : S^-1 * U * M^-1\n"
        "quantity V : S * T^-1\n"
        "quantity sigma2 : T^-1 * M^2\n"
        "quantity Cs : U\n"
        "target G : M\n";
    spread.expected_y = {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)};
    spread.expected_kernel = {{R(3), R(2), R(-1), R(1), R(-2)}};
    spread.expected_k = 1;
    spread.presets = {
        {"square_root", R(0), {R(1, 2), R(0), R(-1, 2), R(1, 2), R(0)}},
    };
    studies.push_back(std::move(spread));

    CaseStudy pendulum3;
    pendulum3.name = "pendulum3";
    pendulum3.summary = "pendulum period from length, mass and gravity";
    pendulum3.problem_text =
        "# period of a pendulum from length, mass and gravitational acceleration\n"
        "dimensions: L M T\n"
        "quantity l : L\n"
        "quantity m : M\n"
        "quantity g : L * T^-2\n"
        "target period : T\n";
    pendulum3.expected_y = {R(1, 2), R(0), R(-1, 2)};
    pendulum3.expected_k = 0;
    studies.push_back(std::move(pendulum3));

    CaseStudy pendulum4;
    pendulum4.name = "pendulum4";
    pendulum4.summary = "pendulum period with the amplitude as a fourth quantity";
    pendulum4.problem_text =
        "# period of a pendulum, amplitude included\n"
        "dimensions: L M T\n"
        "quantity l : L\n"
        "quantity m : M\n"
        "quantity g : L * T^-2\n"
        "quantity a : L\n"
        "target period : T\n";
    // Note: the exchanged assignment (y and the kernel vector swapped) does
    // not satisfy D x = 0 / D y = c; tests pin the self-consistent one.
    pendulum4.expected_y = {R(1, 2), R(0), R(-1, 2), R(0)};
    pendulum4.expected_kernel = {{R(1), R(0), R(0), R(-1)}};
    pendulum4.expected_k = 1;
    pendulum4.presets = {
        {"amplitude_free", R(0), {R(1, 2), R(0), R(-1, 2), R(0)}},
    };
    studies.push_back(std::move(pendulum4));

    CaseStudy pendulum_silly;
    pendulum_silly.name = "pendulum_silly";
    pendulum_silly.summary = "a wrong explanatory set still yields a unique (wrong) law";
    pendulum_silly.problem_text =
        "# period of a pendulum from mass, gravity and amplitude; the length\n"
        "# is deliberately left out, so the derived law is physically wrong\n"
        "dimensions: L M T\n"
        "quantity m : M\n"
        "quantity g : L * T^-2\n"
        "quantity a : L\n"
        "target period : T\n";
    pendulum_silly.expected_y = {R(0), R(-1, 2), R(1, 2)};
    pendulum_silly.expected_k = 0;
    studies.push_back(std::move(pendulum_silly));

    return studies;
}

}  // namespace

const std::vector<CaseStudy>& case_studies() {
    static const std::vector<CaseStudy> studies = build_case_studies();
    return studies;
}

const CaseStudy& case_study(std::string_view name) {
    for (const auto& s : case_studies())
        if (s.name == name) return s;
    throw Error("unknown case study '" + std::string(name) + "'");
}

std::vector<StudyCheck> verify_case_study(const CaseStudy& study) {
    std::vector<StudyCheck> checks;
    auto record = [&](std::string label, bool ok, std::string detail = "") {
        checks.push_back(StudyCheck{std::move(label), ok, ok ? "" : std::move(detail)});
    };

    Problem problem = [&] {
        try {
            return parse_problem(study.problem_text);
        } catch (const Error& e) {
            record("parse", false, e.what());
            throw;
        }
    }();

    PiSolution sol = solve_pi(problem);
    const RatMatrix b = problem.dimension_matrix();
    const RatVec a = problem.target_exponents();

    record("degrees_of_freedom", sol.k == study.expected_k);

    // Stored expectations are recomputed, not trusted.
    bool coherent = b.multiply(study.expected_y) == a;
    for (const auto& x : study.expected_kernel)
        coherent = coherent && is_zero(b.multiply(x));
    record("expected_coherence", coherent, "stored (y, kernel) fails B y = a / B x = 0");

    record("solution_matches_expected",
           forms_equivalent(sol, study.expected_y, study.expected_kernel),
           "solver output not equivalent to the stored representative");

    for (const auto& preset : study.presets) {
        bool ok = false;
        std::string detail;
        try {
            const Monomial mono = specialize_power(sol, preset.p);
            ok = mono.exponents == preset.expected_exponents &&
                 dim_of_monomial(problem, mono.exponents).exponents() == a;
            if (!ok) detail = "specialized exponents differ from the stored ones";
        } catch (const Error& e) {
            detail = e.what();
        }
        record("preset_" + preset.name, ok, std::move(detail));
    }

    for (const auto& derived : study.derived_monomials)
        record("derived_" + derived.name,
               dim_of_monomial(problem, derived.exponents).exponents() == derived.expected_dim,
               "derived monomial has the wrong dimension vector");

    for (const auto& form : study.equivalent_forms)
        record("form_" + form.label, forms_equivalent(sol, form.y, form.kernel),
               "alternative representative not recognized as equivalent");

    return checks;
}

bool all_passed(const std::vector<StudyCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

}  // namespace dimlaw
