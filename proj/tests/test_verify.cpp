#include "doctest.h"

#include <cmath>
#include <sstream>
#include <vector>

#include "dimlaw/casestudies.hpp"
#include "dimlaw/errors.hpp"
#include "dimlaw/parse.hpp"
#include "dimlaw/pi.hpp"
#include "dimlaw/rng.hpp"
#include "dimlaw/verify.hpp"
#include "helpers.hpp"

using namespace dimlaw;
using testutil::iv;
using testutil::rv;

namespace {

PiSolution solve_study(const char* name) {
    return solve_pi(parse_problem(case_study(name).problem_text));
}

double log_group(const PiSolution& sol, std::size_t which, const std::vector<double>& values) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += sol.kernel[which][i].convert_to<double>() * std::log(values[i]);
    return acc;
}

double log_deflated(const PiSolution& sol, double target, const std::vector<double>& values) {
    double acc = std::log(target);
    for (std::size_t i = 0; i < values.size(); ++i)
        acc -= sol.y[i].convert_to<double>() * std::log(values[i]);
    return acc;
}

}  // namespace

TEST_CASE("rescale_values applies the per-dimension factors") {
    const Problem p = parse_problem(case_study("market4").problem_text);

    const auto shares = rescale_values(p, {1, 1, 1, 1}, {2, 1, 1, 1});
    CHECK(shares.values[0] == doctest::Approx(2).epsilon(1e-14));
    CHECK(shares.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(shares.values[2] == doctest::Approx(2).epsilon(1e-14));
    CHECK(shares.values[3] == doctest::Approx(1).epsilon(1e-14));
    CHECK(shares.target_factor == doctest::Approx(1).epsilon(1e-14));

    const auto leverage = rescale_values(p, {1, 1, 1, 1}, {1, 1, 1, 2});
    CHECK(leverage.values[0] == doctest::Approx(1).epsilon(1e-14));
    CHECK(leverage.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(leverage.values[2] == doctest::Approx(1).epsilon(1e-14));
    CHECK(leverage.values[3] == doctest::Approx(4).epsilon(1e-14));
    CHECK(leverage.target_factor == doctest::Approx(2).epsilon(1e-14));

    const auto identity = rescale_values(p, {3, 5, 7, 11}, {1, 1, 1, 1});
    CHECK(identity.values == std::vector<double>{3, 5, 7, 11});
    CHECK(identity.target_factor == 1.0);
}

TEST_CASE("rescale_values rejects non-positive input") {
    const Problem p = parse_problem(case_study("market4").problem_text);
    CHECK_THROWS_AS(rescale_values(p, {1, -1, 1, 1}, {1, 1, 1, 1}), NonPositiveValue);
    CHECK_THROWS_AS(rescale_values(p, {1, 1, 1, 1}, {1, 0, 1, 1}), NonPositiveScale);
    CHECK_THROWS_AS(rescale_values(p, {1, 1}, {1, 1, 1, 1}), LengthMismatch);
    CHECK_THROWS_AS(rescale_values(p, {1, 1, 1, 1}, {1, 1}), LengthMismatch);
}

TEST_CASE("rescaling composes multiplicatively") {
    const Problem p = parse_problem(case_study("market5c").problem_text);
    SplitMix64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values, s1, s2, s12;
        for (int i = 0; i < 5; ++i) values.push_back(rng.next_log_uniform(-2, 2));
        for (int j = 0; j < 4; ++j) {
            s1.push_back(rng.next_log_uniform(-3, 3));
            s2.push_back(rng.next_log_uniform(-3, 3));
            s12.push_back(s1.back() * s2.back());
        }
        const auto twice = rescale_values(p, rescale_values(p, values, s1).values, s2);
        const auto once = rescale_values(p, values, s12);
        for (int i = 0; i < 5; ++i)
            CHECK(twice.values[i] == doctest::Approx(once.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("pi groups and the deflated target are rescaling-covariant") {
    for (const char* name : {"market4", "market5c", "market5t", "pendulum4"}) {
        const PiSolution sol = solve_study(name);
        const Problem& p = sol.problem;
        SplitMix64 rng(42);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> values, scales;
            for (std::size_t i = 0; i < p.quantity_count(); ++i)
                values.push_back(rng.next_log_uniform(-2, 2));
            for (std::size_t j = 0; j < p.system().size(); ++j)
                scales.push_back(rng.next_log_uniform(-3, 3));

            const auto rescaled = rescale_values(p, values, scales);
            for (std::size_t g = 0; g < sol.k; ++g)
                CHECK(log_group(sol, g, values) ==
                      doctest::Approx(log_group(sol, g, rescaled.values)).epsilon(1e-10));

            const double target = 1.7;  // arbitrary positive stand-in
            CHECK(log_deflated(sol, target, values) ==
                  doctest::Approx(log_deflated(sol, target * rescaled.target_factor,
                                               rescaled.values))
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("leverage neutrality of the four-quantity law") {
    const PiSolution sol = solve_study("market4");
    CHECK(sol.y[1] == 0);  // the price exponent vanishes

    // Scaling only the leverage row moves P and sigma2 but the deflated
    // target stays put.
    const Problem& p = sol.problem;
    const std::vector<double> values{2.0, 3.0, 5.0, 7.0};
    const auto rescaled = rescale_values(p, values, {1, 1, 1, 3.5});
    CHECK(rescaled.values[1] != values[1]);
    CHECK(rescaled.values[3] != values[3]);
    const double target = 0.42;
    CHECK(log_deflated(sol, target, values) ==
          doctest::Approx(log_deflated(sol, target * rescaled.target_factor, rescaled.values))
              .epsilon(1e-10));
}

TEST_CASE("invariance check passes on solved studies") {
    for (const char* name : {"market4", "market5c"}) {
        const InvarianceReport report = check_invariance(solve_study(name), 1000, 7, 1e-10);
        CHECK(report.passed);
        CHECK(report.trials == 1000);
        CHECK(report.max_abs_log_error <= 1e-10);
    }
}

TEST_CASE("a corrupted particular solution is detected") {
    PiSolution sol = solve_study("market5c");
    sol.y[2] += 1;
    const InvarianceReport report = check_invariance(sol, 100, 7, 1e-10);
    CHECK_FALSE(report.passed);
    CHECK(report.max_abs_log_error > 1e-6);
}

TEST_CASE("check_invariance validates its arguments") {
    const PiSolution sol = solve_study("market4");
    CHECK_THROWS_AS(check_invariance(sol, 0, 1, 1e-10), Error);
    CHECK_THROWS_AS(check_invariance(sol, 10, 1, 0.0), Error);
}

TEST_CASE("serial and OpenMP paths produce identical results") {
    const PiSolution sol = solve_study("market5c");

    const auto serial = check_invariance(sol, 512, 99, 1e-10, Exec::serial);
    const auto parallel = check_invariance(sol, 512, 99, 1e-10, Exec::openmp);
    CHECK(serial.max_abs_log_error == parallel.max_abs_log_error);
    CHECK(serial.passed == parallel.passed);

    const Dataset ds = generate_power_law_data(sol, 0.5, 2.0, 4096, 0.05, 5, Exec::serial);
    const Dataset dp = generate_power_law_data(sol, 0.5, 2.0, 4096, 0.05, 5, Exec::openmp);
    REQUIRE(ds.rows() == dp.rows());
    for (std::size_t r = 0; r < ds.rows(); ++r) {
        for (std::size_t c = 0; c < ds.explanatory_count(); ++c)
            CHECK(ds.explanatory(r, c) == dp.explanatory(r, c));
        CHECK(ds.target(r) == dp.target(r));
    }

    const FitResult fs = fit_power_law(ds, sol, Exec::serial);
    const FitResult fp = fit_power_law(dp, sol, Exec::openmp);
    CHECK(*fs.p_hat == *fp.p_hat);
    CHECK(fs.log_const_hat == fp.log_const_hat);
    CHECK(fs.r_squared == fp.r_squared);
}

TEST_CASE("generated data obeys the law it was asked to obey") {
    const PiSolution five = solve_study("market5c");

    // h == const: every row satisfies the plain square-root law.
    const Dataset flat = generate_power_law_data(five, 0.0, 1.0, 64, 0.0, 3);
    for (std::size_t r = 0; r < flat.rows(); ++r) {
        const double q = flat.explanatory(r, 0), v = flat.explanatory(r, 2),
                     s2 = flat.explanatory(r, 3);
        CHECK(flat.target(r) ==
              doctest::Approx(std::sqrt(s2) * std::sqrt(q / v)).epsilon(1e-12));
    }

    const PiSolution four = solve_study("market4");
    const Dataset mono = generate_power_law_data(four, 0.0, 1.0, 64, 0.0, 3);
    for (std::size_t r = 0; r < mono.rows(); ++r) {
        const double q = mono.explanatory(r, 0), v = mono.explanatory(r, 2),
                     s2 = mono.explanatory(r, 3);
        CHECK(mono.target(r) ==
              doctest::Approx(std::sqrt(s2) * std::sqrt(q / v)).epsilon(1e-12));
    }

    // p = 1/3: the deflated log target equals exactly one third of the group log.
    const Dataset third = generate_power_law_data(five, 1.0 / 3.0, 1.0, 64, 0.0, 9);
    for (std::size_t r = 0; r < third.rows(); ++r) {
        std::vector<double> values;
        for (std::size_t i = 0; i < third.explanatory_count(); ++i)
            values.push_back(third.explanatory(r, i));
        CHECK(log_deflated(five, third.target(r), values) ==
              doctest::Approx(log_group(five, 0, values) / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("generator argument validation") {
    const PiSolution five = solve_study("market5c");
    CHECK_THROWS_AS(generate_power_law_data(five, 0.5, 0.0, 10, 0.0, 1), Error);
    CHECK_THROWS_AS(generate_power_law_data(five, 0.5, 1.0, 0, 0.0, 1), Error);
    CHECK_THROWS_AS(generate_power_law_data(five, 0.5, 1.0, 10, -0.1, 1), Error);

    const PiSolution two_dof = solve_pi(parse_problem(
        "dimensions: S\n"
        "quantity x : S\n"
        "quantity y : S\n"
        "quantity z : S\n"
        "target u : S\n"));
    CHECK_THROWS_AS(generate_power_law_data(two_dof, 0.5, 1.0, 10, 0.0, 1),
                    BadDegreesOfFreedom);
}

TEST_CASE("noiseless fits recover the exponent and constant exactly") {
    const PiSolution sol = solve_study("market5c");

    const Dataset zero = generate_power_law_data(sol, 0.0, 1.0, 200, 0.0, 11);
    const FitResult f0 = fit_power_law(zero, sol);
    CHECK(std::fabs(*f0.p_hat) <= 1e-9);
    CHECK(f0.r_squared == 1.0);  // zero residuals reported as a perfect fit

    const Dataset half = generate_power_law_data(sol, 0.5, 1.0, 200, 0.0, 12);
    const FitResult fh = fit_power_law(half, sol);
    CHECK(std::fabs(*fh.p_hat - 0.5) <= 1e-9);
}

TEST_CASE("fit consistency across random exponents and seeds") {
    const PiSolution sol = solve_study("market5c");
    SplitMix64 rng(55);
    for (int i = 0; i < 20; ++i) {
        const double p_true = rng.next_uniform(-1.5, 1.5);
        const double const_true = rng.next_log_uniform(-1, 1);
        const std::uint64_t seed = rng.next_u64();
        const Dataset data = generate_power_law_data(sol, p_true, const_true, 150, 0.0, seed);
        const FitResult fit = fit_power_law(data, sol);
        CHECK(std::fabs(*fit.p_hat - p_true) <= 1e-9);
        CHECK(std::fabs(fit.log_const_hat - std::log(const_true)) <= 1e-9);
    }
}

TEST_CASE("noisy fit stays within the statistical tolerance") {
    const PiSolution sol = solve_study("market5c");
    const Dataset data = generate_power_law_data(sol, 0.5, 1.0, 10000, 0.01, 13);
    const FitResult fit = fit_power_law(data, sol);
    CHECK(std::fabs(*fit.p_hat - 0.5) <= 0.05);
    CHECK(fit.r_squared >= 0.95);
}

TEST_CASE("degenerate designs are rejected") {
    const PiSolution sol = solve_study("market5c");

    const Dataset tiny = generate_power_law_data(sol, 0.5, 1.0, 2, 0.0, 1);
    CHECK_THROWS_AS(fit_power_law(tiny, sol), DegenerateDesign);

    // All rows identical: the group never varies.
    std::vector<double> row{1.5, 2.5, 3.5, 4.5, 5.5, 6.5};
    std::vector<double> values;
    for (int r = 0; r < 5; ++r) values.insert(values.end(), row.begin(), row.end());
    const Dataset constant(
        std::vector<std::string>{"Q", "P", "V", "sigma2", "C", "G"}, values);
    CHECK_THROWS_AS(fit_power_law(constant, sol), DegenerateDesign);

    CHECK_THROWS_AS(fit_power_law(tiny, solve_study("market4")), BadDegreesOfFreedom);
}

TEST_CASE("constant fits") {
    const PiSolution four = solve_study("market4");
    const Monomial law{four.y, std::nullopt};

    const Dataset data = generate_power_law_data(four, 0.0, 0.3, 50, 0.0, 17);
    const FitResult fit = fit_constant(data, law);
    CHECK(std::fabs(fit.log_const_hat - std::log(0.3)) <= 1e-9);
    CHECK(fit.r_squared >= 0.999999);

    const Dataset single = generate_power_law_data(four, 0.0, 0.3, 1, 0.0, 18);
    const FitResult one = fit_constant(single, law);
    CHECK(std::fabs(one.log_const_hat - std::log(0.3)) <= 1e-9);
    CHECK(one.r_squared == 1.0);

    // Deflating with the wrong monomial leaves most of the variance behind.
    const Monomial wrong{iv({0, 0, 0, 0}), std::nullopt};
    const FitResult bad = fit_constant(data, wrong);
    CHECK(bad.r_squared < 0.5);
}

TEST_CASE("dataset CSV round-trip preserves every bit") {
    const PiSolution sol = solve_study("market5c");
    const Dataset data = generate_power_law_data(sol, 0.5, 1.0, 100, 0.02, 19);

    std::stringstream buffer;
    data.to_csv(buffer);
    const Dataset back = Dataset::from_csv(buffer);

    REQUIRE(back.rows() == data.rows());
    CHECK(back.names() == data.names());
    for (std::size_t r = 0; r < data.rows(); ++r) {
        for (std::size_t c = 0; c < data.explanatory_count(); ++c)
            CHECK(back.explanatory(r, c) == data.explanatory(r, c));
        CHECK(back.target(r) == data.target(r));
    }
}

TEST_CASE("CSV validation") {
    {
        std::stringstream csv("Q,P,V,sigma2,C,G\n1,2,3,4,5,-6\n");
        try {
            Dataset::from_csv(csv);
            FAIL("expected NonPositiveValue");
        } catch (const NonPositiveValue& e) {
            CHECK(e.row == 1);
            CHECK(e.column == 6);
        }
    }
    {
        std::stringstream csv("Q,P\n1\n");
        CHECK_THROWS_AS(Dataset::from_csv(csv), FormatError);
    }
    {
        std::stringstream csv("Q,P\n1,abc\n");
        CHECK_THROWS_AS(Dataset::from_csv(csv), FormatError);
    }
    {
        std::stringstream csv("Q,P\n");
        CHECK_THROWS_AS(Dataset::from_csv(csv), FormatError);
    }

    const Problem p = parse_problem(case_study("market4").problem_text);
    std::stringstream csv("Q,P,V,G\n1,2,3,4\n");
    CHECK_THROWS_AS(Dataset::from_csv(csv).validate_against(p), Error);
}
