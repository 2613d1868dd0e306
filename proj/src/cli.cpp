#include "dimlaw/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dimlaw/casestudies.hpp"
#include "dimlaw/errors.hpp"
#include "dimlaw/parse.hpp"
#include "dimlaw/pi.hpp"
#include "dimlaw/render.hpp"
#include "dimlaw/serialize.hpp"
#include "dimlaw/verify.hpp"

namespace dimlaw {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnattainable = 2;
constexpr int kExitCheckFailed = 3;

RenderStyle style_of(const std::string& format) {
    return format == "latex" ? RenderStyle::latex : RenderStyle::plain;
}

void print_witness(const Problem& problem, const DimensionallyUnattainable& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "witness row combination:";
    const auto& names = problem.system().names();
    for (std::size_t j = 0; j < names.size() && j < e.row_combination.size(); ++j)
        std::cerr << " " << e.row_combination[j] << "*" << names[j];
    std::cerr << "  =>  0 = " << e.mismatch << "\n";
}

nlohmann::json witness_json(const Problem& problem, const DimensionallyUnattainable& e) {
    nlohmann::json combination = nlohmann::json::object();
    const auto& names = problem.system().names();
    for (std::size_t j = 0; j < names.size() && j < e.row_combination.size(); ++j)
        combination[names[j]] = e.row_combination[j];
    return nlohmann::json{{"unattainable", true},
                          {"witness_combination", std::move(combination)},
                          {"mismatch", e.mismatch}};
}

int do_solve(const std::string& path, const std::string& format,
             const std::optional<std::string>& power) {
    const Problem problem = parse_problem_file(path);
    PiSolution sol;
    try {
        sol = solve_pi(problem);
    } catch (const DimensionallyUnattainable& e) {
        print_witness(problem, e);
        if (format == "json") std::cout << witness_json(problem, e).dump() << "\n";
        return kExitUnattainable;
    }

    if (power) {
        const Monomial mono = specialize_power(sol, parse_rational(*power));
        if (format == "json") {
            nlohmann::json out{{"exponents", to_json(mono.exponents)},
                               {"rendered", render(problem, mono)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << render(problem, mono, style_of(format)) << "\n";
        }
        return kExitOk;
    }

    if (format == "json") {
        nlohmann::json out = to_json(sol);
        out["rendered"] = render(sol);
        out["dimension_matrix"] = to_json(problem.dimension_matrix());
        out["target_exponents"] = to_json(problem.target_exponents());
        std::cout << out.dump() << "\n";
    } else {
        std::cout << render(sol, style_of(format)) << "\n";
    }
    return kExitOk;
}

int do_check(const std::string& path, int trials, std::uint64_t seed, double tol,
             const std::optional<int>& perturb_y) {
    const Problem problem = parse_problem_file(path);
    PiSolution sol;
    try {
        sol = solve_pi(problem);
    } catch (const DimensionallyUnattainable& e) {
        print_witness(problem, e);
        return kExitUnattainable;
    }

    if (perturb_y) {
        if (*perturb_y < 0 || static_cast<std::size_t>(*perturb_y) >= sol.y.size())
            throw Error("--perturb-y index out of range");
        sol.y[static_cast<std::size_t>(*perturb_y)] += 1;
    }

    const InvarianceReport report = check_invariance(sol, trials, seed, tol);
    std::cout << to_json(report).dump() << "\n";
    return report.passed ? kExitOk : kExitCheckFailed;
}

int do_fit(const std::string& problem_path, const std::string& csv_path,
           const std::string& mode) {
    const Problem problem = parse_problem_file(problem_path);
    PiSolution sol;
    try {
        sol = solve_pi(problem);
    } catch (const DimensionallyUnattainable& e) {
        print_witness(problem, e);
        return kExitUnattainable;
    }

    const Dataset data = Dataset::from_csv_file(csv_path);
    data.validate_against(problem);

    const FitResult fit = mode == "const"
                              ? fit_constant(data, Monomial{sol.y, std::nullopt})
                              : fit_power_law(data, sol);
    std::cout << to_json(fit).dump() << "\n";
    return kExitOk;
}

int do_examples(bool list, const std::optional<std::string>& emit, const std::string& dir,
                bool verify_all) {
    const int actions = static_cast<int>(list) + static_cast<int>(emit.has_value()) +
                        static_cast<int>(verify_all);
    if (actions != 1)
        throw Error("pick exactly one of --list, --emit NAME, --verify-all");

    if (list) {
        for (const auto& study : case_studies()) std::cout << study.name << "\n";
        return kExitOk;
    }

    if (emit) {
        const CaseStudy& study = case_study(*emit);
        const auto path = std::filesystem::path(dir) / (study.name + ".dim");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path.string() + "'");
        out << study.problem_text;
        std::cerr << "wrote " << path.string() << "\n";
        return kExitOk;
    }

    nlohmann::json studies = nlohmann::json::array();
    bool ok = true;
    for (const auto& study : case_studies()) {
        const auto checks = verify_case_study(study);
        const bool passed = all_passed(checks);
        ok = ok && passed;
        std::cerr << study.name << ": " << (passed ? "PASS" : "FAIL") << "\n";
        nlohmann::json check_list = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json entry{{"label", c.label}, {"passed", c.passed}};
            if (!c.passed) entry["detail"] = c.detail;
            check_list.push_back(std::move(entry));
        }
        studies.push_back(nlohmann::json{
            {"name", study.name}, {"passed", passed}, {"checks", std::move(check_list)}});
    }
    std::cout << nlohmann::json{{"studies", std::move(studies)}, {"all_passed", ok}}.dump()
              << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"derive, check and fit the functional forms permitted by unit invariance"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::uint64_t seed = 0;
    double tol = 1e-10;
    int trials = 1000;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--tol", tol, "invariance tolerance (log space)")
        ->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "number of random rescaling trials")
        ->check(CLI::PositiveNumber);

    auto* solve = app.add_subcommand("solve", "derive the general form for a problem file");
    std::string solve_path;
    solve->add_option("problem", solve_path, "problem file")->required();
    solve->fallthrough();

    auto* render_cmd = app.add_subcommand("render", "render the solution, optionally specialized");
    std::string render_path;
    std::string power;
    render_cmd->add_option("problem", render_path, "problem file")->required();
    auto* power_opt =
        render_cmd->add_option("--power", power, "specialize f(z) = const * z^p (rational p)");
    render_cmd->fallthrough();

    auto* check = app.add_subcommand("check", "run randomized unit-rescaling invariance trials");
    std::string check_path;
    int perturb_index = 0;
    check->add_option("problem", check_path, "problem file")->required();
    auto* perturb_opt = check->add_option(
        "--perturb-y", perturb_index, "test hook: add 1 to this particular-solution coordinate");
    check->fallthrough();

    auto* fit = app.add_subcommand("fit", "fit exponent/constant of a power law to CSV data");
    std::string fit_problem, fit_csv, mode = "power";
    fit->add_option("problem", fit_problem, "problem file")->required();
    fit->add_option("data", fit_csv, "CSV with explanatory columns then the target")->required();
    fit->add_option("--mode", mode, "power: fit the group exponent; const: fit the constant only")
        ->check(CLI::IsMember({"power", "const"}));
    fit->fallthrough();

    auto* examples = app.add_subcommand("examples", "bundled case studies");
    bool list = false, verify_all = false;
    std::string emit_name, dir = ".";
    examples->add_flag("--list", list, "list the bundled study names");
    auto* emit_opt = examples->add_option("--emit", emit_name, "write NAME.dim");
    examples->add_option("--dir", dir, "directory for --emit");
    examples->add_flag("--verify-all", verify_all, "re-derive and cross-check every study");
    examples->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) return do_solve(solve_path, format, std::nullopt);
        if (render_cmd->parsed())
            return do_solve(render_path, format,
                            power_opt->count() ? std::optional<std::string>(power) : std::nullopt);
        if (check->parsed())
            return do_check(check_path, trials, seed, tol,
                            perturb_opt->count() ? std::optional<int>(perturb_index)
                                                 : std::nullopt);
        if (fit->parsed()) return do_fit(fit_problem, fit_csv, mode);
        if (examples->parsed())
            return do_examples(list,
                               emit_opt->count() ? std::optional<std::string>(emit_name)
                                                 : std::nullopt,
                               dir, verify_all);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace dimlaw
