#include "dimlaw/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace dimlaw {

nlohmann::json to_json(const RatVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

nlohmann::json to_json(const RatMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

nlohmann::json to_json(const PiSolution& solution) {
    nlohmann::json kernel = nlohmann::json::array();
    for (const auto& x : solution.kernel) kernel.push_back(to_json(x));

    nlohmann::json quantities = nlohmann::json::array();
    for (const auto& q : solution.problem.explanatory()) quantities.push_back(q.name);

    return nlohmann::json{{"k", solution.k},
                          {"y", to_json(solution.y)},
                          {"kernel", std::move(kernel)},
                          {"quantities", std::move(quantities)},
                          {"target", solution.problem.target().name}};
}

nlohmann::json to_json(const InvarianceReport& report) {
    return nlohmann::json{{"trials", report.trials},
                          {"max_abs_log_error", round_sig9(report.max_abs_log_error)},
                          {"passed", report.passed},
                          {"tolerance", report.tolerance}};
}

nlohmann::json to_json(const FitResult& fit) {
    nlohmann::json out{{"log_const_hat", round_sig9(fit.log_const_hat)},
                       {"r_squared", round_sig9(fit.r_squared)}};
    if (fit.p_hat) out["p_hat"] = round_sig9(*fit.p_hat);
    return out;
}

double round_sig9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return std::strtod(buf, nullptr);
}

}  // namespace dimlaw
