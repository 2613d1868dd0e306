// Times the serial reference against the OpenMP kernels on the verification
// workloads (rescaling trials, data synthesis, log-log fit) and checks that
// both produce identical output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dimlaw/casestudies.hpp"
#include "dimlaw/parse.hpp"
#include "dimlaw/pi.hpp"
#include "dimlaw/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* label, double serial_ms, double openmp_ms, bool identical) {
    std::printf("%-22s serial %9.2f ms   openmp %9.2f ms   speedup %5.2fx   %s\n", label,
                serial_ms, openmp_ms, serial_ms / openmp_ms,
                identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int trials = 2'000'000;
    int rows = 2'000'000;
    if (argc > 1) trials = std::atoi(argv[1]);
    if (argc > 2) rows = std::atoi(argv[2]);

    using namespace dimlaw;
    const PiSolution sol = solve_pi(parse_problem(case_study("market5c").problem_text));

    {
        InvarianceReport serial{}, parallel{};
        const double ts =
            time_ms([&] { serial = check_invariance(sol, trials, 7, 1e-10, Exec::serial); });
        const double tp =
            time_ms([&] { parallel = check_invariance(sol, trials, 7, 1e-10, Exec::openmp); });
        report("check_invariance", ts, tp,
               serial.max_abs_log_error == parallel.max_abs_log_error &&
                   serial.passed == parallel.passed);
    }

    {
        Dataset serial = generate_power_law_data(sol, 0.5, 1.0, 1, 0.01, 7, Exec::serial);
        Dataset parallel = serial;
        const double ts = time_ms(
            [&] { serial = generate_power_law_data(sol, 0.5, 1.0, rows, 0.01, 7, Exec::serial); });
        const double tp = time_ms(
            [&] { parallel = generate_power_law_data(sol, 0.5, 1.0, rows, 0.01, 7, Exec::openmp); });
        bool identical = serial.rows() == parallel.rows();
        for (std::size_t r = 0; identical && r < serial.rows(); ++r) {
            for (std::size_t c = 0; c < serial.explanatory_count(); ++c)
                identical = identical && serial.explanatory(r, c) == parallel.explanatory(r, c);
            identical = identical && serial.target(r) == parallel.target(r);
        }
        report("generate_data", ts, tp, identical);

        FitResult fs{}, fp{};
        const double fs_ms = time_ms([&] { fs = fit_power_law(serial, sol, Exec::serial); });
        const double fp_ms = time_ms([&] { fp = fit_power_law(parallel, sol, Exec::openmp); });
        report("fit_power_law", fs_ms, fp_ms,
               fs.p_hat == fp.p_hat && fs.log_const_hat == fp.log_const_hat &&
                   fs.r_squared == fp.r_squared);
    }

    return 0;
}
