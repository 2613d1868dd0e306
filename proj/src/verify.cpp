#include "dimlaw/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dimlaw/errors.hpp"
#include "dimlaw/rng.hpp"

namespace dimlaw {

namespace {

constexpr double kLogValueLo = -2.0, kLogValueHi = 2.0;
constexpr double kLogScaleLo = -3.0, kLogScaleHi = 3.0;

// Per-trial scratch lives on the stack; plenty for the matrices this engine
// is built for (the case studies top out at 6 dimensions, 8 quantities).
constexpr std::size_t kMaxSize = 32;

/// Double-precision snapshot of a PiSolution, flattened for the kernels.
struct NumericSolution {
    std::size_t m = 0, n = 0, k = 0;
    std::vector<double> b;  // row-major m x n
    std::vector<double> a;  // m
    std::vector<double> y;  // n
    std::vector<std::vector<double>> kernel;

    explicit NumericSolution(const PiSolution& s) {
        const RatMatrix bm = s.problem.dimension_matrix();
        m = bm.rows();
        n = bm.cols();
        k = s.k;
        if (m > kMaxSize || n > kMaxSize)
            throw Error("verification supports at most 32 dimensions and 32 quantities");
        b.resize(m * n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b[i * n + j] = bm(i, j).convert_to<double>();
        for (const auto& e : s.problem.target_exponents())
            a.push_back(e.convert_to<double>());
        for (const auto& e : s.y) y.push_back(e.convert_to<double>());
        for (const auto& x : s.kernel) {
            std::vector<double> xv;
            for (const auto& e : x) xv.push_back(e.convert_to<double>());
            kernel.push_back(std::move(xv));
        }
    }
};

/// One rescaling trial: draw values and scales, evaluate every group and the
/// deflated target in log space before/after the rescaling, return the worst
/// absolute discrepancy. Draw order (values, then scales) is part of the
/// reproducibility contract.
double invariance_trial_error(const NumericSolution& ns, std::uint64_t seed,
                              std::uint64_t trial) {
    SplitMix64 rng = SplitMix64::substream(seed, trial);

    std::array<double, kMaxSize> log_values{}, rescaled{}, log_scales{};
    for (std::size_t i = 0; i < ns.n; ++i)
        log_values[i] = rng.next_uniform(kLogValueLo, kLogValueHi);
    for (std::size_t j = 0; j < ns.m; ++j)
        log_scales[j] = rng.next_uniform(kLogScaleLo, kLogScaleHi);

    for (std::size_t i = 0; i < ns.n; ++i) {
        double shift = 0.0;
        for (std::size_t j = 0; j < ns.m; ++j) shift += ns.b[j * ns.n + i] * log_scales[j];
        rescaled[i] = log_values[i] + shift;
    }

    double worst = 0.0;
    for (const auto& x : ns.kernel) {
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < ns.n; ++i) {
            before += x[i] * log_values[i];
            after += x[i] * rescaled[i];
        }
        worst = std::max(worst, std::fabs(after - before));
    }

    // Deflated target target * prod W^-y, with log(target) = 0 before the
    // rescaling and its covariant shift sum_j a_j log s_j after.
    double before = 0.0, after = 0.0;
    for (std::size_t i = 0; i < ns.n; ++i) {
        before -= ns.y[i] * log_values[i];
        after -= ns.y[i] * rescaled[i];
    }
    for (std::size_t j = 0; j < ns.m; ++j) after += ns.a[j] * log_scales[j];
    worst = std::max(worst, std::fabs(after - before));

    return worst;
}

void generate_row(const NumericSolution& ns, double p_true, double log_const,
                  double noise_sigma, std::uint64_t seed, std::uint64_t row, double* out) {
    SplitMix64 rng = SplitMix64::substream(seed, row);

    std::array<double, kMaxSize> log_values{};
    for (std::size_t i = 0; i < ns.n; ++i)
        log_values[i] = rng.next_uniform(kLogValueLo, kLogValueHi);

    double log_target = log_const;
    for (std::size_t i = 0; i < ns.n; ++i) log_target += ns.y[i] * log_values[i];
    if (ns.k == 1) {
        double log_group = 0.0;
        for (std::size_t i = 0; i < ns.n; ++i) log_group += ns.kernel[0][i] * log_values[i];
        log_target += p_true * log_group;
    }
    if (noise_sigma > 0.0) log_target += noise_sigma * rng.next_normal();

    for (std::size_t i = 0; i < ns.n; ++i) out[i] = std::exp(log_values[i]);
    out[ns.n] = std::exp(log_target);
}

/// Deflated log target w_r = log t_r - e . log W_r, and optionally the log
/// group z_r = x . log W_r, for every row. The elementwise pass is the
/// parallel section; all reductions over the results stay sequential so the
/// output is independent of the thread count.
void deflate_rows(const Dataset& data, const std::vector<double>& exponents,
                  const std::vector<double>* group, std::vector<double>& w,
                  std::vector<double>& z, Exec exec) {
    const std::size_t rows = data.rows();
    const std::size_t n = data.explanatory_count();
    w.resize(rows);
    if (group) z.resize(rows);

    auto body = [&](std::size_t r) {
        double wr = std::log(data.target(r));
        double zr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double lv = std::log(data.explanatory(r, i));
            wr -= exponents[i] * lv;
            if (group) zr += (*group)[i] * lv;
        }
        w[r] = wr;
        if (group) z[r] = zr;
    };

    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (long long r = 0; r < static_cast<long long>(rows); ++r)
            body(static_cast<std::size_t>(r));
    } else {
        for (std::size_t r = 0; r < rows; ++r) body(r);
    }
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> column_names, std::vector<double> values)
    : names_(std::move(column_names)), values_(std::move(values)) {
    if (names_.size() < 2) throw Error("a dataset needs at least one explanatory column");
    if (values_.empty() || values_.size() % names_.size() != 0)
        throw Error("dataset values must form whole rows");
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        const double v = values_[idx];
        if (!(v > 0.0) || !std::isfinite(v)) {
            const std::size_t row = idx / names_.size();
            const std::size_t col = idx % names_.size();
            throw NonPositiveValue("row " + std::to_string(row + 1) + ", column '" +
                                       names_[col] + "': values must be positive",
                                   row + 1, col + 1);
        }
    }
}

void Dataset::validate_against(const Problem& problem) const {
    const auto& quantities = problem.explanatory();
    if (explanatory_count() != quantities.size() ||
        names_.back() != problem.target().name)
        throw Error("dataset columns do not match the problem's quantities");
    for (std::size_t i = 0; i < quantities.size(); ++i)
        if (names_[i] != quantities[i].name)
            throw Error("dataset column " + std::to_string(i + 1) + " is '" + names_[i] +
                        "', expected '" + quantities[i].name + "'");
}

Dataset Dataset::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty CSV", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> names;
    {
        std::stringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t");
            const auto last = cell.find_last_not_of(" \t");
            names.push_back(first == std::string::npos ? ""
                                                       : cell.substr(first, last - first + 1));
        }
    }
    if (names.size() < 2) throw FormatError("CSV header needs at least two columns", 1);

    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        std::stringstream row(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(row, cell, ',')) {
            ++col;
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                throw FormatError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(col) + ": not a number",
                                  line_no);
            }
            if (cell.find_first_not_of(" \t", consumed) != std::string::npos)
                throw FormatError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(col) + ": trailing characters",
                                  line_no);
            if (!(v > 0.0) || !std::isfinite(v))
                throw NonPositiveValue("line " + std::to_string(line_no) + ", column " +
                                           std::to_string(col) + " ('" + names[col - 1] +
                                           "'): values must be positive",
                                       line_no - 1, col);
            values.push_back(v);
        }
        if (col != names.size())
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(names.size()) + " cells, got " +
                                  std::to_string(col),
                              line_no);
    }
    if (values.empty()) throw FormatError("CSV has no data rows", line_no);
    return Dataset(std::move(names), std::move(values));
}

Dataset Dataset::from_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return from_csv(in);
}

void Dataset::to_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        out << (i ? "," : "") << names_[i];
    out << "\n";
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < names_.size(); ++c)
            out << (c ? "," : "") << format_cell(values_[r * names_.size() + c]);
        out << "\n";
    }
}

RescaleResult rescale_values(const Problem& problem, const std::vector<double>& values,
                             const std::vector<double>& scales) {
    const std::size_t n = problem.quantity_count();
    const std::size_t m = problem.system().size();
    if (values.size() != n) throw LengthMismatch("one value per explanatory quantity expected");
    if (scales.size() != m) throw LengthMismatch("one scale per dimension expected");
    for (std::size_t i = 0; i < n; ++i)
        if (!(values[i] > 0.0))
            throw NonPositiveValue("value for '" + problem.explanatory()[i].name +
                                       "' must be positive",
                                   1, i + 1);
    for (std::size_t j = 0; j < m; ++j)
        if (!(scales[j] > 0.0))
            throw NonPositiveScale("scale for dimension '" + problem.system().names()[j] +
                                   "' must be positive");

    const RatMatrix b = problem.dimension_matrix();
    RescaleResult out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double factor = 1.0;
        for (std::size_t j = 0; j < m; ++j)
            factor *= std::pow(scales[j], b(j, i).convert_to<double>());
        out.values[i] = values[i] * factor;
    }
    out.target_factor = 1.0;
    const RatVec a = problem.target_exponents();
    for (std::size_t j = 0; j < m; ++j)
        out.target_factor *= std::pow(scales[j], a[j].convert_to<double>());
    return out;
}

InvarianceReport check_invariance(const PiSolution& solution, int trials, std::uint64_t seed,
                                  double tolerance, Exec exec) {
    if (trials < 1) throw Error("trials must be at least 1");
    if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
    const NumericSolution ns(solution);

    double worst = 0.0;
    if (exec == Exec::openmp) {
        std::vector<double> per_trial(trials);
#pragma omp parallel for schedule(static)
        for (int t = 0; t < trials; ++t)
            per_trial[t] = invariance_trial_error(ns, seed, static_cast<std::uint64_t>(t));
        for (double e : per_trial) worst = std::max(worst, e);
    } else {
        for (int t = 0; t < trials; ++t)
            worst = std::max(worst,
                             invariance_trial_error(ns, seed, static_cast<std::uint64_t>(t)));
    }

    return InvarianceReport{trials, worst, worst <= tolerance, tolerance};
}

Dataset generate_power_law_data(const PiSolution& solution, double p_true, double const_true,
                                int n, double noise_sigma, std::uint64_t seed, Exec exec) {
    if (solution.k > 1)
        throw BadDegreesOfFreedom("data generation needs k in {0, 1}, got " +
                                  std::to_string(solution.k));
    if (n < 1) throw Error("need at least one row");
    if (!(const_true > 0.0)) throw Error("const_true must be positive");
    if (noise_sigma < 0.0) throw Error("noise_sigma must be non-negative");

    const NumericSolution ns(solution);
    const double log_const = std::log(const_true);
    const std::size_t width = ns.n + 1;
    std::vector<double> values(static_cast<std::size_t>(n) * width);

    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (int r = 0; r < n; ++r)
            generate_row(ns, p_true, log_const, noise_sigma, seed,
                         static_cast<std::uint64_t>(r), values.data() + r * width);
    } else {
        for (int r = 0; r < n; ++r)
            generate_row(ns, p_true, log_const, noise_sigma, seed,
                         static_cast<std::uint64_t>(r), values.data() + r * width);
    }

    std::vector<std::string> names;
    for (const auto& q : solution.problem.explanatory()) names.push_back(q.name);
    names.push_back(solution.problem.target().name);
    return Dataset(std::move(names), std::move(values));
}

FitResult fit_power_law(const Dataset& data, const PiSolution& solution, Exec exec) {
    if (solution.k != 1)
        throw BadDegreesOfFreedom("power-law fit needs exactly one degree of freedom, got " +
                                  std::to_string(solution.k));
    data.validate_against(solution.problem);
    if (data.rows() < 3) throw DegenerateDesign("need at least 3 rows to fit a slope");

    const NumericSolution ns(solution);
    std::vector<double> w, z;
    deflate_rows(data, ns.y, &ns.kernel[0], w, z, exec);

    const auto [zmin_it, zmax_it] = std::minmax_element(z.begin(), z.end());
    const double spread = *zmax_it - *zmin_it;
    if (spread <= 1e-12 * std::max({1.0, std::fabs(*zmin_it), std::fabs(*zmax_it)}))
        throw DegenerateDesign("all group values coincide; the exponent is unidentifiable");

    const double mz = mean_of(z);
    const double mw = mean_of(w);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t r = 0; r < z.size(); ++r) {
        const double dz = z[r] - mz;
        sxx += dz * dz;
        sxy += dz * (w[r] - mw);
    }
    const double slope = sxy / sxx;
    const double intercept = mw - slope * mz;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t r = 0; r < z.size(); ++r) {
        const double resid = w[r] - slope * z[r] - intercept;
        ss_res += resid * resid;
        const double dw = w[r] - mw;
        ss_tot += dw * dw;
    }
    const double r2 = ss_tot <= static_cast<double>(z.size()) * 1e-24
                          ? 1.0
                          : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return FitResult{slope, intercept, r2};
}

FitResult fit_constant(const Dataset& data, const Monomial& monomial, Exec exec) {
    if (monomial.exponents.size() != data.explanatory_count())
        throw LengthMismatch("monomial exponents do not match the dataset columns");

    std::vector<double> exponents;
    for (const auto& e : monomial.exponents) exponents.push_back(e.convert_to<double>());

    std::vector<double> w, unused;
    deflate_rows(data, exponents, nullptr, w, unused, exec);
    const double log_const = mean_of(w);

    // Raw log-target variance is the yardstick: a good monomial should
    // absorb essentially all of it.
    std::vector<double> raw(data.rows());
    for (std::size_t r = 0; r < data.rows(); ++r) raw[r] = std::log(data.target(r));
    const double mraw = mean_of(raw);

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t r = 0; r < data.rows(); ++r) {
        const double resid = w[r] - log_const;
        ss_res += resid * resid;
        const double d = raw[r] - mraw;
        ss_tot += d * d;
    }
    const double r2 = ss_tot <= static_cast<double>(data.rows()) * 1e-24
                          ? 1.0
                          : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return FitResult{std::nullopt, log_const, r2};
}

}  // namespace dimlaw
