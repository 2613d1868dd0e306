#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dimlaw/pi.hpp"

namespace dimlaw {

/// Which loop body runs the independent trials/rows. Both produce
/// bit-identical output: every trial derives its own RNG substream from
/// (seed, index), and reductions happen in index order. `serial` is the
/// reference implementation the tests and the benchmark compare against.
enum class Exec { serial, openmp };

/// Positive-valued observations of the explanatory quantities and the
/// target. Column names are explanatory names in problem order followed by
/// the target name; values are row-major.
class Dataset {
public:
    Dataset(std::vector<std::string> column_names, std::vector<double> values);

    std::size_t rows() const { return values_.size() / names_.size(); }
    std::size_t explanatory_count() const { return names_.size() - 1; }
    const std::vector<std::string>& names() const { return names_; }

    double explanatory(std::size_t row, std::size_t col) const {
        return values_[row * names_.size() + col];
    }
    double target(std::size_t row) const {
        return values_[row * names_.size() + explanatory_count()];
    }

    /// Throws unless the column names are exactly the problem's explanatory
    /// names in order, then the target name.
    void validate_against(const Problem& problem) const;

    static Dataset from_csv(std::istream& in);
    static Dataset from_csv_file(const std::string& path);
    void to_csv(std::ostream& out) const;

private:
    std::vector<std::string> names_;
    std::vector<double> values_;
};

struct RescaleResult {
    std::vector<double> values;
    double target_factor;
};

/// Applies a unit rescaling: values[i] picks up prod_j scales[j]^B[j][i],
/// and the returned target_factor is prod_j scales[j]^a[j].
RescaleResult rescale_values(const Problem& problem, const std::vector<double>& values,
                             const std::vector<double>& scales);

struct InvarianceReport {
    int trials;
    double max_abs_log_error;
    bool passed;
    double tolerance;
};

/// Monte-Carlo check that every dimensionless group and the deflated target
/// are invariant under random unit rescalings. Per trial: explanatory values
/// drawn log-uniform over [e^-2, e^2], per-dimension scales log-uniform over
/// [e^-3, e^3]; everything is evaluated in log space and the largest
/// absolute log discrepancy is reported.
InvarianceReport check_invariance(const PiSolution& solution, int trials, std::uint64_t seed,
                                  double tolerance, Exec exec = Exec::openmp);

/// Synthesizes data obeying target = const * prod W^y * pi^p (pi = the
/// single dimensionless group when k == 1), with multiplicative lognormal
/// noise exp(eps), eps ~ N(0, noise_sigma^2). Deterministic per seed.
Dataset generate_power_law_data(const PiSolution& solution, double p_true, double const_true,
                                int n, double noise_sigma, std::uint64_t seed,
                                Exec exec = Exec::openmp);

struct FitResult {
    std::optional<double> p_hat;  // absent for constant-only fits
    double log_const_hat;
    double r_squared;
};

/// OLS of (log target - y . log W) on log pi. Needs k == 1 and a
/// non-degenerate spread of the group values.
FitResult fit_power_law(const Dataset& data, const PiSolution& solution,
                        Exec exec = Exec::openmp);

/// Estimates the constant of target = const * prod W^e: the mean of the
/// deflated log target. r_squared measures how much of the raw log-target
/// variance the monomial explains.
FitResult fit_constant(const Dataset& data, const Monomial& monomial,
                       Exec exec = Exec::openmp);

}  // namespace dimlaw
