#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimlaw/linalg.hpp"
#include "dimlaw/rational.hpp"

namespace dimlaw {

/// Ordered list of fundamental-dimension names. The order fixes the row
/// order of every dimension matrix built over the system.
class DimensionSystem {
public:
    explicit DimensionSystem(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const DimensionSystem&, const DimensionSystem&) = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector of a quantity over the fundamental dimensions. The
/// all-zero vector is a dimensionless quantity.
class DimVector {
public:
    explicit DimVector(RatVec exponents) : exponents_(std::move(exponents)) {}
    static DimVector zero(std::size_t size) { return DimVector(RatVec(size, Rational(0))); }

    std::size_t size() const { return exponents_.size(); }
    const Rational& operator[](std::size_t i) const { return exponents_[i]; }
    Rational& operator[](std::size_t i) { return exponents_[i]; }
    const RatVec& exponents() const { return exponents_; }
    bool is_dimensionless() const { return is_zero(exponents_); }

    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    RatVec exponents_;
};

struct Quantity {
    std::string name;
    DimVector dim;

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

/// Explanatory quantities (the columns of the dimension matrix) plus the
/// target quantity, all over one dimension system.
class Problem {
public:
    Problem(DimensionSystem system, std::vector<Quantity> explanatory, Quantity target);

    const DimensionSystem& system() const { return system_; }
    const std::vector<Quantity>& explanatory() const { return explanatory_; }
    const Quantity& target() const { return target_; }
    std::size_t quantity_count() const { return explanatory_.size(); }

    /// m x n matrix whose i-th column is explanatory[i].dim.
    RatMatrix dimension_matrix() const;
    /// The target's exponent vector (length m).
    RatVec target_exponents() const { return target_.dim.exponents(); }

    std::optional<std::size_t> index_of_quantity(std::string_view name) const;

    friend bool operator==(const Problem&, const Problem&) = default;

private:
    DimensionSystem system_;
    std::vector<Quantity> explanatory_;
    Quantity target_;
};

/// B . exponents, exactly. An all-zero result certifies that the monomial
/// prod W_i^{e_i} is dimensionless.
DimVector dim_of_monomial(const Problem& problem, const RatVec& exponents);

}  // namespace dimlaw
