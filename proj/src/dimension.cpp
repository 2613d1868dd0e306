#include "dimlaw/dimension.hpp"

#include <unordered_set>

#include "dimlaw/errors.hpp"

namespace dimlaw {

DimensionSystem::DimensionSystem(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("a dimension system needs at least one dimension");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw Error("dimension names must be non-empty");
        if (!seen.insert(name).second)
            throw Error("duplicate dimension name '" + name + "'");
    }
}

std::optional<std::size_t> DimensionSystem::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Problem::Problem(DimensionSystem system, std::vector<Quantity> explanatory, Quantity target)
    : system_(std::move(system)),
      explanatory_(std::move(explanatory)),
      target_(std::move(target)) {
    if (explanatory_.empty())
        throw Error("a problem needs at least one explanatory quantity");

    std::unordered_set<std::string_view> seen;
    for (const auto& q : explanatory_) {
        if (q.dim.size() != system_.size())
            throw LengthMismatch("quantity '" + q.name + "' has a dimension vector of wrong length");
        if (!seen.insert(q.name).second)
            throw DuplicateQuantity("duplicate quantity '" + q.name + "'", q.name);
    }
    if (target_.dim.size() != system_.size())
        throw LengthMismatch("target has a dimension vector of wrong length");
    if (seen.count(target_.name))
        throw DuplicateQuantity("target name '" + target_.name + "' collides with an explanatory quantity",
                                target_.name);
}

RatMatrix Problem::dimension_matrix() const {
    RatMatrix b(system_.size(), explanatory_.size());
    for (std::size_t j = 0; j < explanatory_.size(); ++j)
        for (std::size_t i = 0; i < system_.size(); ++i)
            b(i, j) = explanatory_[j].dim[i];
    return b;
}

std::optional<std::size_t> Problem::index_of_quantity(std::string_view name) const {
    for (std::size_t i = 0; i < explanatory_.size(); ++i)
        if (explanatory_[i].name == name) return i;
    return std::nullopt;
}

DimVector dim_of_monomial(const Problem& problem, const RatVec& exponents) {
    if (exponents.size() != problem.quantity_count())
        throw LengthMismatch("exponent vector length must equal the quantity count");
    return DimVector(problem.dimension_matrix().multiply(exponents));
}

}  // namespace dimlaw
