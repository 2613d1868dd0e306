#pragma once

#include <cstddef>
#include <vector>

#include "dimlaw/rational.hpp"

namespace dimlaw {

/// Dense row-major matrix of exact rationals. Everything in this header is
/// exact; no floating point enters the elimination.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_columns(const std::vector<RatVec>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    RatVec multiply(const RatVec& x) const;
    RatVec row(std::size_t i) const;
    RatMatrix with_column(const RatVec& extra) const;
    void swap_rows(std::size_t i, std::size_t j);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RatMatrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

/// Gauss-Jordan with first-nonzero pivoting (exact arithmetic, so no
/// magnitude pivoting; determinism matters more).
RrefResult rref(RatMatrix a);

std::size_t rank(const RatMatrix& a);

/// Canonical basis of the nullspace: one vector per free column, free
/// variable set to 1, remaining free variables 0, pivot variables
/// back-substituted. Empty when the matrix has full column rank.
std::vector<RatVec> kernel_basis(const RatMatrix& a);

/// The RREF-canonical particular solution of A y = a (all free-column
/// entries zero). Throws Inconsistent, carrying a row-combination
/// certificate, when a is outside the column space.
RatVec solve_particular(const RatMatrix& a, const RatVec& rhs);

/// Scales v by the positive lambda that makes the entries coprime integers,
/// then flips the sign so the first nonzero entry is positive.
RatVec primitive_integer(const RatVec& v);

/// True iff y_candidate - y0 lies in span(kernel), decided exactly.
bool in_affine_span(const RatVec& y_candidate, const RatVec& y0,
                    const std::vector<RatVec>& kernel);

/// True iff the two sets of vectors span the same subspace.
bool same_span(const std::vector<RatVec>& lhs, const std::vector<RatVec>& rhs,
               std::size_t length);

}  // namespace dimlaw
