#include "dimlaw/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "dimlaw/errors.hpp"

namespace dimlaw {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw Error("matrix dimensions must be at least 1x1");
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) throw Error("matrix dimensions must be at least 1x1");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw LengthMismatch("ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& columns) {
    if (columns.empty()) throw Error("matrix dimensions must be at least 1x1");
    RatMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows_)
            throw LengthMismatch("ragged columns in matrix construction");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

RatVec RatMatrix::multiply(const RatVec& x) const {
    if (x.size() != cols_) throw LengthMismatch("matrix-vector length mismatch");
    RatVec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    return out;
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

RatMatrix RatMatrix::with_column(const RatVec& extra) const {
    if (extra.size() != rows_) throw LengthMismatch("augment column length mismatch");
    RatMatrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        m(i, cols_) = extra[i];
    }
    return m;
}

void RatMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

RrefResult rref(RatMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < a.rows() && a(r, col) == 0) ++r;
        if (r == a.rows()) continue;
        a.swap_rows(r, pivot_row);

        const Rational pivot = a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) /= pivot;

        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col) == 0) continue;
            const Rational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    const std::size_t rk = pivots.size();
    return RrefResult{std::move(a), std::move(pivots), rk};
}

std::size_t rank(const RatMatrix& a) { return rref(a).rank; }

std::vector<RatVec> kernel_basis(const RatMatrix& a) {
    const RrefResult r = rref(a);
    const std::size_t n = a.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec x(n, Rational(0));
        x[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            x[r.pivot_cols[i]] = -r.rref(i, free_col);
        basis.push_back(std::move(x));
    }
    return basis;
}

RatVec solve_particular(const RatMatrix& a, const RatVec& rhs) {
    if (rhs.size() != a.rows()) throw LengthMismatch("rhs length must equal row count");
    const std::size_t n = a.cols();
    const std::size_t m = a.rows();

    // [A | rhs | I]: the trailing identity records row operations, so an
    // inconsistent row comes with the combination of original rows that
    // certifies it.
    RatMatrix aug(m, n + 1 + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = rhs[i];
        aug(i, n + 1 + i) = 1;
    }
    const RrefResult r = rref(std::move(aug));

    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
        if (r.pivot_cols[p] != n) continue;
        std::vector<std::string> combination;
        combination.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            combination.push_back(to_string(r.rref(p, n + 1 + j)));
        throw Inconsistent("no solution: rhs outside column space", std::move(combination),
                           to_string(r.rref(p, n)));
    }

    RatVec y(n, Rational(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] >= n) break;  // pivots in the identity block carry no data
        y[r.pivot_cols[i]] = r.rref(i, n);
    }
    return y;
}

RatVec primitive_integer(const RatVec& v) {
    if (is_zero(v)) throw ZeroVector("primitive_integer of the zero vector");

    BigInt denom_lcm = 1;
    for (const auto& x : v)
        if (x != 0) denom_lcm = lcm(denom_lcm, denominator(x));

    BigInt numer_gcd = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        const BigInt scaled = numerator(x) * (denom_lcm / denominator(x));
        numer_gcd = gcd(numer_gcd, abs(scaled));
    }

    const Rational lambda(denom_lcm, numer_gcd);
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * lambda;

    for (const auto& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& e : out) e = -e;
        break;
    }
    return out;
}

bool in_affine_span(const RatVec& y_candidate, const RatVec& y0,
                    const std::vector<RatVec>& kernel) {
    if (y_candidate.size() != y0.size())
        throw LengthMismatch("candidate and base point differ in length");
    for (const auto& k : kernel)
        if (k.size() != y0.size()) throw LengthMismatch("kernel vector length mismatch");

    RatVec diff(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) diff[i] = y_candidate[i] - y0[i];

    if (kernel.empty()) return is_zero(diff);

    const RatMatrix km = RatMatrix::from_columns(kernel);
    return rank(km) == rank(km.with_column(diff));
}

bool same_span(const std::vector<RatVec>& lhs, const std::vector<RatVec>& rhs,
               std::size_t length) {
    for (const auto& v : lhs)
        if (v.size() != length) throw LengthMismatch("span vector length mismatch");
    for (const auto& v : rhs)
        if (v.size() != length) throw LengthMismatch("span vector length mismatch");

    if (lhs.empty() || rhs.empty()) {
        auto all_zero = [](const std::vector<RatVec>& vs) {
            return std::all_of(vs.begin(), vs.end(), [](const RatVec& v) { return is_zero(v); });
        };
        return all_zero(lhs) && all_zero(rhs);
    }

    std::vector<RatVec> joint = lhs;
    joint.insert(joint.end(), rhs.begin(), rhs.end());
    const std::size_t joint_rank = rank(RatMatrix::from_columns(joint));
    return joint_rank == rank(RatMatrix::from_columns(lhs)) &&
           joint_rank == rank(RatMatrix::from_columns(rhs));
}

}  // namespace dimlaw
