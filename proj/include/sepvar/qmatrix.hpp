#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sepvar/rational.hpp"

namespace sepvar {

/// Dense row-major matrix over the rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix column(const std::vector<Rational>& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    QMatrix transpose() const;
    std::vector<Rational> column_vector(std::size_t c) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact determinant via Bareiss elimination on the row-scaled integer matrix.
Rational mat_det(const QMatrix& m);

/// Solves M X = rhs exactly. Throws SingularMatrix when det M = 0.
QMatrix mat_solve(const QMatrix& m, const QMatrix& rhs);

QMatrix mat_inverse(const QMatrix& m);

std::size_t mat_rank(const QMatrix& m);

/// One solution of the (possibly under-determined) system M x = rhs, or
/// nullopt when inconsistent. Columns are eliminated left to right and free
/// coordinates are set to zero, so the result is deterministic in the column
/// order.
std::optional<std::vector<Rational>> solve_particular(const QMatrix& m, const std::vector<Rational>& rhs);

}  // namespace sepvar
