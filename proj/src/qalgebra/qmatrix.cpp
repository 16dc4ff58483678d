#include "sepvar/qmatrix.hpp"

#include <sstream>
#include <utility>

namespace sepvar {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Multiplies every row by the lcm of its denominators. Returns the integer
// matrix together with the product of the row multipliers.
std::pair<IntMatrix, mpz_class> scale_rows(const QMatrix& m, std::size_t cols) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(cols));
    mpz_class total = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m(r, c).raw();
            out[r][c] = q.get_num() * (l / q.get_den());
        }
        total *= l;
    }
    return {std::move(out), total};
}

// In-place fraction-free elimination on the first `pivot_cols` columns.
// Returns the sign of the row permutation, or 0 when a pivot column is zero.
int bareiss(IntMatrix& a, std::size_t pivot_cols) {
    const std::size_t n = a.size();
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < pivot_cols && k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < a[i].size(); ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::column(const std::vector<Rational>& v) {
    QMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> QMatrix::column_vector(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: dimension mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum: dimension mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Rational mat_det(const QMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    auto [a, scale] = scale_rows(m, n);
    const int sign = bareiss(a, n);
    if (sign == 0) return 0;
    return Rational(mpz_class(sign * a[n - 1][n - 1]), scale);
}

QMatrix mat_solve(const QMatrix& m, const QMatrix& rhs) {
    if (!m.is_square()) throw PreconditionError("solve: matrix is not square");
    if (rhs.rows() != m.rows()) throw PreconditionError("solve: right-hand side has wrong row count");
    const std::size_t n = m.rows();
    const std::size_t k = rhs.cols();
    QMatrix aug(n, n + k);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        for (std::size_t c = 0; c < k; ++c) aug(r, n + c) = rhs(r, c);
    }
    auto [a, scale] = scale_rows(aug, n + k);
    if (bareiss(a, n) == 0) throw SingularMatrix();
    if (n > 0 && a[n - 1][n - 1] == 0) throw SingularMatrix();

    QMatrix x(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Rational sum(a[i][n + c]);
            for (std::size_t j = i + 1; j < n; ++j) sum -= Rational(a[i][j]) * x(j, c);
            x(i, c) = sum / Rational(a[i][i]);
        }
    }
    return x;
}

QMatrix mat_inverse(const QMatrix& m) { return mat_solve(m, QMatrix::identity(m.rows())); }

std::size_t mat_rank(const QMatrix& m) {
    auto [a, scale] = scale_rows(m, m.cols());
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                a[i][j] = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_particular(const QMatrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw PreconditionError("solve_particular: right-hand side has wrong length");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    QMatrix a(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = m(r, c);
        a(r, cols) = rhs[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a(p, col).is_zero()) ++p;
        if (p == rows) continue;
        for (std::size_t c = 0; c <= cols; ++c) std::swap(a(p, c), a(row, c));
        const Rational inv = a(row, col).inverse();
        for (std::size_t c = col; c <= cols; ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c <= cols; ++c) a(r, c) -= f * a(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!a(r, cols).is_zero()) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a(r, cols);
    return x;
}

}  // namespace sepvar
