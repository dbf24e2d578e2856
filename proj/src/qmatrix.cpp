#include "poisres/qmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace poisres::exactalg {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("QMatrix: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw std::invalid_argument("QMatrix: no rows");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("QMatrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Rational& QMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("QMatrix: index out of range");
    return data_[static_cast<std::size_t>(i) * cols_ + j];
}

const Rational& QMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("QMatrix: index out of range");
    return data_[static_cast<std::size_t>(i) * cols_ + j];
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << ']' << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

std::vector<Rational> operator*(const QMatrix& m, const std::vector<Rational>& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("QMatrix: dimension mismatch in product");
    std::vector<Rational> r(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

namespace {

// Gaussian elimination on an augmented block [M | B]; returns false when M is
// singular. On success [M | B] becomes [I | M^{-1}B].
bool reduce_augmented(QMatrix& m, int lhs_cols) {
    const int n = m.rows();
    for (int col = 0; col < lhs_cols; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
        const Rational inv = m.at(col, col).reciprocal();
        for (int j = 0; j < m.cols(); ++j) m.at(col, j) *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || m.at(row, col).is_zero()) continue;
            const Rational factor = m.at(row, col);
            for (int j = 0; j < m.cols(); ++j)
                m.at(row, j) -= factor * m.at(col, j);
        }
    }
    return true;
}

}  // namespace

Rational determinant(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    QMatrix a = m;
    const int n = a.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        const Rational inv = a.at(col, col).reciprocal();
        for (int row = col + 1; row < n; ++row) {
            if (a.at(row, col).is_zero()) continue;
            const Rational factor = a.at(row, col) * inv;
            for (int j = col; j < n; ++j)
                a.at(row, j) -= factor * a.at(col, j);
        }
    }
    return det;
}

std::vector<Rational> solve_linear(const QMatrix& m, const std::vector<Rational>& v) {
    if (!m.is_square()) throw std::invalid_argument("solve_linear: matrix not square");
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const int n = m.rows();
    QMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = v[i];
    }
    if (!reduce_augmented(aug, n))
        throw std::domain_error("solve_linear: singular matrix");
    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    if (!reduce_augmented(aug, n))
        throw std::domain_error("inverse: singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

bool is_negative_definite(const QMatrix& m) {
    if (!m.is_symmetric())
        throw std::invalid_argument("is_negative_definite: matrix not symmetric");
    const int n = m.rows();
    for (int k = 1; k <= n; ++k) {
        QMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(i, j);
        Rational d = determinant(minor);
        if (k % 2 == 1) d = -d;
        if (d.sign() <= 0) return false;
    }
    return true;
}

}  // namespace poisres::exactalg
