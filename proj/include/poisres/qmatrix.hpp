#pragma once

#include <string>
#include <vector>

#include "poisres/rational.hpp"

namespace poisres::exactalg {

// Dense matrix of exact rationals. Small: the project only ever inverts
// intersection matrices and coefficient systems with a handful of rows.
class QMatrix {
public:
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    std::string str() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

bool operator==(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
std::vector<Rational> operator*(const QMatrix& m, const std::vector<Rational>& v);

Rational determinant(const QMatrix& m);

// Exact solution a of M·a = v; throws std::domain_error when M is singular.
std::vector<Rational> solve_linear(const QMatrix& m, const std::vector<Rational>& v);

// Throws std::domain_error when M is singular.
QMatrix inverse(const QMatrix& m);

// Sylvester criterion: (-1)^k · det(leading k×k minor) > 0 for every k.
// Throws std::invalid_argument when M is not symmetric.
bool is_negative_definite(const QMatrix& m);

}  // namespace poisres::exactalg
