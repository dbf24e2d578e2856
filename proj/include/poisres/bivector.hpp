#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "poisres/polynomial.hpp"
#include "poisres/rational_function.hpp"

namespace poisres::poisson {

using exactalg::Polynomial;
using exactalg::Rational;
using exactalg::RationalFunction;

// θ = Σ_{s<t} g_{st}(x) ∂s∧∂t. Stores the strict upper triangle; the accessor
// extends antisymmetrically (g_ts = -g_st, g_ss = 0).
class Bivector {
public:
    explicit Bivector(int nvars);

    int nvars() const { return nvars_; }
    const std::map<std::pair<int, int>, Polynomial>& coeffs() const { return coeffs_; }

    // Accepts any s != t; stores into the upper triangle with the sign flip.
    void set(int s, int t, Polynomial g);
    Polynomial get(int s, int t) const;

    bool is_zero() const { return coeffs_.empty(); }
    std::string str() const;

private:
    void check_indices(int s, int t) const;

    int nvars_;
    std::map<std::pair<int, int>, Polynomial> coeffs_;
};

bool operator==(const Bivector& a, const Bivector& b);

// Fully antisymmetric degree-3 coefficient table with polynomial entries
// (the shape of a Jacobiator / Schouten square).
class TriVector {
public:
    explicit TriVector(int nvars);

    int nvars() const { return nvars_; }
    const std::map<std::tuple<int, int, int>, Polynomial>& coeffs() const {
        return coeffs_;
    }

    void set(int i, int j, int k, Polynomial p);  // requires i < j < k
    Polynomial get(int i, int j, int k) const;    // any distinct triple

    bool is_zero() const { return coeffs_.empty(); }
    std::string str() const;

private:
    int nvars_;
    std::map<std::tuple<int, int, int>, Polynomial> coeffs_;
};

bool operator==(const TriVector& a, const TriVector& b);
TriVector operator*(const Rational& c, const TriVector& t);

// ω = Σ_{s<t} w_{st}(x) dxs∧dxt with rational-function coefficients.
class TwoForm {
public:
    explicit TwoForm(int nvars);

    int nvars() const { return nvars_; }
    const std::map<std::pair<int, int>, RationalFunction>& coeffs() const {
        return coeffs_;
    }

    void set(int s, int t, RationalFunction w);
    RationalFunction get(int s, int t) const;

    bool is_zero() const { return coeffs_.empty(); }
    std::string str() const;

private:
    int nvars_;
    std::map<std::pair<int, int>, RationalFunction> coeffs_;
};

bool operator==(const TwoForm& a, const TwoForm& b);

// Degree-3 table with rational-function entries (the shape of dω).
class ThreeForm {
public:
    explicit ThreeForm(int nvars);

    int nvars() const { return nvars_; }
    const std::map<std::tuple<int, int, int>, RationalFunction>& coeffs() const {
        return coeffs_;
    }

    void set(int i, int j, int k, RationalFunction w);  // requires i < j < k
    RationalFunction get(int i, int j, int k) const;

    bool is_zero() const { return coeffs_.empty(); }
    std::string str() const;

private:
    int nvars_;
    std::map<std::tuple<int, int, int>, RationalFunction> coeffs_;
};

bool operator==(const ThreeForm& a, const ThreeForm& b);

}  // namespace poisres::poisson
