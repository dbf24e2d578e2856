#pragma once

#include "poisres/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace poisres::exactalg {

// Exponent vector; one non-negative entry per variable.
using Monomial = std::vector<int>;

// Graded lexicographic order, descending: larger total degree first, ties
// broken by comparing exponents left to right (so x1 beats x2). Map iteration
// then visits terms in canonical display order, leading term first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Rational, GrlexGreater>;

// Sparse multivariate polynomial over Rational. Zero coefficients are never
// stored, so the zero polynomial is the empty term map and equality is plain
// term-map equality. All arithmetic is exact.
class Polynomial {
public:
    explicit Polynomial(int nvars);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int var);  // var is 1-based
    static Polynomial monomial(int nvars, Monomial exps, const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero included).
    Rational constant_value() const;

    int total_degree() const;      // -1 for the zero polynomial
    int degree_in(int var) const;  // -1 for the zero polynomial

    Rational coeff(const Monomial& m) const;
    // Accumulate c * x^m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    // Leading term in graded-lex order; requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial pow(int e) const;  // e >= 0

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Canonical graded-lex text form, e.g. "2*x1*x2^2 - x2 + 1/2".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void check_same_space(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

// Formal partial derivative with respect to x_var (1-based).
Polynomial diff(const Polynomial& p, int var);

// Ring homomorphism sending x_i to images[i-1]; all images must share a
// common variable space, which becomes the space of the result.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

// Set variables first_zeroed..nvars to 0, keeping the ambient variable count.
Polynomial restrict_to_subspace(const Polynomial& p, int first_zeroed);

// Exact division a / b; nullopt when b does not divide a. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Positive rational c with p = c * primitive_part(p); content(0) = 0.
Rational rational_content(const Polynomial& p);
// p scaled to coprime integer coefficients with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

// Polynomial gcd over Q[x1..xn], returned in primitive form with positive
// leading coefficient (rational scalars are units, so contents of the inputs
// do not contribute). gcd(p, 0) = primitive_part(p); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace poisres::exactalg
