#pragma once

#include <string>

#include "poisres/polynomial.hpp"

namespace poisres::exactalg {

// Quotient of polynomials kept in canonical form: gcd(num, den) = 1 and the
// denominator is integer-primitive with positive leading coefficient, so
// structural equality is mathematical equality.
class RationalFunction {
public:
    explicit RationalFunction(int nvars);  // zero
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_poly(Polynomial p);

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction reciprocal() const;  // throws std::domain_error on zero

    std::string str() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
bool operator==(const RationalFunction& a, const RationalFunction& b);
inline bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
}

// Partial derivative by the quotient rule, renormalized.
RationalFunction diff(const RationalFunction& f, int var);

}  // namespace poisres::exactalg
