#include "poisres/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace poisres::exactalg {

RationalFunction::RationalFunction(int nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw std::invalid_argument("RationalFunction: variable count mismatch");
    if (den_.is_zero())
        throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
    const int n = p.nvars();
    return RationalFunction(std::move(p), Polynomial::constant(n, Rational(1)));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ = den_.constant_value().reciprocal() * num_;
        den_ = Polynomial::constant(num_.nvars(), Rational(1));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    const Rational scale = rational_content(den_).reciprocal();
    num_ = scale * num_;
    den_ = scale * den_;
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::constant(den_.nvars(), Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den() == b.den()) return RationalFunction(a.num() + b.num(), a.den());
    return RationalFunction(a.num() * b.den() + b.num() * a.den(),
                            a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den() == b.den()) return RationalFunction(a.num() - b.num(), a.den());
    return RationalFunction(a.num() * b.den() - b.num() * a.den(),
                            a.den() * b.den());
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num() * b.den(), a.den() * b.num());
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num() == b.num() && a.den() == b.den();
}

RationalFunction diff(const RationalFunction& f, int var) {
    return RationalFunction(
        diff(f.num(), var) * f.den() - f.num() * diff(f.den(), var),
        f.den() * f.den());
}

}  // namespace poisres::exactalg
