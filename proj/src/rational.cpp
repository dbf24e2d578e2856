#include "poisres/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace poisres::exactalg {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace poisres::exactalg
