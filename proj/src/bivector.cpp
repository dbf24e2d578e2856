#include "poisres/bivector.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace poisres::poisson {

namespace {

// Renders "coeff * basis" with the sign pulled out front so terms join as
// "a - b" rather than "a + -b".
struct Piece {
    bool negative;
    std::string body;
};

Piece poly_piece(const Polynomial& c, const std::string& basis) {
    if (c.terms().size() == 1) {
        const auto& [m, coef] = *c.terms().begin();
        const Polynomial abs_term =
            Polynomial::monomial(c.nvars(), m, coef.abs());
        if (abs_term == Polynomial::constant(c.nvars(), Rational(1)))
            return {coef.sign() < 0, basis};
        return {coef.sign() < 0, abs_term.str() + "*" + basis};
    }
    return {false, "(" + c.str() + ")*" + basis};
}

Piece rf_piece(const RationalFunction& c, const std::string& basis) {
    if (c.is_polynomial()) {
        // Normalized polynomial denominators are exactly 1.
        Polynomial p = c.num();
        if (!c.den().constant_value().is_one())
            p = c.den().constant_value().reciprocal() * p;
        return poly_piece(p, basis);
    }
    return {false, c.str() + "*" + basis};
}

std::string join(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& p : pieces) {
        if (first) {
            if (p.negative) out += '-';
            first = false;
        } else {
            out += p.negative ? " - " : " + ";
        }
        out += p.body;
    }
    return out;
}

}  // namespace

Bivector::Bivector(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("Bivector: nvars must be positive");
}

void Bivector::check_indices(int s, int t) const {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("Bivector: index out of range");
    if (s == t) throw std::invalid_argument("Bivector: indices must be distinct");
}

void Bivector::set(int s, int t, Polynomial g) {
    check_indices(s, t);
    if (g.nvars() != nvars_)
        throw std::invalid_argument("Bivector: coefficient has wrong variable count");
    const std::pair<int, int> key{std::min(s, t), std::max(s, t)};
    if (s > t) g = -g;
    if (g.is_zero()) {
        coeffs_.erase(key);
    } else {
        coeffs_.insert_or_assign(key, std::move(g));
    }
}

Polynomial Bivector::get(int s, int t) const {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("Bivector: index out of range");
    if (s == t) return Polynomial(nvars_);
    const auto it = coeffs_.find({std::min(s, t), std::max(s, t)});
    if (it == coeffs_.end()) return Polynomial(nvars_);
    return s < t ? it->second : -it->second;
}

std::string Bivector::str() const {
    std::vector<Piece> pieces;
    for (const auto& [key, g] : coeffs_)
        pieces.push_back(poly_piece(
            g, "∂" + std::to_string(key.first) + "∧∂" + std::to_string(key.second)));
    return join(pieces);
}

bool operator==(const Bivector& a, const Bivector& b) {
    return a.nvars() == b.nvars() && a.coeffs() == b.coeffs();
}

TriVector::TriVector(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("TriVector: nvars must be positive");
}

void TriVector::set(int i, int j, int k, Polynomial p) {
    if (i < 1 || k > nvars_ || !(i < j && j < k))
        throw std::invalid_argument("TriVector: expected ordered indices");
    if (p.nvars() != nvars_)
        throw std::invalid_argument("TriVector: coefficient has wrong variable count");
    const std::tuple<int, int, int> key{i, j, k};
    if (p.is_zero()) {
        coeffs_.erase(key);
    } else {
        coeffs_.insert_or_assign(key, std::move(p));
    }
}

Polynomial TriVector::get(int i, int j, int k) const {
    for (int v : {i, j, k})
        if (v < 1 || v > nvars_) throw std::out_of_range("TriVector: index out of range");
    if (i == j || j == k || i == k) return Polynomial(nvars_);
    int idx[3] = {i, j, k};
    // Sort the triple, tracking permutation parity.
    bool negate = false;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2 - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                negate = !negate;
            }
    const auto it = coeffs_.find({idx[0], idx[1], idx[2]});
    if (it == coeffs_.end()) return Polynomial(nvars_);
    return negate ? -it->second : it->second;
}

std::string TriVector::str() const {
    std::vector<Piece> pieces;
    for (const auto& [key, p] : coeffs_)
        pieces.push_back(poly_piece(p, "∂" + std::to_string(std::get<0>(key)) +
                                           "∧∂" + std::to_string(std::get<1>(key)) +
                                           "∧∂" + std::to_string(std::get<2>(key))));
    return join(pieces);
}

bool operator==(const TriVector& a, const TriVector& b) {
    return a.nvars() == b.nvars() && a.coeffs() == b.coeffs();
}

TriVector operator*(const Rational& c, const TriVector& t) {
    TriVector r(t.nvars());
    if (c.is_zero()) return r;
    for (const auto& [key, p] : t.coeffs())
        r.set(std::get<0>(key), std::get<1>(key), std::get<2>(key), c * p);
    return r;
}

TwoForm::TwoForm(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("TwoForm: nvars must be positive");
}

void TwoForm::set(int s, int t, RationalFunction w) {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("TwoForm: index out of range");
    if (s == t) throw std::invalid_argument("TwoForm: indices must be distinct");
    if (w.nvars() != nvars_)
        throw std::invalid_argument("TwoForm: coefficient has wrong variable count");
    const std::pair<int, int> key{std::min(s, t), std::max(s, t)};
    if (s > t) w = -w;
    if (w.is_zero()) {
        coeffs_.erase(key);
    } else {
        coeffs_.insert_or_assign(key, std::move(w));
    }
}

RationalFunction TwoForm::get(int s, int t) const {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("TwoForm: index out of range");
    if (s == t) return RationalFunction(nvars_);
    const auto it = coeffs_.find({std::min(s, t), std::max(s, t)});
    if (it == coeffs_.end()) return RationalFunction(nvars_);
    return s < t ? it->second : -it->second;
}

std::string TwoForm::str() const {
    std::vector<Piece> pieces;
    for (const auto& [key, w] : coeffs_)
        pieces.push_back(rf_piece(
            w, "dx" + std::to_string(key.first) + "∧dx" + std::to_string(key.second)));
    return join(pieces);
}

bool operator==(const TwoForm& a, const TwoForm& b) {
    return a.nvars() == b.nvars() && a.coeffs() == b.coeffs();
}

ThreeForm::ThreeForm(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("ThreeForm: nvars must be positive");
}

void ThreeForm::set(int i, int j, int k, RationalFunction w) {
    if (i < 1 || k > nvars_ || !(i < j && j < k))
        throw std::invalid_argument("ThreeForm: expected ordered indices");
    if (w.nvars() != nvars_)
        throw std::invalid_argument("ThreeForm: coefficient has wrong variable count");
    const std::tuple<int, int, int> key{i, j, k};
    if (w.is_zero()) {
        coeffs_.erase(key);
    } else {
        coeffs_.insert_or_assign(key, std::move(w));
    }
}

RationalFunction ThreeForm::get(int i, int j, int k) const {
    for (int v : {i, j, k})
        if (v < 1 || v > nvars_) throw std::out_of_range("ThreeForm: index out of range");
    if (i == j || j == k || i == k) return RationalFunction(nvars_);
    int idx[3] = {i, j, k};
    bool negate = false;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2 - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                negate = !negate;
            }
    const auto it = coeffs_.find({idx[0], idx[1], idx[2]});
    if (it == coeffs_.end()) return RationalFunction(nvars_);
    return negate ? -it->second : it->second;
}

std::string ThreeForm::str() const {
    std::vector<Piece> pieces;
    for (const auto& [key, w] : coeffs_)
        pieces.push_back(rf_piece(w, "dx" + std::to_string(std::get<0>(key)) +
                                         "∧dx" + std::to_string(std::get<1>(key)) +
                                         "∧dx" + std::to_string(std::get<2>(key))));
    return join(pieces);
}

bool operator==(const ThreeForm& a, const ThreeForm& b) {
    return a.nvars() == b.nvars() && a.coeffs() == b.coeffs();
}

}  // namespace poisres::poisson
