#include "poisres/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace poisres::exactalg {

namespace {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_degree(a);
    const int db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be positive");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    if (var < 1 || var > nvars)
        throw std::out_of_range("Polynomial: variable index out of range");
    Monomial m(nvars, 0);
    m[var - 1] = 1;
    return monomial(nvars, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Monomial exps, const Rational& c) {
    Polynomial p(nvars);
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("Polynomial: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.begin()->first);
}

int Polynomial::degree_in(int var) const {
    if (var < 1 || var > nvars_)
        throw std::out_of_range("Polynomial: variable index out of range");
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var - 1]);
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: zero has no leading term");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: zero has no leading term");
    return terms_.begin()->second;
}

void Polynomial::check_same_space(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Polynomial: variable count mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b);
    Polynomial r(a.nvars_);
    Monomial m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    Polynomial result = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational ac = c.abs();
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += 'x' + std::to_string(i + 1);
            if (m[i] > 1) vars += '^' + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out << ac.str();
        } else if (ac.is_one()) {
            out << vars;
        } else {
            out << ac.str() << '*' << vars;
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

Polynomial diff(const Polynomial& p, int var) {
    if (var < 1 || var > p.nvars())
        throw std::out_of_range("diff: variable index out of range");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        const int e = m[var - 1];
        if (e == 0) continue;
        Monomial d = m;
        d[var - 1] = e - 1;
        r.add_term(d, Rational(e) * c);
    }
    return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: expected one image per variable");
    const int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target)
            throw std::invalid_argument("substitute: images live in different spaces");
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < p.nvars(); ++i)
            if (m[i] > 0) t = t * images[i].pow(m[i]);
        r += t;
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("evaluate: expected one value per variable");
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < p.nvars(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        sum += t;
    }
    return sum;
}

Polynomial restrict_to_subspace(const Polynomial& p, int first_zeroed) {
    if (first_zeroed < 1 || first_zeroed > p.nvars() + 1)
        throw std::out_of_range("restrict_to_subspace: index out of range");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        bool survives = true;
        for (int i = first_zeroed - 1; i < p.nvars(); ++i)
            if (m[i] > 0) { survives = false; break; }
        if (survives) r.add_term(m, c);
    }
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("divide_exact: variable count mismatch");
    Polynomial q(a.nvars());
    Polynomial r = a;
    const Monomial& lb = b.leading_monomial();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        Monomial t(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            t[i] = lr[i] - lb[i];
            if (t[i] < 0) return std::nullopt;
        }
        const Rational tc = r.leading_coeff() / b.leading_coeff();
        q.add_term(t, tc);
        r -= Polynomial::monomial(a.nvars(), t, tc) * b;
    }
    return q;
}

Rational rational_content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_class n = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rational content{mpq_class(num_gcd, den_lcm)};
    if (p.leading_coeff().sign() < 0) content = -content;
    return content;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    return rational_content(p).reciprocal() * p;
}

namespace {

// Coefficient of x_var^d, as a polynomial in the same space with the x_var
// exponent zeroed out.
Polynomial coeff_in(const Polynomial& p, int var, int d) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var - 1] != d) continue;
        Monomial stripped = m;
        stripped[var - 1] = 0;
        r.add_term(stripped, c);
    }
    return r;
}

int highest_present_var(const Polynomial& p) {
    int v = 0;
    for (const auto& [m, c] : p.terms())
        for (int i = p.nvars() - 1; i >= v; --i)
            if (m[i] > 0) { v = i + 1; break; }
    return v;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// Gcd of the x_var coefficients of p, primitive with positive leading
// coefficient. Never involves x_var itself.
Polynomial content_in_var(const Polynomial& p, int var) {
    Polynomial g(p.nvars());
    for (int d = 0; d <= p.degree_in(var); ++d) {
        Polynomial c = coeff_in(p, var, d);
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_part(c) : gcd_rec(g, c);
        if (g.is_constant()) return Polynomial::constant(p.nvars(), Rational(1));
    }
    return primitive_part(g);
}

// Textbook pseudo-remainder: lc(b)^(deg a - deg b + 1) · a = q·b + prem, all
// degrees in x_var. The full power matters for the subresultant divisions.
Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
    const int db = b.degree_in(var);
    const Polynomial lcb = coeff_in(b, var, db);
    const int needed = a.degree_in(var) - db + 1;
    Polynomial r = a;
    int mults = 0;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const int dr = r.degree_in(var);
        const Polynomial lcr = coeff_in(r, var, dr);
        Monomial shift(a.nvars(), 0);
        shift[var - 1] = dr - db;
        r = lcb * r - lcr * Polynomial::monomial(a.nvars(), shift, Rational(1)) * b;
        ++mults;
    }
    for (; mults < needed && !r.is_zero(); ++mults) r = lcb * r;
    return r;
}

// Primitive-PRS gcd; both inputs nonzero, result correct up to a rational
// unit (callers normalize).
Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), Rational(1));
    // Prefer a variable both polynomials contain, with the smallest degree
    // bound: it gives the shortest pseudo-remainder sequence.
    int v = 0;
    int best = -1;
    for (int cand = 1; cand <= a.nvars(); ++cand) {
        const int da = a.degree_in(cand);
        const int db = b.degree_in(cand);
        if (da <= 0 || db <= 0) continue;
        const int score = std::min(da, db);
        if (best < 0 || score < best) {
            best = score;
            v = cand;
        }
    }
    if (v == 0) v = std::max(highest_present_var(a), highest_present_var(b));
    if (v == 0) return Polynomial::constant(a.nvars(), Rational(1));
    if (a.degree_in(v) <= 0) return gcd_rec(a, content_in_var(b, v));
    if (b.degree_in(v) <= 0) return gcd_rec(content_in_var(a, v), b);

    const Polynomial ca = content_in_var(a, v);
    const Polynomial cb = content_in_var(b, v);
    Polynomial pa = *divide_exact(a, ca);
    Polynomial pb = *divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    // Subresultant remainder sequence (Brown): every division below is exact
    // by the subresultant theory, and no content is stripped inside the loop.
    const Polynomial one = Polynomial::constant(a.nvars(), Rational(1));
    Polynomial g = one;
    Polynomial h = one;
    Polynomial gv(a.nvars());
    while (true) {
        if (pb.is_zero()) {
            gv = *divide_exact(pa, content_in_var(pa, v));
            break;
        }
        if (pb.degree_in(v) == 0) {
            gv = one;
            break;
        }
        const int delta = pa.degree_in(v) - pb.degree_in(v);
        Polynomial r = prem(pa, pb, v);
        pa = pb;
        if (!r.is_zero()) {
            r = *divide_exact(r, g * h.pow(delta));
        }
        pb = std::move(r);
        g = coeff_in(pa, v, pa.degree_in(v));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = *divide_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
    return gcd_rec(ca, cb) * gv;
}

}  // namespace

namespace {

Monomial min_exponents(const Polynomial& p) {
    Monomial lo = p.leading_monomial();
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i) lo[i] = std::min(lo[i], m[i]);
    return lo;
}

Polynomial shift_down(const Polynomial& p, const Monomial& by) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial d = m;
        for (int i = 0; i < p.nvars(); ++i) d[i] -= by[i];
        r.add_term(d, c);
    }
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("gcd: variable count mismatch");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    // Containment is common (denominator cleanup) and much cheaper than a
    // remainder sequence.
    if (divide_exact(b, a).has_value()) return primitive_part(a);
    if (divide_exact(a, b).has_value()) return primitive_part(b);
    // Split off the common monomial factor first; it is cheap to find and
    // keeps the remainder sequences small.
    const Monomial ea = min_exponents(a);
    const Monomial eb = min_exponents(b);
    Monomial common(a.nvars(), 0);
    for (int i = 0; i < a.nvars(); ++i) common[i] = std::min(ea[i], eb[i]);
    const Polynomial core =
        gcd_rec(primitive_part(shift_down(a, ea)), primitive_part(shift_down(b, eb)));
    return primitive_part(core * Polynomial::monomial(a.nvars(), common, Rational(1)));
}

}  // namespace poisres::exactalg
