#include "poisres/poisson.hpp"

#include <stdexcept>

namespace poisres::poisson {

using exactalg::diff;

Polynomial bracket(const Bivector& theta, const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != theta.nvars() || g.nvars() != theta.nvars())
        throw std::invalid_argument("bracket: variable count mismatch");
    Polynomial out(theta.nvars());
    for (const auto& [key, gst] : theta.coeffs()) {
        const auto [s, t] = key;
        out += gst * (diff(f, s) * diff(g, t) - diff(f, t) * diff(g, s));
    }
    return out;
}

TriVector jacobiator(const Bivector& theta) {
    const int n = theta.nvars();
    TriVector out(n);
    for (int i = 1; i <= n; ++i) {
        const Polynomial xi = Polynomial::variable(n, i);
        for (int j = i + 1; j <= n; ++j) {
            const Polynomial xj = Polynomial::variable(n, j);
            for (int k = j + 1; k <= n; ++k) {
                const Polynomial xk = Polynomial::variable(n, k);
                Polynomial c = bracket(theta, xi, bracket(theta, xj, xk));
                c += bracket(theta, xj, bracket(theta, xk, xi));
                c += bracket(theta, xk, bracket(theta, xi, xj));
                out.set(i, j, k, std::move(c));
            }
        }
    }
    return out;
}

TriVector schouten_square(const Bivector& theta) {
    const int n = theta.nvars();
    TriVector out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Polynomial c(n);
                for (int l = 1; l <= n; ++l) {
                    c += theta.get(l, k) * diff(theta.get(i, j), l);
                    c += theta.get(l, i) * diff(theta.get(j, k), l);
                    c += theta.get(l, j) * diff(theta.get(k, i), l);
                }
                out.set(i, j, k, Rational(2) * c);
            }
    return out;
}

std::vector<Polynomial> anchor(const Bivector& theta,
                               const std::vector<Polynomial>& alpha) {
    const int n = theta.nvars();
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("anchor: expected one coefficient per variable");
    for (const auto& a : alpha)
        if (a.nvars() != n)
            throw std::invalid_argument("anchor: coefficient has wrong variable count");
    std::vector<Polynomial> field(n, Polynomial(n));
    for (int t = 1; t <= n; ++t)
        for (int s = 1; s <= n; ++s)
            field[t - 1] += alpha[s - 1] * theta.get(s, t);
    return field;
}

namespace {

Polynomial poly_matrix_determinant(std::vector<std::vector<Polynomial>> m, int n) {
    // Cofactor expansion along the first column of the trailing minor;
    // intersection-type sizes stay small, so n! is affordable.
    if (n == 1) return m[0][0];
    Polynomial det(m[0][0].nvars());
    for (int r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        const Polynomial cof = m[r][0] * poly_matrix_determinant(std::move(minor), n - 1);
        if (r % 2 == 0) {
            det += cof;
        } else {
            det -= cof;
        }
    }
    return det;
}

std::vector<std::vector<Polynomial>> coefficient_matrix(const Bivector& theta) {
    const int n = theta.nvars();
    std::vector<std::vector<Polynomial>> g(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
            if (s != t) g[s - 1][t - 1] = theta.get(s, t);
    return g;
}

// Pfaffian of the antisymmetric submatrix indexed by `idx` (0-based rows of
// m), by expansion along the first active row.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& m,
                    const std::vector<int>& idx, int nvars) {
    if (idx.empty()) return Polynomial::constant(nvars, Rational(1));
    Polynomial sum(nvars);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const Polynomial& top = m[idx[0]][idx[k]];
        if (top.is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(idx.size() - 2);
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (i != k) sub.push_back(idx[i]);
        const Polynomial inner = top * pfaffian(m, sub, nvars);
        if (k % 2 == 1) {
            sum += inner;
        } else {
            sum -= inner;
        }
    }
    return sum;
}

// -(N/D)^{-1} for antisymmetric N: entry (s,t) is
// (-1)^{s+t+1} · D · Pf(N without rows/cols s,t) / Pf(N). Working with
// Pfaffians instead of determinants keeps denominators at half the degree
// the adjugate would produce, so the per-entry normalization stays cheap.
TwoForm negated_inverse(const std::vector<std::vector<Polynomial>>& num,
                        const Polynomial& den, int n, int nvars) {
    if (n % 2 != 0)
        throw std::domain_error("matrix inverse: degenerate coefficient matrix");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    const Polynomial pf = pfaffian(num, all, nvars);
    if (pf.is_zero())
        throw std::domain_error("matrix inverse: degenerate coefficient matrix");
    TwoForm out(nvars);
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) {
            std::vector<int> sub;
            sub.reserve(n - 2);
            for (int i = 0; i < n; ++i)
                if (i != s - 1 && i != t - 1) sub.push_back(i);
            Polynomial w = den * pfaffian(num, sub, nvars);
            if (w.is_zero()) continue;
            if ((s + t) % 2 == 0) w = -w;
            out.set(s, t, RationalFunction(std::move(w), pf));
        }
    return out;
}

}  // namespace

Polynomial coefficient_determinant(const Bivector& theta) {
    return poly_matrix_determinant(coefficient_matrix(theta), theta.nvars());
}

bool is_nondegenerate(const Bivector& theta) {
    if (theta.nvars() % 2 != 0) return false;
    return !coefficient_determinant(theta).is_zero();
}

TwoForm invert_to_form(const Bivector& theta) {
    if (!is_nondegenerate(theta))
        throw std::domain_error("invert_to_form: degenerate bivector");
    const int n = theta.nvars();
    return negated_inverse(coefficient_matrix(theta),
                           Polynomial::constant(n, Rational(1)), n, n);
}

TwoForm invert_form(const TwoForm& omega) {
    const int n = omega.nvars();
    // Put every entry over one common denominator, then invert N/D.
    Polynomial common = Polynomial::constant(n, Rational(1));
    for (const auto& [key, w] : omega.coeffs()) {
        const Polynomial g = exactalg::gcd(common, w.den());
        common = *exactalg::divide_exact(common, g) * w.den();
    }
    std::vector<std::vector<Polynomial>> num(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            if (s == t) continue;
            const RationalFunction w = omega.get(s, t);
            if (w.is_zero()) continue;
            num[s - 1][t - 1] = w.num() * *exactalg::divide_exact(common, w.den());
        }
    return negated_inverse(num, common, n, n);
}

ThreeForm exterior_derivative(const TwoForm& omega) {
    const int n = omega.nvars();
    ThreeForm out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                RationalFunction c = diff(omega.get(j, k), i);
                c = c - diff(omega.get(i, k), j);
                c = c + diff(omega.get(i, j), k);
                out.set(i, j, k, c);
            }
    return out;
}

}  // namespace poisres::poisson
