#include "poisres/blowup.hpp"

#include <algorithm>
#include <stdexcept>

#include "poisres/poisson.hpp"

namespace poisres::blowup {

using exactalg::Monomial;

namespace {

// True iff every term of p carries a positive power of z_var.
bool divisible_by_var(const Polynomial& p, int var) {
    if (p.is_zero()) return false;
    for (const auto& [m, c] : p.terms())
        if (m[var - 1] == 0) return false;
    return true;
}

Polynomial divide_by_var(const Polynomial& p, int var) {
    Polynomial q(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial shifted = m;
        shifted[var - 1] -= 1;
        q.add_term(shifted, c);
    }
    return q;
}

}  // namespace

Center::Center(int nvars, int k) : nvars(nvars), k(k) {
    if (nvars < 2) throw std::invalid_argument("Center: nvars must be at least 2");
    if (k < 0 || nvars - k < 2)
        throw std::invalid_argument("Center: codimension must be at least 2");
}

std::vector<int> Center::charts() const {
    std::vector<int> out;
    for (int j = k + 1; j <= nvars; ++j) out.push_back(j);
    return out;
}

ChartBivector::ChartBivector(int nvars, int j) : nvars_(nvars), chart_(j) {
    if (nvars < 2)
        throw std::invalid_argument("ChartBivector: nvars must be at least 2");
    if (j < 1 || j > nvars)
        throw std::out_of_range("ChartBivector: chart index out of range");
}

void ChartBivector::set(int s, int t, Polynomial num, int pow) {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("ChartBivector: index out of range");
    if (s == t)
        throw std::invalid_argument("ChartBivector: indices must be distinct");
    if (num.nvars() != nvars_)
        throw std::invalid_argument("ChartBivector: coefficient has wrong variable count");
    if (pow < 0 || pow > 2)
        throw std::invalid_argument("ChartBivector: denominator power must be 0, 1, or 2");
    const std::pair<int, int> key{std::min(s, t), std::max(s, t)};
    if (s > t) num = -num;
    if (num.is_zero()) {
        entries_.erase(key);
    } else {
        entries_.insert_or_assign(key, Entry{std::move(num), pow});
    }
}

ChartBivector::Entry ChartBivector::get(int s, int t) const {
    if (s < 1 || s > nvars_ || t < 1 || t > nvars_)
        throw std::out_of_range("ChartBivector: index out of range");
    if (s == t) return {Polynomial(nvars_), 0};
    const auto it = entries_.find({std::min(s, t), std::max(s, t)});
    if (it == entries_.end()) return {Polynomial(nvars_), 0};
    Entry e = it->second;
    if (s > t) e.num = -e.num;
    return e;
}

void ChartBivector::normalize() {
    for (auto& [key, e] : entries_) {
        while (e.pow > 0 && divisible_by_var(e.num, chart_)) {
            e.num = divide_by_var(e.num, chart_);
            e.pow -= 1;
        }
    }
}

std::string ChartBivector::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, e] : entries_) {
        if (!first) out += " + ";
        first = false;
        // Chart coordinates print as z1..zn.
        std::string num = e.num.str();
        for (char& ch : num)
            if (ch == 'x') ch = 'z';
        out += "(" + num + ")";
        if (e.pow > 0) {
            out += "/z" + std::to_string(chart_);
            if (e.pow > 1) out += "^" + std::to_string(e.pow);
        }
        out += " ∂" + std::to_string(key.first) + "∧∂" + std::to_string(key.second);
    }
    return out;
}

bool operator==(const ChartBivector& a, const ChartBivector& b) {
    if (a.nvars() != b.nvars() || a.chart() != b.chart()) return false;
    if (a.entries().size() != b.entries().size()) return false;
    for (const auto& [key, e] : a.entries()) {
        const auto it = b.entries().find(key);
        if (it == b.entries().end()) return false;
        if (it->second.pow != e.pow || !(it->second.num == e.num)) return false;
    }
    return true;
}

ChartBivector chart_transform(const Bivector& theta, const Center& c, int j) {
    const int n = theta.nvars();
    if (n != c.nvars)
        throw std::invalid_argument("chart_transform: nvars mismatch");
    if (j <= c.k || j > n)
        throw std::out_of_range("chart_transform: chart index out of range");

    // Substitute x_i -> z_i (i <= k, i = j), x_l -> z_j * z_l (other l > k).
    const Polynomial zj = Polynomial::variable(n, j);
    std::vector<Polynomial> images;
    for (int i = 1; i <= n; ++i) {
        if (i <= c.k || i == j)
            images.push_back(Polynomial::variable(n, i));
        else
            images.push_back(zj * Polynomial::variable(n, i));
    }
    Bivector sub(n);
    for (const auto& [key, g] : theta.coeffs())
        sub.set(key.first, key.second, substitute(g, images));

    // Push the frame through the chart: ∂x_i = ∂z_i for i <= k,
    // ∂x_l = (1/z_j) ∂z_l for l in C, and
    // ∂x_j = ∂z_j - (1/z_j) Σ_{l in C} z_l ∂z_l.
    ChartBivector out(n, j);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            const bool u_center = u <= c.k;
            const bool v_center = v <= c.k;
            if (u_center && v_center) {
                out.set(u, v, sub.get(u, v), 0);
            } else if (u_center && v == j) {
                out.set(u, v, sub.get(u, j), 0);
            } else if (u_center) {
                const Polynomial zv = Polynomial::variable(n, v);
                out.set(u, v, sub.get(u, v) - zv * sub.get(u, j), 1);
            } else if (u == j || v == j) {
                const int m = (u == j) ? v : u;
                out.set(j, m, sub.get(j, m), 1);
            } else {
                const Polynomial zu = Polynomial::variable(n, u);
                const Polynomial zv = Polynomial::variable(n, v);
                out.set(u, v,
                        sub.get(u, v) - zv * sub.get(u, j) - zu * sub.get(j, v), 2);
            }
        }
    }
    return out;
}

bool holomorphy_oracle(const ChartBivector& cb) {
    ChartBivector reduced = cb;
    reduced.normalize();
    for (const auto& [key, e] : reduced.entries())
        if (e.pow > 0) return false;
    return true;
}

LiftReport lift_criterion(const Bivector& theta, const Center& c) {
    const int n = theta.nvars();
    if (n != c.nvars)
        throw std::invalid_argument("lift_criterion: nvars mismatch");

    LiftReport report;

    // Order 0: every coefficient touching a blown-up direction vanishes on Y.
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (t <= c.k) continue;
            const Polynomial w = restrict_to_subspace(theta.get(s, t), c.k + 1);
            if (!w.is_zero())
                report.violations.push_back({"order0", {s, t}, w.str()});
        }
    }

    // Order 1, only when the codimension exceeds 2. Writing B for the
    // blown-up index range k+1..n: the normal derivatives ∂_s g_lm with
    // s in B \ {l, m} must vanish on Y, and for each m in B the matched
    // derivatives ∂_l g_lm must restrict to one common polynomial over
    // l in B \ {m}.
    if (c.codim() >= 3) {
        for (int l = c.k + 1; l <= n; ++l) {
            for (int m = l + 1; m <= n; ++m) {
                for (int s = c.k + 1; s <= n; ++s) {
                    if (s == l || s == m) continue;
                    const Polynomial d =
                        restrict_to_subspace(diff(theta.get(l, m), s), c.k + 1);
                    if (!d.is_zero())
                        report.violations.push_back({"order1", {l, m, s}, d.str()});
                }
            }
        }
        for (int m = c.k + 1; m <= n; ++m) {
            bool have_first = false;
            int first_l = 0;
            Polynomial first_value(n);
            for (int l = c.k + 1; l <= n; ++l) {
                if (l == m) continue;
                const Polynomial value =
                    restrict_to_subspace(diff(theta.get(l, m), l), c.k + 1);
                if (!have_first) {
                    have_first = true;
                    first_l = l;
                    first_value = value;
                } else if (!(value == first_value)) {
                    report.violations.push_back(
                        {"order1", {first_l, m, l}, (first_value - value).str()});
                }
            }
        }
    }

    report.verdict = report.violations.empty();
    for (int j : c.charts())
        report.charts.push_back({j, holomorphy_oracle(chart_transform(theta, c, j))});
    return report;
}

std::vector<Bivector> lift_bivector(const Bivector& theta, const Center& c) {
    const LiftReport report = lift_criterion(theta, c);
    if (!report.verdict)
        throw std::domain_error("lift_bivector: bivector does not lift through this center");

    std::vector<Bivector> lifted;
    for (int j : c.charts()) {
        ChartBivector cb = chart_transform(theta, c, j);
        cb.normalize();
        Bivector b(theta.nvars());
        for (const auto& [key, e] : cb.entries()) {
            if (e.pow != 0)
                throw std::logic_error(
                    "lift_bivector: criterion passed but a chart kept a denominator");
            b.set(key.first, key.second, e.num);
        }
        lifted.push_back(std::move(b));
    }

    // Lifting must carry Poisson structures to Poisson structures.
    if (poisson::jacobiator(theta).is_zero()) {
        for (const Bivector& b : lifted)
            if (!poisson::jacobiator(b).is_zero())
                throw std::logic_error("lift_bivector: lift broke the Jacobi identity");
    }
    return lifted;
}

}  // namespace poisres::blowup
