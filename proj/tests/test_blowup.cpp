#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <poisres/blowup.hpp>
#include <poisres/poisson.hpp>
#include <poisres/poly_parser.hpp>
#include <poisres/randomgen.hpp>

#include <algorithm>
#include <vector>

using namespace poisres::blowup;
using poisres::exactalg::Monomial;
using poisres::exactalg::parse_poly;
using poisres::exactalg::Rational;
using poisres::poisson::jacobiator;
using poisres::randomgen::random_bivector;
using poisres::randomgen::random_polynomial;
using poisres::randomgen::Rng;

namespace {

Polynomial P(const char* text, int nvars) { return parse_poly(text, nvars); }

// θ = x3 ∂1∧∂2 + x1 ∂2∧∂3 + x2 ∂3∧∂1.
Bivector rotational() {
    Bivector theta(3);
    theta.set(1, 2, P("x3", 3));
    theta.set(2, 3, P("x1", 3));
    theta.set(3, 1, P("x2", 3));
    return theta;
}

bool all_charts_holomorphic(const Bivector& theta, const Center& c) {
    for (int j : c.charts())
        if (!holomorphy_oracle(chart_transform(theta, c, j))) return false;
    return true;
}

bool has_violation(const LiftReport& r, const std::string& kind,
                   const std::vector<int>& indices) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) {
                           return v.kind == kind && v.indices == indices;
                       });
}

// Renames coordinate i to perm[i-1] in both the indices and the variables.
Bivector relabel(const Bivector& theta, const std::vector<int>& perm) {
    const int n = theta.nvars();
    std::vector<Polynomial> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(Polynomial::variable(n, perm[i - 1]));
    Bivector out(n);
    for (const auto& [key, g] : theta.coeffs())
        out.set(perm[key.first - 1], perm[key.second - 1], substitute(g, images));
    return out;
}

ChartBivector relabel(const ChartBivector& cb, const std::vector<int>& perm) {
    const int n = cb.nvars();
    std::vector<Polynomial> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(Polynomial::variable(n, perm[i - 1]));
    ChartBivector out(n, perm[cb.chart() - 1]);
    for (const auto& [key, e] : cb.entries())
        out.set(perm[key.first - 1], perm[key.second - 1],
                substitute(e.num, images), e.pow);
    return out;
}

}  // namespace

TEST_CASE("center validates codimension and lists its charts") {
    const Center point3(3, 0);
    CHECK(point3.codim() == 3);
    CHECK(point3.charts() == std::vector<int>{1, 2, 3});

    const Center curve(3, 1);
    CHECK(curve.codim() == 2);
    CHECK(curve.charts() == std::vector<int>{2, 3});

    CHECK_THROWS_AS(Center(3, 2), std::invalid_argument);   // codim 1
    CHECK_THROWS_AS(Center(3, 3), std::invalid_argument);   // codim 0
    CHECK_THROWS_AS(Center(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(Center(1, 0), std::invalid_argument);
}

TEST_CASE("chart bivector stores antisymmetric entries with bounded powers") {
    ChartBivector cb(3, 1);
    cb.set(2, 1, P("x3", 3), 1);  // lower-triangle write flips the sign
    CHECK(cb.get(1, 2).num == P("-x3", 3));
    CHECK(cb.get(1, 2).pow == 1);
    CHECK(cb.get(2, 1).num == P("x3", 3));
    CHECK(cb.get(1, 3).num.is_zero());
    CHECK(cb.get(1, 3).pow == 0);

    cb.set(1, 2, P("0", 3), 2);  // zero coefficient erases the slot
    CHECK(cb.is_zero());

    CHECK_THROWS_AS(cb.set(1, 1, P("1", 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(cb.set(1, 2, P("1", 3), 3), std::invalid_argument);
    CHECK_THROWS_AS(cb.set(0, 2, P("1", 3), 0), std::out_of_range);
    CHECK_THROWS_AS(ChartBivector(3, 4), std::out_of_range);
}

TEST_CASE("normalize cancels exactly the shared chart-variable factors") {
    ChartBivector cb(3, 1);
    cb.set(1, 2, P("x1^2*x3^2", 3), 1);   // fully cancels
    cb.set(2, 3, P("x1*x3 + x3", 3), 2);  // one factor sticks
    cb.normalize();
    CHECK(cb.get(1, 2).num == P("x1*x3^2", 3));
    CHECK(cb.get(1, 2).pow == 0);
    CHECK(cb.get(2, 3).num == P("x1*x3 + x3", 3));
    CHECK(cb.get(2, 3).pow == 2);
}

TEST_CASE("surface chart transform divides the substituted coefficient once") {
    // θ = g(x1,x2) ∂1∧∂2 blown up at the origin: chart 1 carries g̃(z1, z1z2)/z1.
    Bivector theta(2);
    const Polynomial g = P("x1^2 + x2 - 3", 2);
    theta.set(1, 2, g);
    const Center origin(2, 0);

    const ChartBivector c1 = chart_transform(theta, origin, 1);
    CHECK(c1.get(1, 2).num == P("x1^2 + x1*x2 - 3", 2));
    CHECK(c1.get(1, 2).pow == 1);

    const ChartBivector c2 = chart_transform(theta, origin, 2);
    CHECK(c2.get(1, 2).num == P("x1^2*x2^2 + x2 - 3", 2));
    CHECK(c2.get(1, 2).pow == 1);

    CHECK_THROWS_AS(chart_transform(theta, origin, 3), std::out_of_range);
    CHECK_THROWS_AS(chart_transform(theta, Center(3, 1), 2),
                    std::invalid_argument);
}

TEST_CASE("zero bivector transforms to zero and lifts trivially") {
    const Bivector theta(3);
    const Center origin(3, 0);
    for (int j : origin.charts()) {
        const ChartBivector cb = chart_transform(theta, origin, j);
        CHECK(cb.is_zero());
        CHECK(holomorphy_oracle(cb));
    }
    const LiftReport report = lift_criterion(theta, origin);
    CHECK(report.verdict);
    CHECK(report.violations.empty());
    for (const Bivector& b : lift_bivector(theta, origin)) CHECK(b.is_zero());
}

TEST_CASE("quadratic vanishing clears every point-blowup chart") {
    // θ = x3² ∂1∧∂2 at the origin of a threefold.
    Bivector theta(3);
    theta.set(1, 2, P("x3^2", 3));
    const Center origin(3, 0);

    ChartBivector c1 = chart_transform(theta, origin, 1);
    CHECK(c1.get(1, 2).num == P("x1^2*x3^2", 3));
    CHECK(c1.get(1, 2).pow == 1);
    CHECK(c1.get(2, 3).num == P("x1^2*x3^3", 3));
    CHECK(c1.get(2, 3).pow == 2);
    CHECK(c1.get(1, 3).num.is_zero());
    c1.normalize();
    CHECK(c1.get(1, 2).num == P("x1*x3^2", 3));
    CHECK(c1.get(1, 2).pow == 0);
    CHECK(c1.get(2, 3).num == P("x3^3", 3));
    CHECK(c1.get(2, 3).pow == 0);

    for (int j : origin.charts())
        CHECK(holomorphy_oracle(chart_transform(theta, origin, j)));

    const LiftReport report = lift_criterion(theta, origin);
    CHECK(report.verdict);
    CHECK(report.violations.empty());
    REQUIRE(report.charts.size() == 3);
    for (const ChartFlag& f : report.charts) CHECK(f.holomorphic);

    const std::vector<Bivector> lifted = lift_bivector(theta, origin);
    REQUIRE(lifted.size() == 3);
    for (const Bivector& b : lifted) CHECK(jacobiator(b).is_zero());
}

TEST_CASE("bare linear vanishing fails the normal-derivative conditions") {
    // θ = x3 ∂1∧∂2 at the origin: order 0 holds, ∂₃g₁₂ = 1 does not vanish.
    Bivector theta(3);
    theta.set(1, 2, P("x3", 3));
    const Center origin(3, 0);

    const LiftReport report = lift_criterion(theta, origin);
    CHECK_FALSE(report.verdict);
    CHECK(has_violation(report, "order1", {1, 2, 3}));
    for (const Violation& v : report.violations) CHECK(v.kind != "order0");

    // Every chart keeps a denominator: chart 3 on the ∂1∧∂2 slot and the
    // other two on the off-chart block (e.g. chart 1 keeps z3²/z1 ∂2∧∂3).
    REQUIRE(report.charts.size() == 3);
    for (const ChartFlag& f : report.charts) CHECK_FALSE(f.holomorphic);
    const ChartBivector c1 = chart_transform(theta, origin, 1);
    CHECK(c1.get(2, 3).num == P("x1*x3^2", 3));
    CHECK(c1.get(2, 3).pow == 2);

    CHECK_THROWS_AS(lift_bivector(theta, origin), std::domain_error);
}

TEST_CASE("surface point blowup lifts exactly when the coefficient vanishes") {
    const Center origin(2, 0);
    Rng rng(2026);
    int liftable = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial g = random_polynomial(rng, 2, 3, 4);
        if (trial % 2 == 0)  // force the liftable branch half the time
            g = g - Polynomial::constant(2, g.coeff(Monomial{0, 0}));
        Bivector theta(2);
        theta.set(1, 2, g);
        const bool vanishes = g.coeff(Monomial{0, 0}).is_zero();
        const LiftReport report = lift_criterion(theta, origin);
        CHECK(report.verdict == vanishes);
        CHECK(report.verdict == all_charts_holomorphic(theta, origin));
        if (report.verdict) ++liftable;
    }
    CHECK(liftable > 5);
}

TEST_CASE("lifting x1 del1^del2 through the origin of the plane") {
    Bivector theta(2);
    theta.set(1, 2, P("x1", 2));
    const std::vector<Bivector> lifted = lift_bivector(theta, Center(2, 0));
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].get(1, 2) == P("1", 2));   // chart 1: ∂z1∧∂z2
    CHECK(lifted[1].get(1, 2) == P("x1", 2));  // chart 2: z1 ∂z1∧∂z2
}

TEST_CASE("rotational structure refuses to lift at the origin") {
    const Bivector theta = rotational();
    const Center origin(3, 0);
    const LiftReport report = lift_criterion(theta, origin);
    CHECK_FALSE(report.verdict);
    for (const Violation& v : report.violations) CHECK(v.kind == "order1");
    CHECK_FALSE(all_charts_holomorphic(theta, origin));
    CHECK_THROWS_AS(lift_bivector(theta, origin), std::domain_error);
}

TEST_CASE("matched normal derivatives lift even when they do not vanish") {
    // θ = x1 ∂1∧∂2 − x3 ∂2∧∂3 is Poisson; ∂₁g₁₂ = ∂₃g₃₂ = 1 on the center,
    // so demanding that every first derivative vanish would wrongly reject
    // it: all three charts of the point blowup are holomorphic.
    Bivector theta(3);
    theta.set(1, 2, P("x1", 3));
    theta.set(2, 3, P("-x3", 3));
    REQUIRE(jacobiator(theta).is_zero());

    const Center origin(3, 0);
    CHECK(all_charts_holomorphic(theta, origin));

    const LiftReport report = lift_criterion(theta, origin);
    CHECK(report.verdict);
    CHECK(report.violations.empty());

    const std::vector<Bivector> lifted = lift_bivector(theta, origin);
    REQUIRE(lifted.size() == 3);
    Bivector chart1(3);
    chart1.set(1, 2, P("1", 3));
    Bivector chart2(3);
    chart2.set(1, 2, P("x1", 3));
    chart2.set(2, 3, P("-x3", 3));
    Bivector chart3(3);
    chart3.set(2, 3, P("-1", 3));
    CHECK(lifted[0] == chart1);
    CHECK(lifted[1] == chart2);
    CHECK(lifted[2] == chart3);
    for (const Bivector& b : lifted) CHECK(jacobiator(b).is_zero());
}

TEST_CASE("mismatched normal derivatives are reported as a pair") {
    // θ = x1 ∂1∧∂2 + x3 ∂2∧∂3: ∂₁g₁₂ = 1 but ∂₃g₃₂ = −1.
    Bivector theta(3);
    theta.set(1, 2, P("x1", 3));
    theta.set(2, 3, P("x3", 3));
    const Center origin(3, 0);

    const LiftReport report = lift_criterion(theta, origin);
    CHECK_FALSE(report.verdict);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == "order1");
    CHECK(report.violations[0].indices == std::vector<int>{1, 2, 3});
    CHECK(report.violations[0].witness == "2");
    CHECK_FALSE(all_charts_holomorphic(theta, origin));
}

TEST_CASE("curve center in a threefold transforms chart by chart") {
    // θ = x2 ∂1∧∂2 + x1x3 ∂2∧∂3 blown up along the x1-axis. (Not Poisson —
    // liftability is a property of the coefficients, not of Jacobi.)
    Bivector theta(3);
    theta.set(1, 2, P("x2", 3));
    theta.set(2, 3, P("x1*x3", 3));
    const Center axis(3, 1);

    ChartBivector c2 = chart_transform(theta, axis, 2);
    CHECK(c2.get(1, 2).num == P("x2", 3));
    CHECK(c2.get(1, 2).pow == 0);
    CHECK(c2.get(1, 3).num == P("-x2*x3", 3));
    CHECK(c2.get(1, 3).pow == 1);
    CHECK(c2.get(2, 3).num == P("x1*x2*x3", 3));
    CHECK(c2.get(2, 3).pow == 1);
    c2.normalize();
    CHECK(c2.get(1, 3).num == P("-x3", 3));
    CHECK(c2.get(2, 3).num == P("x1*x3", 3));

    ChartBivector c3 = chart_transform(theta, axis, 3);
    c3.normalize();
    CHECK(c3.get(1, 2).num == P("x2", 3));
    CHECK(c3.get(1, 2).pow == 0);
    CHECK(c3.get(1, 3).num.is_zero());
    CHECK(c3.get(2, 3).num == P("x1", 3));
    CHECK(c3.get(2, 3).pow == 0);

    const LiftReport report = lift_criterion(theta, axis);
    CHECK(report.verdict);
    const std::vector<Bivector> lifted = lift_bivector(theta, axis);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].get(1, 3) == P("-x3", 3));
    CHECK(lifted[0].get(2, 3) == P("x1*x3", 3));
    CHECK(lifted[1].get(1, 2) == P("x2", 3));
    CHECK(lifted[1].get(2, 3) == P("x1", 3));
}

TEST_CASE("codimension-2 centers decide by vanishing alone") {
    Rng rng(41);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = (trial % 2 == 0) ? 3 : 4;
        const Center c(n, n - 2);
        Bivector theta = random_bivector(rng, n, 2, 0.7);
        if (trial % 3 == 0) {
            // Force order 0 by pushing coefficients into the blown-up ideal.
            Bivector forced(n);
            for (const auto& [key, g] : theta.coeffs())
                forced.set(key.first, key.second,
                           g * Polynomial::variable(n, n - (trial % 2)));
            theta = forced;
        }
        bool order0 = true;
        for (int s = 1; s <= n && order0; ++s)
            for (int t = s + 1; t <= n && order0; ++t)
                if (t > c.k &&
                    !restrict_to_subspace(theta.get(s, t), c.k + 1).is_zero())
                    order0 = false;
        const LiftReport report = lift_criterion(theta, c);
        CHECK(report.verdict == order0);
        CHECK(report.verdict == all_charts_holomorphic(theta, c));
        for (const Violation& v : report.violations) CHECK(v.kind == "order0");
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("criterion and chart holomorphy agree on random bivectors") {
    Rng rng(977);
    int cases = 0;
    int accepted = 0;
    int rejected = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= n - 2; ++k) {
            const Center c(n, k);
            for (int trial = 0; trial < 40; ++trial) {
                Bivector theta = random_bivector(rng, n, 3, 0.5);
                const int mode = trial % 3;
                if (mode > 0) {
                    // Multiply coefficients into the center's ideal (once or
                    // twice) so liftable inputs appear often.
                    Bivector pushed(n);
                    for (const auto& [key, g] : theta.coeffs()) {
                        Polynomial h = g;
                        for (int rep = 0; rep < mode; ++rep)
                            h = h * Polynomial::variable(
                                        n, rng.uniform(c.k + 1, n));
                        pushed.set(key.first, key.second, h);
                    }
                    theta = pushed;
                }
                const LiftReport report = lift_criterion(theta, c);
                const bool oracle = all_charts_holomorphic(theta, c);
                CHECK(report.verdict == oracle);
                CHECK(report.verdict ==
                      std::all_of(report.charts.begin(), report.charts.end(),
                                  [](const ChartFlag& f) { return f.holomorphic; }));
                (report.verdict ? accepted : rejected) += 1;
                ++cases;
            }
        }
    }
    CHECK(cases == 240);
    CHECK(accepted >= 20);
    CHECK(rejected >= 20);
}

TEST_CASE("lifting preserves the Jacobi identity") {
    // r² is a Casimir of the rotational structure, so r²·θ_rot is Poisson,
    // and its coefficients vanish to second order at the origin.
    Bivector scaled(3);
    {
        const Polynomial r2 = P("x1^2 + x2^2 + x3^2", 3);
        const Bivector rot = rotational();
        for (const auto& [key, g] : rot.coeffs())
            scaled.set(key.first, key.second, r2 * g);
    }
    REQUIRE(jacobiator(scaled).is_zero());
    const std::vector<Bivector> lifted = lift_bivector(scaled, Center(3, 0));
    REQUIRE(lifted.size() == 3);
    for (const Bivector& b : lifted) CHECK(jacobiator(b).is_zero());

    // A fourfold example through centers of both codimensions.
    Bivector quad(4);
    quad.set(1, 2, P("x3^2", 4));
    REQUIRE(jacobiator(quad).is_zero());
    for (int k : {0, 1, 2}) {
        const std::vector<Bivector> charts = lift_bivector(quad, Center(4, k));
        CHECK(charts.size() == static_cast<size_t>(4 - k));
        for (const Bivector& b : charts) CHECK(jacobiator(b).is_zero());
    }
}

TEST_CASE("relabeling off-chart coordinates commutes with the transform") {
    Rng rng(314);
    int checked = 0;
    for (int trial = 0; trial < 24; ++trial) {
        const int n = (trial % 2 == 0) ? 3 : 4;
        const int k = (trial % 2 == 0) ? 0 : trial % 4 == 1 ? 0 : 1;
        const Center c(n, k);
        if (c.codim() < 3) continue;  // need two off-chart coordinates
        for (int j : c.charts()) {
            // Swap two coordinates from C = {k+1..n} \ {j}.
            std::vector<int> pool;
            for (int i = k + 1; i <= n; ++i)
                if (i != j) pool.push_back(i);
            const int a = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
            int b = a;
            while (b == a)
                b = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
            std::vector<int> perm;
            for (int i = 1; i <= n; ++i) perm.push_back(i);
            std::swap(perm[a - 1], perm[b - 1]);

            const Bivector theta = random_bivector(rng, n, 3, 0.6);
            const ChartBivector direct = chart_transform(relabel(theta, perm), c, j);
            const ChartBivector relabeled = relabel(chart_transform(theta, c, j), perm);
            CHECK(direct == relabeled);
            ++checked;
        }
    }
    CHECK(checked >= 30);
}
