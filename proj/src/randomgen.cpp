#include "poisres/randomgen.hpp"

#include <stdexcept>

#include "poisres/poisson.hpp"

namespace poisres::randomgen {

using exactalg::Monomial;
using exactalg::Polynomial;
using exactalg::Rational;
using poisson::Bivector;

Rational random_rational(Rng& rng, int max_abs_num, int max_den) {
    const int num = rng.uniform(-max_abs_num, max_abs_num);
    const int den = rng.uniform(1, max_den);
    return Rational(num, den);
}

Polynomial random_polynomial(Rng& rng, int nvars, int max_degree, int max_terms) {
    Polynomial p(nvars);
    const int terms = rng.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        int budget = rng.uniform(0, max_degree);
        while (budget > 0) {
            m[rng.uniform(0, nvars - 1)] += 1;
            --budget;
        }
        int c = rng.uniform(-4, 4);
        if (c == 0) continue;
        p.add_term(m, Rational(c));
    }
    return p;
}

Bivector random_bivector(Rng& rng, int nvars, int max_degree, double density) {
    Bivector theta(nvars);
    for (int s = 1; s <= nvars; ++s)
        for (int t = s + 1; t <= nvars; ++t) {
            if (!rng.chance(density)) continue;
            theta.set(s, t, random_polynomial(rng, nvars, max_degree, 3));
        }
    return theta;
}

Bivector random_nondegenerate_bivector(Rng& rng, int nvars, int max_degree) {
    if (nvars % 2 != 0)
        throw std::invalid_argument(
            "random_nondegenerate_bivector: nvars must be even");
    while (true) {
        Bivector theta = random_bivector(rng, nvars, max_degree, 0.8);
        if (poisson::is_nondegenerate(theta)) return theta;
    }
}

resgraph::DualGraph random_dual_graph(Rng& rng, int max_vertices,
                                      bool minimal_only) {
    const int n = rng.uniform(1, max_vertices);
    const auto name = [](int i) { return "E" + std::to_string(i + 1); };

    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (int i = 1; i < n; ++i) {
        const int parent = rng.uniform(0, i - 1);
        w[i][parent] = w[parent][i] = rng.uniform(1, 2);
    }
    for (int extra = 0; extra < n / 3; ++extra) {
        if (!rng.chance(0.4)) continue;
        const int i = rng.uniform(0, n - 1);
        const int j = rng.uniform(0, n - 1);
        if (i != j && w[i][j] == 0) w[i][j] = w[j][i] = 1;
    }

    std::vector<resgraph::Vertex> vertices;
    std::vector<resgraph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        int incident = 0;
        for (int j = 0; j < n; ++j) incident += w[i][j];
        const int genus = rng.chance(0.2) ? 1 : 0;
        // Strict diagonal dominance keeps the matrix negative definite.
        int self = -(incident + rng.uniform(1, 3));
        if (minimal_only && genus == 0 && self == -1) self = -2;
        vertices.push_back({name(i), self, genus});
        for (int j = i + 1; j < n; ++j)
            if (w[i][j] > 0) edges.push_back({name(i), name(j), w[i][j]});
    }
    return resgraph::DualGraph(std::move(vertices), std::move(edges));
}

std::vector<exactalg::Rational> random_meets(Rng& rng, int size) {
    std::vector<Rational> meets;
    for (int i = 0; i < size; ++i)
        meets.push_back(Rational(rng.uniform(0, 4), rng.uniform(1, 3)));
    return meets;
}

}  // namespace poisres::randomgen
