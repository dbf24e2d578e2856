#pragma once

#include <cstdint>
#include <random>

#include "poisres/bivector.hpp"
#include "poisres/polynomial.hpp"
#include "poisres/resgraph.hpp"

namespace poisres::randomgen {

// Deterministic source for the property tests and the fuzz subcommand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    bool chance(double p) {
        return std::bernoulli_distribution(p)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

exactalg::Rational random_rational(Rng& rng, int max_abs_num, int max_den);

// Sparse polynomial with at most max_terms monomials of total degree
// <= max_degree and small integer coefficients (possibly zero overall).
exactalg::Polynomial random_polynomial(Rng& rng, int nvars, int max_degree,
                                       int max_terms);

// Sparse bivector: each upper-triangular slot is filled with probability
// density, using random_polynomial coefficients of degree <= max_degree.
poisson::Bivector random_bivector(Rng& rng, int nvars, int max_degree,
                                  double density = 0.6);

// Random bivector retried until is_nondegenerate holds (nvars must be even).
poisson::Bivector random_nondegenerate_bivector(Rng& rng, int nvars,
                                                int max_degree);

// Connected graph on 1..max_vertices vertices, built as a random tree plus a
// few chords, with self-intersections picked strictly dominant over the
// incident edge weights so the intersection matrix is negative definite by
// construction. minimal_only forbids rational (−1) vertices.
resgraph::DualGraph random_dual_graph(Rng& rng, int max_vertices,
                                      bool minimal_only = false);

// Non-negative rational meets vector for a graph of the given size.
std::vector<exactalg::Rational> random_meets(Rng& rng, int size);

}  // namespace poisres::randomgen
