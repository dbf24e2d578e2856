#pragma once

#include <vector>

#include "poisres/bivector.hpp"

namespace poisres::poisson {

// {f, g} = Σ_{s,t} g_{st} ∂s f ∂t g over the antisymmetric extension of the
// coefficient matrix.
Polynomial bracket(const Bivector& theta, const Polynomial& f, const Polynomial& g);

// Component (i,j,k) = {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}},
// computed through bracket(). Zero iff θ is Poisson: for polynomial brackets
// the coordinate-triple identity extends to all functions by the derivation
// property, so checking coordinate functions suffices.
TriVector jacobiator(const Bivector& theta);

// Component (i,j,k) = 2·Σ_l (g_{lk} ∂_l g_{ij} + g_{li} ∂_l g_{jk} +
// g_{lj} ∂_l g_{ki}). Deliberately a separate expansion from jacobiator();
// the two agree up to the fixed constant pinned in the tests.
TriVector schouten_square(const Bivector& theta);

// B(α)_t = Σ_s α_s g_{st} for a one-form α = Σ α_s dx_s; for α = df this is
// the Hamiltonian field of f.
std::vector<Polynomial> anchor(const Bivector& theta,
                               const std::vector<Polynomial>& alpha);

// Determinant of the full antisymmetric coefficient matrix.
Polynomial coefficient_determinant(const Bivector& theta);

// True iff nvars is even and det(g_{st}) is not the zero polynomial.
bool is_nondegenerate(const Bivector& theta);

// Coefficient matrix of the result is -(g_{st})^{-1} over rational functions,
// the sign fixed so ∂1∧∂2 maps to dx1∧dx2. Throws std::domain_error on
// degenerate input.
TwoForm invert_to_form(const Bivector& theta);

// Same matrix operation on a form's coefficients; applying it to
// invert_to_form(θ) recovers θ's coefficient matrix.
TwoForm invert_form(const TwoForm& omega);

// Component (i,j,k) = ∂_i ω_{jk} - ∂_j ω_{ik} + ∂_k ω_{ij}.
ThreeForm exterior_derivative(const TwoForm& omega);

}  // namespace poisres::poisson
