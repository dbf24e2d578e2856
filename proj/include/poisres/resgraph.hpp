#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poisres/qmatrix.hpp"

namespace poisres::resgraph {

using exactalg::QMatrix;
using exactalg::Rational;

struct Vertex {
    std::string name;
    int self_int;  // E_i · E_i, negative
    int genus;     // arithmetic genus of E_i, non-negative
};

struct Edge {
    std::string a;
    std::string b;
    int w;  // E_a · E_b, positive
};

// Weighted dual graph of an exceptional curve configuration. Construction
// validates the combinatorics and rejects any graph whose intersection
// matrix is not negative definite (Mumford contractibility).
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::map<std::pair<int, int>, int>& edges() const { return edges_; }

    int index_of(const std::string& name) const;  // throws on unknown name
    // E_i · E_j for i != j (0-based indices); 0 when no edge.
    int weight(int i, int j) const;

    bool is_connected() const;

private:
    std::vector<Vertex> vertices_;
    std::map<std::pair<int, int>, int> edges_;  // key i < j
};

// Strict transform D̄ of an effective divisor containing no exceptional
// component; meets[i] = D̄ · E_i >= 0.
struct StrictTransform {
    std::string name;
    std::vector<Rational> meets;
};

// ℚ-divisor supported on the exceptional locus, optionally plus one strict
// transform (tracked by name; the strict part is effective by construction).
struct QDivisor {
    std::optional<std::string> strict_name;
    std::vector<Rational> coeffs;
};

QDivisor operator+(const QDivisor& a, const QDivisor& b);
bool operator==(const QDivisor& a, const QDivisor& b);

QMatrix intersection_matrix(const DualGraph& g);  // throws on the empty graph

// Mumford's numerical pullback π*D = D̄ + Σ a_i E_i: the coefficients solve
// M·a = −meets, making π*D orthogonal to every E_i.
QDivisor pullback(const DualGraph& g, const StrictTransform& d);

// Z = π*K_S − K_{S̃} = Σ b_i E_i with M·b_i determined by Z·E_i = −K·E_i and
// adjunction K·E_i = 2·genus_i − 2 − self_int_i.
QDivisor canonical_cycle(const DualGraph& g);

bool is_effective(const QDivisor& d);

struct DecideMember {
    std::string name;
    std::vector<Rational> pullback_coeffs;  // a with π*F = F̄ + Σ a_i E_i
    std::vector<Rational> total_coeffs;     // exceptional part of π*F + Z
    bool effective;
};

// Lemma-style decision, relative to the supplied family of anticanonical
// members: every π*F + Z must be effective.
struct DecideReport {
    std::vector<DecideMember> members;
    bool overall;
};

DecideReport decide_poisson(const DualGraph& g,
                            const std::vector<StrictTransform>& family);

enum class AdeKind { A, D, E };

// Dynkin-diagram graph: all vertices rational with self-intersection −2, so
// the intersection matrix is the negated Cartan matrix.
DualGraph ade_graph(AdeKind kind, int rank);

// Single genus-1 vertex with self-intersection −d: the cone over an elliptic
// curve of degree d.
DualGraph elliptic_cone_graph(int d);

// True iff every entry of M⁻¹ is strictly negative. Requires a connected
// (and nonempty) graph; the claim holds per connected component.
bool inverse_negativity(const DualGraph& g);

// Blows up a point of the exceptional locus: on one curve, on a node of two
// (at names 1 or 2), or a smooth point off the configuration (at empty).
DualGraph blowup_graph(const DualGraph& g, const std::vector<std::string>& at);

// No genus-0 vertex with self-intersection −1 (nothing to contract).
bool is_minimal(const DualGraph& g);

}  // namespace poisres::resgraph
