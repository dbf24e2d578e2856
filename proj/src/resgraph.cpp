#include "poisres/resgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace poisres::resgraph {

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
    std::set<std::string> seen;
    for (const Vertex& v : vertices_) {
        if (v.name.empty())
            throw std::invalid_argument("DualGraph: vertex name must be nonempty");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("DualGraph: duplicate vertex name " + v.name);
        if (v.self_int >= 0)
            throw std::invalid_argument("DualGraph: self-intersection must be negative");
        if (v.genus < 0)
            throw std::invalid_argument("DualGraph: genus must be non-negative");
    }
    for (const Edge& e : edges) {
        const int i = index_of(e.a);
        const int j = index_of(e.b);
        if (i == j)
            throw std::invalid_argument("DualGraph: edge endpoints must differ");
        if (e.w <= 0)
            throw std::invalid_argument("DualGraph: edge weight must be positive");
        const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
        if (!edges_.emplace(key, e.w).second)
            throw std::invalid_argument("DualGraph: duplicate edge " + e.a + "-" + e.b);
    }
    if (!vertices_.empty() && !exactalg::is_negative_definite(intersection_matrix(*this)))
        throw std::invalid_argument(
            "DualGraph: intersection matrix is not negative definite");
}

int DualGraph::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].name == name) return i;
    throw std::invalid_argument("DualGraph: unknown vertex " + name);
}

int DualGraph::weight(int i, int j) const {
    if (i < 0 || i >= size() || j < 0 || j >= size() || i == j)
        throw std::out_of_range("DualGraph: bad vertex pair");
    const auto it = edges_.find({std::min(i, j), std::max(i, j)});
    return it == edges_.end() ? 0 : it->second;
}

bool DualGraph::is_connected() const {
    if (size() <= 1) return true;
    std::vector<bool> visited(size(), false);
    std::vector<int> stack{0};
    visited[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < size(); ++j) {
            if (j != i && !visited[j] && weight(i, j) > 0) {
                visited[j] = true;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == size();
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("QDivisor: size mismatch");
    QDivisor out;
    out.strict_name = a.strict_name ? a.strict_name : b.strict_name;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
    return out;
}

bool operator==(const QDivisor& a, const QDivisor& b) {
    return a.strict_name == b.strict_name && a.coeffs == b.coeffs;
}

QMatrix intersection_matrix(const DualGraph& g) {
    if (g.size() == 0)
        throw std::invalid_argument("intersection_matrix: empty graph");
    QMatrix m(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i) {
        m.at(i, i) = Rational(g.vertices()[i].self_int);
        for (int j = i + 1; j < g.size(); ++j)
            m.at(i, j) = m.at(j, i) = Rational(g.weight(i, j));
    }
    return m;
}

QDivisor pullback(const DualGraph& g, const StrictTransform& d) {
    if (static_cast<int>(d.meets.size()) != g.size())
        throw std::invalid_argument("pullback: meets length does not match graph");
    for (const Rational& m : d.meets)
        if (m.sign() < 0)
            throw std::invalid_argument("pullback: meets entries must be >= 0");
    QDivisor out;
    out.strict_name = d.name;
    if (g.size() == 0) return out;

    const QMatrix m = intersection_matrix(g);
    std::vector<Rational> rhs;
    for (const Rational& x : d.meets) rhs.push_back(-x);
    out.coeffs = exactalg::solve_linear(m, rhs);

    // (D̄ + Σ a_i E_i)·E_j = meets_j + (M·a)_j must vanish exactly.
    const std::vector<Rational> back = m * out.coeffs;
    for (int j = 0; j < g.size(); ++j)
        if (!(back[j] + d.meets[j]).is_zero())
            throw std::logic_error("pullback: orthogonality re-substitution failed");
    return out;
}

QDivisor canonical_cycle(const DualGraph& g) {
    QDivisor out;
    if (g.size() == 0) return out;
    std::vector<Rational> rhs;
    for (const Vertex& v : g.vertices())
        rhs.push_back(Rational(2 - 2 * v.genus + v.self_int));  // −K·E_i
    out.coeffs = exactalg::solve_linear(intersection_matrix(g), rhs);
    return out;
}

bool is_effective(const QDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(),
                       [](const Rational& c) { return c.sign() >= 0; });
}

DecideReport decide_poisson(const DualGraph& g,
                            const std::vector<StrictTransform>& family) {
    if (family.empty())
        throw std::invalid_argument("decide_poisson: family must be nonempty");
    const QDivisor z = canonical_cycle(g);
    DecideReport report;
    report.overall = true;
    for (const StrictTransform& f : family) {
        DecideMember member;
        member.name = f.name;
        const QDivisor pf = pullback(g, f);
        member.pullback_coeffs = pf.coeffs;
        const QDivisor total = pf + z;
        member.total_coeffs = total.coeffs;
        member.effective = is_effective(total);
        report.overall = report.overall && member.effective;
        report.members.push_back(std::move(member));
    }
    return report;
}

DualGraph ade_graph(AdeKind kind, int rank) {
    const auto chain_name = [](int i) { return "E" + std::to_string(i); };
    std::vector<Vertex> vertices;
    for (int i = 1; i <= rank; ++i) vertices.push_back({chain_name(i), -2, 0});
    std::vector<Edge> edges;
    switch (kind) {
        case AdeKind::A:
            if (rank < 1) throw std::invalid_argument("ade_graph: A rank must be >= 1");
            for (int i = 1; i < rank; ++i)
                edges.push_back({chain_name(i), chain_name(i + 1), 1});
            break;
        case AdeKind::D:
            // Chain E1..E_{rank-1}, with E_rank branching off E2.
            if (rank < 4) throw std::invalid_argument("ade_graph: D rank must be >= 4");
            for (int i = 1; i < rank - 1; ++i)
                edges.push_back({chain_name(i), chain_name(i + 1), 1});
            edges.push_back({chain_name(2), chain_name(rank), 1});
            break;
        case AdeKind::E:
            // Chain E1..E_{rank-1}, with E_rank branching off E3.
            if (rank < 6 || rank > 8)
                throw std::invalid_argument("ade_graph: E rank must be 6, 7, or 8");
            for (int i = 1; i < rank - 1; ++i)
                edges.push_back({chain_name(i), chain_name(i + 1), 1});
            edges.push_back({chain_name(3), chain_name(rank), 1});
            break;
    }
    return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph elliptic_cone_graph(int d) {
    if (d < 1)
        throw std::invalid_argument("elliptic_cone_graph: degree must be >= 1");
    return DualGraph({{"E", -d, 1}}, {});
}

bool inverse_negativity(const DualGraph& g) {
    if (g.size() == 0) return true;
    if (!g.is_connected())
        throw std::invalid_argument("inverse_negativity: graph must be connected");
    const QMatrix inv = exactalg::inverse(intersection_matrix(g));
    for (int i = 0; i < inv.rows(); ++i)
        for (int j = 0; j < inv.cols(); ++j)
            if (inv.at(i, j).sign() >= 0) return false;
    return true;
}

DualGraph blowup_graph(const DualGraph& g, const std::vector<std::string>& at) {
    if (at.size() > 2)
        throw std::invalid_argument("blowup_graph: a point lies on at most 2 curves");
    std::vector<int> touched;
    for (const std::string& name : at) touched.push_back(g.index_of(name));
    if (at.size() == 2 && touched[0] == touched[1])
        throw std::invalid_argument("blowup_graph: incidence vertices must be distinct");

    // Pick a fresh name for the new (−1) curve.
    std::string new_name = "E0";
    const auto taken = [&](const std::string& n) {
        return std::any_of(g.vertices().begin(), g.vertices().end(),
                           [&](const Vertex& v) { return v.name == n; });
    };
    for (int suffix = 1; taken(new_name); ++suffix)
        new_name = "E0_" + std::to_string(suffix);

    std::vector<Vertex> vertices = g.vertices();
    for (int i : touched) vertices[i].self_int -= 1;
    vertices.push_back({new_name, -1, 0});

    std::vector<Edge> edges;
    for (const auto& [key, w] : g.edges()) {
        int weight = w;
        if (at.size() == 2 && key.first == std::min(touched[0], touched[1]) &&
            key.second == std::max(touched[0], touched[1]))
            weight -= 1;
        if (weight > 0)
            edges.push_back({g.vertices()[key.first].name,
                             g.vertices()[key.second].name, weight});
    }
    if (at.size() == 2 && g.weight(touched[0], touched[1]) == 0)
        throw std::invalid_argument(
            "blowup_graph: the named curves do not meet, no node to separate");
    for (int i : touched) edges.push_back({g.vertices()[i].name, new_name, 1});

    return DualGraph(std::move(vertices), std::move(edges));
}

bool is_minimal(const DualGraph& g) {
    return std::none_of(g.vertices().begin(), g.vertices().end(), [](const Vertex& v) {
        return v.genus == 0 && v.self_int == -1;
    });
}

}  // namespace poisres::resgraph
