#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "poisres/blowup.hpp"
#include "poisres/json_io.hpp"
#include "poisres/poisson.hpp"
#include "poisres/randomgen.hpp"
#include "poisres/resgraph.hpp"

namespace {

using poisres::exactalg::Rational;
using poisres::jsonio::json;
using poisres::jsonio::Scene;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct Options {
    bool json_out = false;
    bool no_verdict_exit = false;
    bool emit_charts = false;
    std::uint64_t seed = 0;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Signals a cross-check failure between two independent formulations —
// always a bug in this program, never a property of the input.
struct InternalMismatch {
    std::string message;
};

void emit(const json& report, const Options& opt, const std::string& human) {
    if (opt.json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

int verdict_exit(bool verdict, const Options& opt) {
    return (verdict || opt.no_verdict_exit) ? 0 : kExitVerdictFalse;
}

const json& payload_field(const Scene& scene, const char* key) {
    const auto it = scene.payload.find(key);
    if (it == scene.payload.end())
        throw std::invalid_argument(std::string("scene: missing field \"") + key +
                                    "\" for kind " + scene.kind);
    return *it;
}

void require_kind(const Scene& scene, const std::string& kind) {
    if (scene.kind != kind)
        throw std::invalid_argument("scene: expected kind \"" + kind + "\", found \"" +
                                    scene.kind + "\"");
}

// Chart-side bivectors live in z-coordinates; reuse the x-based printer.
std::string z_named(std::string text) {
    for (char& ch : text)
        if (ch == 'x') ch = 'z';
    return text;
}

json trivector_components(const poisres::poisson::TriVector& t) {
    json out = json::array();
    for (const auto& [key, p] : t.coeffs())
        out.push_back({{"i", std::get<0>(key)},
                       {"j", std::get<1>(key)},
                       {"k", std::get<2>(key)},
                       {"poly", p.str()}});
    return out;
}

int cmd_jacobi(const Scene& scene, const Options& opt) {
    const Timer timer;
    require_kind(scene, "bivector");
    const poisres::poisson::Bivector theta =
        poisres::jsonio::bivector_from_json(payload_field(scene, "bivector"));

    const poisres::poisson::TriVector jac = poisres::poisson::jacobiator(theta);
    const poisres::poisson::TriVector sq = poisres::poisson::schouten_square(theta);
    if (!(sq == Rational(-2) * jac))
        throw InternalMismatch{"jacobiator and schouten_square are not proportional"};
    const bool verdict = jac.is_zero();

    json report{{"command", "jacobi"},
                {"verdict", verdict},
                {"jacobiator", trivector_components(jac)},
                {"schouten_square", trivector_components(sq)},
                {"proportionality", "-2"},
                {"elapsed_ms", timer.elapsed_ms()}};

    std::string human = "jacobi: verdict " + std::string(verdict ? "true" : "false") +
                        (verdict ? " (the bivector is Poisson)\n"
                                 : " (the Jacobi identity fails)\n");
    if (!verdict)
        for (const auto& [key, p] : jac.coeffs())
            human += "  jacobiator(" + std::to_string(std::get<0>(key)) + "," +
                     std::to_string(std::get<1>(key)) + "," +
                     std::to_string(std::get<2>(key)) + ") = " + p.str() + "\n";
    emit(report, opt, human);
    return verdict_exit(verdict, opt);
}

int cmd_lift(const Scene& scene, const Options& opt) {
    const Timer timer;
    require_kind(scene, "lift");
    const poisres::poisson::Bivector theta =
        poisres::jsonio::bivector_from_json(payload_field(scene, "bivector"));
    const poisres::blowup::Center center =
        poisres::jsonio::center_from_json(payload_field(scene, "center"));
    if (theta.nvars() != center.nvars)
        throw std::invalid_argument("scene: bivector and center disagree on nvars");

    const poisres::blowup::LiftReport report =
        poisres::blowup::lift_criterion(theta, center);
    bool conjunction = true;
    for (const poisres::blowup::ChartFlag& f : report.charts)
        conjunction = conjunction && f.holomorphic;
    if (report.verdict != conjunction)
        throw InternalMismatch{
            "lift criterion disagrees with the chart holomorphy oracle"};

    json out{{"command", "lift"},
             {"report", poisres::jsonio::to_json(report)},
             {"verdict", report.verdict},
             {"elapsed_ms", timer.elapsed_ms()}};

    std::string human = "lift: verdict " +
                        std::string(report.verdict ? "true" : "false") + "\n";
    for (const poisres::blowup::ChartFlag& f : report.charts)
        human += "  chart j=" + std::to_string(f.j) + ": " +
                 (f.holomorphic ? "holomorphic" : "keeps a denominator") + "\n";
    for (const poisres::blowup::Violation& v : report.violations) {
        human += "  violation " + v.kind + " (";
        for (std::size_t i = 0; i < v.indices.size(); ++i)
            human += (i ? "," : "") + std::to_string(v.indices[i]);
        human += "): " + v.witness + "\n";
    }

    if (opt.emit_charts && report.verdict) {
        const std::vector<poisres::poisson::Bivector> lifted =
            poisres::blowup::lift_bivector(theta, center);
        json charts = json::array();
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            charts.push_back(poisres::jsonio::to_json(lifted[i]));
            human += "  chart j=" + std::to_string(report.charts[i].j) + ": " +
                     z_named(lifted[i].str()) + "\n";
        }
        out["chart_bivectors"] = std::move(charts);
    }
    emit(out, opt, human);
    return verdict_exit(report.verdict, opt);
}

int cmd_graph(const Scene& scene, const std::string& sub, const Options& opt) {
    const Timer timer;
    require_kind(scene, "graph");
    const poisres::resgraph::DualGraph g =
        poisres::jsonio::graph_from_json(payload_field(scene, "graph"));

    json out{{"command", "graph " + sub}};
    std::string human;
    bool verdict = true;

    if (sub == "zcycle") {
        const poisres::resgraph::QDivisor z = poisres::resgraph::canonical_cycle(g);
        out["coefficients"] = poisres::jsonio::to_json(z.coeffs);
        out["effective"] = poisres::resgraph::is_effective(z);
        human = "canonical cycle Z:\n";
        for (int i = 0; i < g.size(); ++i)
            human += "  " + g.vertices()[i].name + ": " + z.coeffs[i].str() + "\n";
        human += std::string("effective: ") +
                 (poisres::resgraph::is_effective(z) ? "true" : "false") + "\n";
    } else if (sub == "pullback") {
        const poisres::resgraph::StrictTransform d =
            poisres::jsonio::strict_transform_from_json(payload_field(scene, "divisor"),
                                                        g.size());
        const poisres::resgraph::QDivisor pd = poisres::resgraph::pullback(g, d);
        out["coefficients"] = poisres::jsonio::to_json(pd.coeffs);
        out["divisor"] = d.name;
        human = "pullback of " + d.name + ": exceptional coefficients\n";
        for (int i = 0; i < g.size(); ++i)
            human += "  " + g.vertices()[i].name + ": " + pd.coeffs[i].str() + "\n";
    } else if (sub == "invneg") {
        verdict = poisres::resgraph::inverse_negativity(g);
        out["verdict"] = verdict;
        human = std::string("inverse negativity: ") + (verdict ? "true" : "false") +
                "\n";
    } else if (sub == "blowup") {
        std::vector<std::string> at;
        const auto it = scene.payload.find("incidence");
        if (it != scene.payload.end()) {
            if (!it->is_array())
                throw std::invalid_argument("scene: \"incidence\" must be an array");
            for (const json& name : *it) {
                if (!name.is_string())
                    throw std::invalid_argument(
                        "scene: \"incidence\" entries must be vertex names");
                at.push_back(name.get<std::string>());
            }
        }
        const poisres::resgraph::DualGraph blown =
            poisres::resgraph::blowup_graph(g, at);
        out["graph"] = poisres::jsonio::to_json(blown);
        human = "blown-up graph:\n" + out["graph"].dump(2) + "\n";
    } else if (sub == "minimal") {
        verdict = poisres::resgraph::is_minimal(g);
        out["verdict"] = verdict;
        human = std::string("minimal: ") + (verdict ? "true" : "false") + "\n";
    }

    out["elapsed_ms"] = timer.elapsed_ms();
    emit(out, opt, human);
    if (sub == "invneg" || sub == "minimal") return verdict_exit(verdict, opt);
    return 0;
}

int cmd_decide(const Scene& scene, const Options& opt) {
    const Timer timer;
    require_kind(scene, "decide");
    const poisres::resgraph::DualGraph g =
        poisres::jsonio::graph_from_json(payload_field(scene, "graph"));
    std::vector<poisres::resgraph::StrictTransform> family;
    const json& members = payload_field(scene, "family");
    if (!members.is_array())
        throw std::invalid_argument("scene: \"family\" must be an array");
    for (const json& m : members)
        family.push_back(poisres::jsonio::strict_transform_from_json(m, g.size()));

    poisres::resgraph::DecideReport report;
    try {
        report = poisres::resgraph::decide_poisson(g, family);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("scene: ") + e.what());
    }

    json table = json::array();
    for (const poisres::resgraph::DecideMember& m : report.members)
        table.push_back({{"name", m.name},
                         {"pullback", poisres::jsonio::to_json(m.pullback_coeffs)},
                         {"total", poisres::jsonio::to_json(m.total_coeffs)},
                         {"effective", m.effective}});
    json out{{"command", "decide"},
             {"members", std::move(table)},
             {"overall", report.overall},
             {"scope", "relative to supplied family"},
             {"elapsed_ms", timer.elapsed_ms()}};

    std::string human = "decide (relative to supplied family):\n";
    for (const poisres::resgraph::DecideMember& m : report.members) {
        human += "  " + m.name + ": pi*F = (";
        for (std::size_t i = 0; i < m.pullback_coeffs.size(); ++i)
            human += (i ? ", " : "") + m.pullback_coeffs[i].str();
        human += "), pi*F + Z = (";
        for (std::size_t i = 0; i < m.total_coeffs.size(); ++i)
            human += (i ? ", " : "") + m.total_coeffs[i].str();
        human += std::string("), effective: ") + (m.effective ? "true" : "false") +
                 "\n";
    }
    human += std::string("overall: ") + (report.overall ? "true" : "false") + "\n";
    emit(out, opt, human);
    return verdict_exit(report.overall, opt);
}

int cmd_catalog(const std::string& kind, int rank, const Options& opt) {
    const Timer timer;
    poisres::resgraph::DualGraph g({}, {});
    if (kind == "A")
        g = poisres::resgraph::ade_graph(poisres::resgraph::AdeKind::A, rank);
    else if (kind == "D")
        g = poisres::resgraph::ade_graph(poisres::resgraph::AdeKind::D, rank);
    else if (kind == "E")
        g = poisres::resgraph::ade_graph(poisres::resgraph::AdeKind::E, rank);
    else if (kind == "elliptic")
        g = poisres::resgraph::elliptic_cone_graph(rank);
    else
        throw std::invalid_argument("catalog: kind must be A, D, E, or elliptic");

    const poisres::resgraph::QDivisor z = poisres::resgraph::canonical_cycle(g);
    const bool invneg = poisres::resgraph::inverse_negativity(g);
    poisres::exactalg::QMatrix neg = poisres::resgraph::intersection_matrix(g);
    for (int i = 0; i < neg.rows(); ++i)
        for (int j = 0; j < neg.cols(); ++j) neg.at(i, j) = -neg.at(i, j);

    json out{{"command", "catalog"},
             {"kind", kind},
             {"rank", rank},
             {"graph", poisres::jsonio::to_json(g)},
             {"canonical_cycle", poisres::jsonio::to_json(z.coeffs)},
             {"inverse_negativity", invneg},
             {"neg_matrix_det", poisres::exactalg::determinant(neg).str()},
             {"elapsed_ms", timer.elapsed_ms()}};

    std::string human = "catalog " + kind + " rank " + std::to_string(rank) + ":\n";
    human += "  canonical cycle: (";
    for (std::size_t i = 0; i < z.coeffs.size(); ++i)
        human += (i ? ", " : "") + z.coeffs[i].str();
    human += ")\n";
    human += std::string("  inverse negativity: ") + (invneg ? "true" : "false") + "\n";
    human +=
        "  det(-M) = " + poisres::exactalg::determinant(neg).str() + "\n";
    emit(out, opt, human);
    return 0;
}

// Standalone differential test: the lift criterion against the chart
// holomorphy oracle on randomized inputs, for CI smoke runs.
int cmd_fuzz(const Options& opt) {
    const Timer timer;
    poisres::randomgen::Rng rng(opt.seed);
    int cases = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= n - 2; ++k) {
            const poisres::blowup::Center c(n, k);
            for (int trial = 0; trial < 34; ++trial) {
                poisres::poisson::Bivector theta =
                    poisres::randomgen::random_bivector(rng, n, 3, 0.5);
                if (trial % 3 > 0) {
                    poisres::poisson::Bivector pushed(n);
                    for (const auto& [key, g] : theta.coeffs()) {
                        poisres::exactalg::Polynomial h = g;
                        for (int rep = 0; rep < trial % 3; ++rep)
                            h = h * poisres::exactalg::Polynomial::variable(
                                        n, rng.uniform(k + 1, n));
                        pushed.set(key.first, key.second, h);
                    }
                    theta = pushed;
                }
                const poisres::blowup::LiftReport report =
                    poisres::blowup::lift_criterion(theta, c);
                bool conjunction = true;
                for (const poisres::blowup::ChartFlag& f : report.charts)
                    conjunction = conjunction && f.holomorphic;
                if (report.verdict != conjunction)
                    throw InternalMismatch{
                        "fuzz: criterion/oracle disagreement at case " +
                        std::to_string(cases)};
                ++cases;
            }
        }
    }
    json out{{"command", "fuzz"},
             {"cases", cases},
             {"seed", opt.seed},
             {"disagreements", 0},
             {"elapsed_ms", timer.elapsed_ms()}};
    emit(out, opt,
         "fuzz: " + std::to_string(cases) + " cases, no disagreement\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poisson-structure calculus for blowups and resolutions"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json etc. after the subcommand

    Options opt;
    app.add_flag("--json", opt.json_out, "emit a JSON report instead of text");
    app.add_flag("--no-verdict-exit", opt.no_verdict_exit,
                 "always exit 0 on a computed (even negative) verdict");

    std::string jacobi_file;
    CLI::App* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity");
    jacobi->add_option("scene", jacobi_file, "bivector scene file")->required();

    std::string lift_file;
    CLI::App* lift = app.add_subcommand("lift", "decide blowup liftability");
    lift->add_option("scene", lift_file, "lift scene file")->required();
    lift->add_flag("--emit-charts", opt.emit_charts,
                   "print the lifted chart bivectors on success");

    CLI::App* graph = app.add_subcommand("graph", "dual-graph divisor calculus");
    graph->require_subcommand(1);
    std::string graph_file;
    for (const char* sub : {"zcycle", "pullback", "invneg", "blowup", "minimal"})
        graph->add_subcommand(sub)->add_option("scene", graph_file, "graph scene file")
            ->required();

    std::string decide_file;
    CLI::App* decide =
        app.add_subcommand("decide", "decide the Poisson-resolution property");
    decide->add_option("scene", decide_file, "decide scene file")->required();

    std::string catalog_kind;
    int catalog_rank = 0;
    CLI::App* catalog = app.add_subcommand("catalog", "built-in resolution graphs");
    catalog->add_option("kind", catalog_kind, "A, D, E, or elliptic")->required();
    catalog->add_option("rank", catalog_rank, "rank (or cone degree)")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz");
    fuzz->group("");  // hidden from help
    fuzz->add_option("--seed", opt.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(jacobi))
            return cmd_jacobi(poisres::jsonio::load_scene_file(jacobi_file), opt);
        if (app.got_subcommand(lift))
            return cmd_lift(poisres::jsonio::load_scene_file(lift_file), opt);
        if (app.got_subcommand(graph)) {
            for (const char* sub :
                 {"zcycle", "pullback", "invneg", "blowup", "minimal"})
                if (graph->got_subcommand(sub))
                    return cmd_graph(poisres::jsonio::load_scene_file(graph_file),
                                     sub, opt);
        }
        if (app.got_subcommand(decide))
            return cmd_decide(poisres::jsonio::load_scene_file(decide_file), opt);
        if (app.got_subcommand(catalog))
            return cmd_catalog(catalog_kind, catalog_rank, opt);
        if (app.got_subcommand(fuzz)) return cmd_fuzz(opt);
    } catch (const InternalMismatch& e) {
        std::cerr << "internal error: " << e.message << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        // domain_error and friends past input validation: a bug, not bad input.
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
