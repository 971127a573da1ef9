#include "copshield/experiment.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "copshield/best_response.hpp"
#include "copshield/errors.hpp"
#include "copshield/exact_solver.hpp"
#include "copshield/generators.hpp"
#include "copshield/graph_io.hpp"
#include "copshield/vertex_cover.hpp"

namespace copshield {

namespace {

Graph generate_family(const std::string& family, int n, double p, uint64_t seed) {
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "grid") {
        int rows = static_cast<int>(std::sqrt(static_cast<double>(n)));
        while (rows > 1 && n % rows != 0) --rows;
        return grid_graph(rows, n / rows);
    }
    if (family == "petersen") return petersen_graph();
    if (family == "complete-bipartite")
        return complete_bipartite_graph(n / 2, n - n / 2);
    if (family == "gnp-connected") return gnp_connected(n, p, seed);
    if (family == "star-forest-plus-cover") {
        int cover = std::max(2, static_cast<int>(std::llround(p * n)));
        return star_forest_plus_cover(n, cover);
    }
    throw InvalidArgument("unknown graph family: " + family);
}

void fill_bounds(ResultRow& row, const ExperimentConfig& config, long long vc) {
    auto report = make_bound_report(config.k, config.d, std::max<long long>(2, vc),
                                    std::max<long long>(2, vc), config.epsilon);
    row.log2_f_value = report.log2_f_value;
    row.t = report.t;
    row.log2_alpha = report.log2_alpha;
    row.theorem1_exponent = report.theorem1_exponent;
    row.theorem2_log2_bound = report.theorem2_log2_bound;
    row.epsilon_c_value = report.epsilon_c_value.str();
}

}  // namespace

std::string ResultRow::csv_header() {
    return "graph,n,m,vc,cop,strategy,budget,captured,capture_step,log2_f,t,log2_alpha,"
           "thm1_exponent,thm2_log2_bound,epsilon_c,error,wall_ms";
}

std::string ResultRow::to_csv() const {
    std::ostringstream os;
    os << graph_id << ',' << n << ',' << m << ',';
    if (vc) os << *vc;
    os << ',';
    if (cop) os << *cop;
    os << ',' << strategy << ',' << budget << ',' << (captured ? 1 : 0) << ','
       << capture_step << ',' << log2_f_value << ',' << t << ',' << log2_alpha << ','
       << theorem1_exponent << ',' << theorem2_log2_bound << ',' << epsilon_c_value << ','
       << error << ',' << wall_ms;
    return os.str();
}

Graph load_or_generate_graph(const ExperimentConfig& config, int batch_index) {
    bool has_file = !config.graph_path.empty();
    bool has_family = !config.family.empty();
    if (has_file == has_family)
        throw InvalidArgument("exactly one input source required: --graph or --family");
    if (has_file) return read_graph_file(config.graph_path);
    return generate_family(config.family, config.n, config.p,
                           config.seed + static_cast<uint64_t>(batch_index));
}

ProtectedStrategy make_named_strategy(const Graph& g, const ExperimentConfig& config) {
    MainOverrides overrides{config.alpha_override, config.base_threshold, config.seed};
    if (config.strategy == "geodesic") {
        auto bundle = geodesic_guard(g, longest_geodesic(g));
        return {std::shared_ptr<CopStrategy>(bundle.make().release()), bundle.certificate};
    }
    if (config.strategy == "patrol") {
        VertexSet x = min_vertex_cover(g);
        int s = std::max(1, config.d);
        int cap = 1, hub = 0, best = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            cap = std::max(cap, ball(g, v, s - 1).set_intersection(x).size());
            int c = ball(g, v, s).set_intersection(x).size();
            if (c > best) {
                best = c;
                hub = v;
            }
        }
        auto bundle = build_patrol(g, x, hub, s, cap);
        return {std::shared_ptr<CopStrategy>(bundle.make().release()), bundle.certificate};
    }
    if (config.strategy == "epsilon") {
        auto result = epsilon_strategy(g, config.epsilon);
        return {std::shared_ptr<CopStrategy>(result.bundle.make().release()),
                result.bundle.certificate};
    }
    if (config.strategy == "main") {
        auto bundle = main_strategy(g, min_vertex_cover(g), config.k, config.d, overrides);
        return {std::shared_ptr<CopStrategy>(bundle.make().release()), bundle.certificate};
    }
    if (config.strategy == "meyniel") {
        auto result = meyniel_vc_strategy(g, overrides);
        return {std::shared_ptr<CopStrategy>(result.bundle.make().release()),
                result.bundle.certificate};
    }
    throw InvalidArgument("unknown strategy: " + config.strategy);
}

std::unique_ptr<RobberStrategy> make_robber(const std::string& name, uint64_t seed) {
    if (name == "greedy") return std::make_unique<GreedyEvader>();
    if (name == "random") return std::make_unique<RandomWalker>(seed);
    throw InvalidArgument("unknown robber: " + name);
}

ResultRow cmd_solve(const ExperimentConfig& config, const Graph& g) {
    ResultRow row;
    row.graph_id = g.name();
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.strategy = "solve";
    auto start = std::chrono::steady_clock::now();
    row.vc = min_vertex_cover(g).size();
    row.cop = cop_number(g, config.k_max, {config.solver_budget});
    row.budget = *row.cop;
    row.captured = true;
    row.capture_step = 0;
    fill_bounds(row, config, *row.vc);
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return row;
}

SimulateOutcome cmd_simulate(const ExperimentConfig& config, const Graph& g) {
    SimulateOutcome out;
    out.row.graph_id = g.name();
    out.row.n = g.vertex_count();
    out.row.m = g.edge_count();
    out.row.strategy = config.strategy;
    auto start = std::chrono::steady_clock::now();

    out.row.vc = min_vertex_cover(g).size();
    ProtectedStrategy strat = make_named_strategy(g, config);
    out.row.budget = strat.certificate.cop_budget;

    if (config.robber == "best") {
        auto result = best_response_robber(g, *strat.prototype, {config.search_budget});
        out.trace = result.trace;
    } else {
        auto robber = make_robber(config.robber, config.seed);
        auto cops = strat.prototype->clone();
        out.trace = run_game(g, *cops, *robber, config.horizon);
    }
    out.row.captured = out.trace.captured();
    out.row.capture_step = out.trace.capture_step;
    fill_bounds(out.row, config, *out.row.vc);
    out.row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return out;
}

std::string ExperimentSummary::to_csv() const {
    std::ostringstream os;
    os << ResultRow::csv_header() << '\n';
    for (const auto& row : rows) os << row.to_csv() << '\n';
    return os.str();
}

std::string ExperimentSummary::summary_line() const {
    std::ostringstream os;
    os << "rows=" << rows.size() << " capture_rate=" << capture_rate
       << " max_budget_vc_ratio=" << max_budget_vc_ratio;
    return os.str();
}

ExperimentSummary cmd_experiment(const ExperimentConfig& config) {
    ExperimentSummary summary;
    summary.rows.resize(config.count);

    auto run_one = [&](int i) {
        ResultRow& row = summary.rows[i];
        auto start = std::chrono::steady_clock::now();
        try {
            ExperimentConfig local = config;
            local.seed = config.seed + static_cast<uint64_t>(i);
            Graph g = load_or_generate_graph(local, i);
            ExperimentConfig sim = local;
            sim.graph_path.clear();
            sim.family.clear();
            auto outcome = [&] {
                SimulateOutcome out;
                out.row.graph_id = g.name();
                out.row.n = g.vertex_count();
                out.row.m = g.edge_count();
                out.row.strategy = local.strategy;
                out.row.vc = min_vertex_cover(g).size();
                ProtectedStrategy strat = make_named_strategy(g, local);
                out.row.budget = strat.certificate.cop_budget;
                if (local.robber == "best") {
                    auto result = best_response_robber(g, *strat.prototype,
                                                       {local.search_budget});
                    out.trace = result.trace;
                } else {
                    auto robber = make_robber(local.robber, local.seed);
                    auto cops = strat.prototype->clone();
                    out.trace = run_game(g, *cops, *robber, local.horizon);
                }
                out.row.captured = out.trace.captured();
                out.row.capture_step = out.trace.capture_step;
                fill_bounds(out.row, local, *out.row.vc);
                return out;
            }();
            row = outcome.row;
        } catch (const std::exception& e) {
            row.error = e.what();  // partial failures stay in the batch
        }
        row.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    };

    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (int i = 0; i < config.count; ++i) run_one(i);
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (int i = next.fetch_add(1); i < config.count; i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& worker : workers) worker.join();
    }

    int captured = 0;
    for (const auto& row : summary.rows) {
        if (row.captured) ++captured;
        if (row.vc && *row.vc > 0)
            summary.max_budget_vc_ratio = std::max(
                summary.max_budget_vc_ratio, static_cast<double>(row.budget) / *row.vc);
    }
    summary.capture_rate =
        summary.rows.empty() ? 0.0 : static_cast<double>(captured) / summary.rows.size();
    return summary;
}

BoundReport cmd_bounds(int k, int d, long long x, const Rational& eps) {
    return make_bound_report(k, d, x, x, eps);
}

std::string strip_wall_column(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out << (pos == std::string::npos ? line : line.substr(0, pos)) << '\n';
    }
    return out.str();
}

}  // namespace copshield
