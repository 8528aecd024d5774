#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "proxgraph/bench.h"
#include "proxgraph/hnsw_builder.h"
#include "proxgraph/index_io.h"
#include "proxgraph/nsg_builder.h"
#include "proxgraph/oracle.h"
#include "proxgraph/synthetic.h"
#include "proxgraph/vecs_io.h"

namespace proxgraph::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Dataset load_dataset(const std::string& path) { return load_vecs(path, vec_kind_from_path(path)); }

// "dist:n:d:seed", e.g. "uniform:10000:16:1".
SyntheticSpec parse_synthetic(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 4) throw UsageError("--synthetic expects dist:n:d:seed, got '" + text + "'");
    SyntheticSpec s;
    try {
        s.distribution = parse_distribution(parts[0]);
        s.n = std::stoull(parts[1]);
        s.d = std::stoull(parts[2]);
        s.seed = std::stoull(parts[3]);
    } catch (const std::logic_error&) {
        throw UsageError("--synthetic expects dist:n:d:seed, got '" + text + "'");
    }
    return s;
}

Dataset dataset_from(const std::string& base, const std::string& synthetic) {
    if (base.empty() == synthetic.empty()) throw UsageError("give exactly one of --base and --synthetic");
    if (!base.empty()) return load_dataset(base);
    return gen_synthetic(parse_synthetic(synthetic));
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }
}

json counters_json(const OpCounters& c) { return {{"distance", c.distance}, {"angle", c.angle}}; }

// Turns a JSON config object into "--key value" arguments, skipping keys the
// user passed explicitly.
std::vector<std::string> config_args(const std::string& path, const std::vector<std::string>& user) {
    json j;
    try {
        const auto bytes = read_file(path);
        j = json::parse(bytes.begin(), bytes.end());
    } catch (const json::exception& e) {
        throw UsageError("cannot parse config " + path + ": " + e.what());
    }
    if (j.contains("config")) j = j["config"];
    if (!j.is_object()) throw UsageError("config " + path + " is not a JSON object");
    std::vector<std::string> out;
    for (const auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : user) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        }
        if (given || key == "config") continue;
        auto scalar = [](const json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
            return v.dump();
        };
        if (value.is_null()) continue;
        out.push_back(flag);
        if (value.is_array()) {
            for (const auto& e : value) out.push_back(scalar(e));
        } else {
            out.push_back(scalar(value));
        }
    }
    return out;
}

void apply_threads(int requested) {
    if (const char* env = std::getenv("PROXGRAPH_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) requested = t;
    }
    if (requested > 0) omp_set_num_threads(requested);
}

struct BuildConfig {
    std::string builder;
    std::string base;
    std::string synthetic;
    std::string out;
    std::string report;
    std::uint64_t seed = 1;
    int threads = 0;
    std::size_t k0 = 0;
    std::size_t knng_iters = 8;
    double sample_rate = 1.0;
    std::size_t k = 20;
    std::size_t L = 40;
    std::size_t M = 20;
    double alpha = 66.0;
    std::size_t iters = 2;
    double target_recall = -1.0;
    double epsilon = 0.6;
    double l = 1.0;
    bool log2_samples = false;
    bool async_quality = false;
    bool cached = true;
    std::size_t connect_width = 64;
    std::size_t ef = 64;
    double m_factor = 0.0;
    bool layer_connect = true;

    std::size_t resolved_k0() const {
        if (k0 > 0) return k0;
        if (builder == "ori-nsg") return 40;
        if (builder == "fast-hnsw") return 32;
        return 20;
    }

    json to_json() const {
        json j;
        j["builder"] = builder;
        if (!base.empty()) j["base"] = base;
        if (!synthetic.empty()) j["synthetic"] = synthetic;
        j["seed"] = seed;
        j["k0"] = resolved_k0();
        j["knng-iters"] = knng_iters;
        j["sample-rate"] = sample_rate;
        if (builder == "ori-nsg" || builder == "fast-nsg") {
            j["k"] = k;
            j["L"] = L;
        }
        j["M"] = M;
        if (builder == "fast-nsg" || builder == "fast-hnsw") {
            j["alpha"] = alpha;
            j["iters"] = iters;
            j["cached"] = cached;
        }
        if (builder == "fast-nsg") {
            j["target-recall"] = target_recall;
            j["epsilon"] = epsilon;
            j["l"] = l;
            j["log2-samples"] = log2_samples;
            j["async-quality"] = async_quality;
        }
        if (builder == "ori-nsg" || builder == "fast-nsg") j["connect-width"] = connect_width;
        if (builder == "ori-hnsw" || builder == "fast-hnsw") {
            j["ef"] = ef;
            j["m-factor"] = m_factor;
        }
        if (builder == "fast-hnsw") j["layer-connect"] = layer_connect;
        return j;
    }
};

KnngParams knng_params(const BuildConfig& c) {
    KnngParams kp;
    kp.k0 = c.resolved_k0();
    kp.iters = c.knng_iters;
    kp.sample_rate = c.sample_rate;
    kp.seed = c.seed;
    return kp;
}

json iteration_json(const IterationStats& s) {
    json j{{"iteration", s.iteration},
           {"seconds", s.seconds},
           {"refine", counters_json(s.refine)},
           {"connect", counters_json(s.connect)},
           {"search", counters_json(s.search)},
           {"bridges", s.bridges},
           {"mean_degree", s.mean_degree}};
    if (s.r_hat) j["r_hat"] = *s.r_hat;
    return j;
}

json build_report_json(const BuildReport& r) {
    json its = json::array();
    for (const auto& s : r.iterations) its.push_back(iteration_json(s));
    OpCounters total = r.knng;
    total += r.search;
    total += r.refine.prune;
    total += r.refine.connect;
    return {{"phases",
             {{"knng_seconds", r.knng_seconds},
              {"search_seconds", r.search_seconds},
              {"refine_seconds", r.refine_seconds}}},
            {"counters",
             {{"knng", counters_json(r.knng)},
              {"search", counters_json(r.search)},
              {"prune", counters_json(r.refine.prune)},
              {"connect", counters_json(r.refine.connect)},
              {"total", counters_json(total)}}},
            {"bridges", r.refine.bridges},
            {"entry_point", r.entry_point},
            {"iterations", its}};
}

json graph_json(const ProximityGraph& g) {
    std::uint64_t bridges = 0;
    for (auto b : g.bridge_counts()) bridges += b;
    return {{"n", g.size()}, {"edges", g.edge_count()}, {"mean_degree", g.mean_degree()}, {"bridges", bridges},
            {"entry_point", g.entry_point()}};
}

int cmd_build(const BuildConfig& c, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> builders{"ori-nsg", "fast-nsg", "ori-hnsw", "fast-hnsw"};
    if (std::find(builders.begin(), builders.end(), c.builder) == builders.end()) {
        throw UsageError("unknown builder '" + c.builder + "'");
    }
    if (c.out.empty()) throw UsageError("--out is required");
    const Dataset ds = dataset_from(c.base, c.synthetic);
    const auto dim = static_cast<std::uint32_t>(ds.dim());
    err << "build: " << c.builder << " on n=" << ds.size() << " d=" << ds.dim() << "\n";

    json report;
    report["command"] = "build";
    report["config"] = c.to_json();
    report["config"]["out"] = c.out;
    const auto t0 = std::chrono::steady_clock::now();
    if (c.builder == "ori-nsg") {
        NsgParams p;
        p.knng = knng_params(c);
        p.k = c.k;
        p.L = c.L;
        p.max_degree = c.M;
        p.connect_width = c.connect_width;
        p.seed = c.seed;
        BuildReport r;
        const auto g = build_nsg_original(ds, p, &r);
        report["build_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report["details"] = build_report_json(r);
        report["graph"] = graph_json(g);
        save_index(g, dim, c.out);
    } else if (c.builder == "fast-nsg") {
        FastNsgParams p;
        p.knng = knng_params(c);
        p.k = c.k;
        p.L = c.L;
        p.max_degree = c.M;
        p.alpha_degrees = c.alpha;
        p.max_iters = c.iters;
        if (c.target_recall >= 0.0) p.target_recall = c.target_recall;
        p.epsilon = c.epsilon;
        p.l = c.l;
        p.log2_samples = c.log2_samples;
        p.async_quality = c.async_quality;
        p.cached = c.cached;
        p.connect_width = c.connect_width;
        p.seed = c.seed;
        BuildReport r;
        const auto g = build_fastnsg(ds, p, &r);
        report["build_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report["details"] = build_report_json(r);
        report["graph"] = graph_json(g);
        save_index(g, dim, c.out);
    } else {
        LayeredGraph lg;
        if (c.builder == "ori-hnsw") {
            HnswParams p;
            p.ef = c.ef;
            p.max_degree = c.M;
            p.m_factor = c.m_factor;
            p.seed = c.seed;
            HnswReport r;
            lg = build_hnsw_original(ds, p, &r);
            report["details"] = {{"counters", counters_json(r.counters)}};
        } else {
            FastHnswParams p;
            p.knng = knng_params(c);
            p.ef = c.ef;
            p.max_degree = c.M;
            p.alpha_degrees = c.alpha;
            p.m_factor = c.m_factor;
            p.max_iters = c.iters;
            p.layer_connect = c.layer_connect;
            p.cached = c.cached;
            p.seed = c.seed;
            FastHnswReport r;
            lg = build_fasthnsw(ds, p, &r);
            json layers = json::array();
            for (const auto& lr : r.layers) layers.push_back(build_report_json(lr));
            report["details"] = {{"layers", layers}};
        }
        report["build_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json layers = json::array();
        for (std::size_t i = 0; i < lg.num_layers(); ++i) {
            auto gj = graph_json(lg.layer(i));
            gj["members"] = lg.layer_members(i).size();
            layers.push_back(gj);
        }
        report["graph"] = {{"n", lg.size()}, {"entry_point", lg.entry_point()}, {"layers", layers}};
        save_index(lg, dim, c.out);
    }
    report["environment"] = environment_stamp();
    err << "build: " << report["build_seconds"].get<double>() << " s, index written to " << c.out << "\n";
    write_json(report, c.report, out);
    return kExitOk;
}

struct SweepConfig {
    std::string index;
    std::string base;
    std::string queries;
    std::string truth;
    std::size_t k = 10;
    std::vector<std::size_t> ls;
    std::string report;
    std::string csv;
};

int cmd_sweep(const SweepConfig& c, std::ostream& out, std::ostream& err) {
    omp_set_num_threads(1);
    IndexHeader header;
    const AnyGraph index = load_index(c.index, &header);
    const Dataset ds = load_dataset(c.base);
    const Dataset queries = load_dataset(c.queries);
    const IdTable truth = load_ivecs(c.truth);
    if (ds.size() != header.n || ds.dim() != header.dim) {
        throw UsageError("index was built for n=" + std::to_string(header.n) + " d=" + std::to_string(header.dim));
    }
    std::vector<std::string> warnings;
    const auto rows = search_sweep(index, ds, queries, truth, c.k, c.ls, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";

    json report;
    report["command"] = "search-sweep";
    report["config"] = {{"index", c.index}, {"base", c.base},  {"queries", c.queries},
                        {"truth", c.truth}, {"k", c.k},        {"L", normalize_l_values(c.ls, c.k)}};
    json jr = json::array();
    for (const auto& r : rows) {
        jr.push_back({{"L", r.L}, {"recall", r.recall}, {"qps", r.qps}, {"mean_distances", r.mean_distances},
                      {"seconds", r.seconds}});
    }
    report["rows"] = jr;
    report["warnings"] = warnings;
    report["environment"] = environment_stamp();
    if (!c.csv.empty()) {
        std::ostringstream os;
        os << "L,recall,qps,mean_distances\n";
        for (const auto& r : rows) os << r.L << "," << r.recall << "," << r.qps << "," << r.mean_distances << "\n";
        const auto text = os.str();
        write_file(c.csv, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }
    write_json(report, c.report, out);
    return kExitOk;
}

struct GtConfig {
    std::string base;
    std::string queries;
    std::size_t k = 100;
    std::string out;
    bool exclude_self = false;
    int threads = 0;
};

int cmd_gen_gt(const GtConfig& c, std::ostream& err) {
    apply_threads(c.threads);
    const Dataset ds = load_dataset(c.base);
    const Dataset queries = load_dataset(c.queries);
    if (c.k < 1 || c.k > ds.size() - (c.exclude_self ? 1 : 0)) {
        throw UsageError("k=" + std::to_string(c.k) + " exceeds the " + std::to_string(ds.size()) + " base rows");
    }
    if (queries.dim() != ds.dim()) throw UsageError("query dimensionality differs from base");
    IdTable table;
    table.cols = c.k;
    const std::size_t chunk = 1000;
    for (std::size_t begin = 0; begin < queries.size(); begin += chunk) {
        const std::size_t end = std::min(queries.size(), begin + chunk);
        std::vector<node_id> ids(end - begin);
        for (std::size_t i = begin; i < end; ++i) ids[i - begin] = static_cast<node_id>(i);
        const Dataset part = queries.subset(ids);
        IdTable t;
        if (c.exclude_self) {
            // Row i of the query file is base row i.
            t.cols = c.k;
            t.rows = part.size();
            for (std::size_t i = begin; i < end; ++i) {
                for (const auto& nb : exact_knn(ds, queries.row(static_cast<node_id>(i)), c.k, static_cast<node_id>(i))) {
                    t.values.push_back(static_cast<std::int32_t>(nb.id));
                }
            }
        } else {
            t = ground_truth_table(ds, part, c.k);
        }
        table.values.insert(table.values.end(), t.values.begin(), t.values.end());
        table.rows += t.rows;
        err << "gen-gt: " << end << "/" << queries.size() << " queries\n";
    }
    save_ivecs(table, c.out);
    return kExitOk;
}

struct SynthConfig {
    std::size_t n = 10000;
    std::size_t dim = 16;
    std::string distribution = "uniform";
    std::uint64_t seed = 1;
    std::size_t centers = 10;
    double stddev = 0.05;
    std::string out;
};

int cmd_gen_synthetic(const SynthConfig& c, std::ostream& err) {
    SyntheticSpec s;
    s.n = c.n;
    s.d = c.dim;
    try {
        s.distribution = parse_distribution(c.distribution);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    s.seed = c.seed;
    s.centers = c.centers;
    s.cluster_stddev = c.stddev;
    save_fvecs(gen_synthetic(s), c.out);
    err << "gen-synthetic: wrote " << c.n << " x " << c.dim << " to " << c.out << "\n";
    return kExitOk;
}

struct McConfig {
    std::string experiment;
    std::vector<double> alphas{70.0, 90.0, 120.0};
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    std::size_t n = 20000;
    std::size_t dim = 64;
    std::size_t candidates = 100;
    std::size_t samples = 500;
    std::size_t k = 10;
    double epsilon = 0.6;
    double l = 1.0;
    std::size_t knng_iters = 1;
    std::string out;
    int threads = 0;
};

int cmd_montecarlo(const McConfig& c, std::ostream& out) {
    apply_threads(c.threads);
    json report;
    report["command"] = "montecarlo";
    report["experiment"] = c.experiment;
    report["seed"] = c.seed;
    if (c.experiment == "lemma1") {
        json rows = json::array();
        for (double a : c.alphas) {
            const auto r = montecarlo_pruning_frequency(a, c.trials, c.seed);
            rows.push_back({{"alpha", r.alpha_degrees},
                            {"trials", r.trials},
                            {"frequency", r.frequency},
                            {"expected", r.expected},
                            {"std_error", r.std_error},
                            {"ci95", {r.frequency - 1.96 * r.std_error, r.frequency + 1.96 * r.std_error}},
                            {"prunings_per_rank_increase", r.prunings_per_rank_increase},
                            {"prunings_expected", r.prunings_expected}});
        }
        report["rows"] = rows;
    } else if (c.experiment == "fig7") {
        const auto r = montecarlo_pruning_angle(c.n, c.dim, c.candidates, c.samples, c.seed);
        report["n"] = r.n;
        report["dim"] = r.dim;
        report["candidates"] = r.candidates;
        report["samples"] = r.samples;
        report["prunings"] = r.prunings;
        report["mean_degrees"] = r.mean_degrees;
        report["std_degrees"] = r.std_degrees;
        report["ci95"] = {r.mean_degrees - r.ci95_degrees, r.mean_degrees + r.ci95_degrees};
        report["histogram_10deg"] = r.histogram;
    } else if (c.experiment == "theorem3") {
        const auto r = montecarlo_sampling_bound(c.n, c.dim, c.k, c.epsilon, c.l, c.trials, c.seed, c.knng_iters);
        report["n"] = r.n;
        report["n_s"] = r.n_s;
        report["trials"] = r.trials;
        report["epsilon"] = r.epsilon;
        report["l"] = r.l;
        report["true_recall"] = r.true_recall;
        report["coverage"] = r.coverage;
        report["required"] = r.required;
        report["max_error"] = r.max_error;
        report["mean_abs_error"] = r.mean_abs_error;
    } else {
        throw UsageError("unknown experiment '" + c.experiment + "' (lemma1, fig7, theorem3)");
    }
    report["environment"] = environment_stamp();
    write_json(report, c.out, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args = raw_args;
    CLI::App app{"Proximity-graph index builder and benchmark harness", "proxgraph"};
    app.require_subcommand(1);

    BuildConfig bc;
    std::string config_path;
    auto* build = app.add_subcommand("build", "Build an index and write a timing report");
    build->add_option("--config", config_path, "JSON file of option values (a report's \"config\" works)");
    build->add_option("--builder", bc.builder, "ori-nsg | fast-nsg | ori-hnsw | fast-hnsw")->required();
    build->add_option("--base", bc.base, "Dataset file (.fvecs/.bvecs/.ivecs)");
    build->add_option("--synthetic", bc.synthetic, "Synthetic dataset dist:n:d:seed");
    build->add_option("--out", bc.out, "Index output path");
    build->add_option("--report", bc.report, "JSON report path (default stdout)");
    build->add_option("--seed", bc.seed);
    build->add_option("--threads", bc.threads, "Build threads (0 = OpenMP default)");
    build->add_option("--k0", bc.k0, "KNNG degree (0 = builder default)");
    build->add_option("--knng-iters", bc.knng_iters);
    build->add_option("--sample-rate", bc.sample_rate)->check(CLI::Range(1e-9, 1.0));
    build->add_option("--k", bc.k);
    build->add_option("--L", bc.L);
    build->add_option("--M", bc.M);
    build->add_option("--alpha", bc.alpha)->check(CLI::Range(60.0, 179.999));
    build->add_option("--iters", bc.iters, "OptKCNA rounds I");
    build->add_option("--target-recall", bc.target_recall, "Stop when the estimate reaches this (<0: off)");
    build->add_option("--epsilon", bc.epsilon);
    build->add_option("--l", bc.l);
    build->add_option("--log2-samples", bc.log2_samples);
    build->add_option("--async-quality", bc.async_quality);
    build->add_option("--cached", bc.cached);
    build->add_option("--connect-width", bc.connect_width);
    build->add_option("--ef", bc.ef);
    build->add_option("--m-factor", bc.m_factor, "Level multiplier (0 = 1/ln M)");
    build->add_option("--layer-connect", bc.layer_connect);

    SweepConfig sc;
    auto* sweep = app.add_subcommand("search-sweep", "Recall and QPS per beam width, single-threaded");
    sweep->add_option("--index", sc.index)->required();
    sweep->add_option("--base", sc.base)->required();
    sweep->add_option("--queries", sc.queries)->required();
    sweep->add_option("--truth", sc.truth)->required();
    sweep->add_option("--k", sc.k);
    sweep->add_option("--L", sc.ls, "Beam widths")->required()->expected(1, 1 << 20);
    sweep->add_option("--report", sc.report);
    sweep->add_option("--csv", sc.csv);

    GtConfig gc;
    auto* gt = app.add_subcommand("gen-gt", "Exact k-NN ground truth as ivecs");
    gt->add_option("--base", gc.base)->required();
    gt->add_option("--queries", gc.queries)->required();
    gt->add_option("--k", gc.k);
    gt->add_option("--out", gc.out)->required();
    gt->add_option("--exclude-self", gc.exclude_self, "Query i is base row i; skip it");
    gt->add_option("--threads", gc.threads);

    SynthConfig yc;
    auto* syn = app.add_subcommand("gen-synthetic", "Write a synthetic dataset as fvecs");
    syn->add_option("--n", yc.n);
    syn->add_option("--dim", yc.dim);
    syn->add_option("--distribution", yc.distribution, "uniform | gaussian | clustered");
    syn->add_option("--seed", yc.seed);
    syn->add_option("--centers", yc.centers);
    syn->add_option("--stddev", yc.stddev);
    syn->add_option("--out", yc.out)->required();

    McConfig mc;
    auto* mcs = app.add_subcommand("montecarlo", "Pruning-geometry and sampling-bound simulations");
    mcs->add_option("--experiment", mc.experiment, "lemma1 | fig7 | theorem3")->required();
    mcs->add_option("--alpha", mc.alphas, "lemma1 angles in degrees")->expected(1, 64);
    mcs->add_option("--trials", mc.trials);
    mcs->add_option("--seed", mc.seed);
    mcs->add_option("--n", mc.n);
    mcs->add_option("--dim", mc.dim);
    mcs->add_option("--candidates", mc.candidates);
    mcs->add_option("--samples", mc.samples);
    mcs->add_option("--k", mc.k);
    mcs->add_option("--epsilon", mc.epsilon);
    mcs->add_option("--l", mc.l);
    mcs->add_option("--knng-iters", mc.knng_iters);
    mcs->add_option("--out", mc.out);
    mcs->add_option("--threads", mc.threads);

    try {
        // Splice config-file values in right after the subcommand name.
        for (std::size_t i = 2; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
            if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
            if (!path.empty() && args.size() > 1) {
                const auto extra = config_args(path, args);
                args.insert(args.begin() + 2, extra.begin(), extra.end());
                break;
            }
        }
        std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
        app.parse(rev);

        if (*build) {
            apply_threads(bc.threads);
            return cmd_build(bc, out, err);
        }
        if (*sweep) return cmd_sweep(sc, out, err);
        if (*gt) return cmd_gen_gt(gc, err);
        if (*syn) return cmd_gen_synthetic(yc, err);
        if (*mcs) return cmd_montecarlo(mc, out);
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace proxgraph::cli
