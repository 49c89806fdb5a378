#include "invograph/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "invograph/align.hpp"
#include "invograph/csv.hpp"
#include "invograph/domain.hpp"
#include "invograph/embed_metrics.hpp"
#include "invograph/error.hpp"
#include "invograph/graphbuild.hpp"
#include "invograph/ingest.hpp"
#include "invograph/null_models.hpp"
#include "invograph/rng.hpp"
#include "invograph/spectrum.hpp"
#include "invograph/svg.hpp"
#include "invograph/synth.hpp"
#include "invograph/user_level.hpp"

#ifndef INVOGRAPH_DATA_DIR
#define INVOGRAPH_DATA_DIR "data"
#endif

namespace invograph::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
    std::int64_t engagement_threshold = 10000;
    std::int64_t edge_threshold = 100;
    std::string seed_domain = "nytimes.com";
    std::string months;
    std::uint64_t rng_seed = 1;
    bool weighted = false;
    std::string out_dir = ".";
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return hex.str();
}

// Collects inputs and outputs of one run and writes the manifest last.
class Run {
public:
    Run(std::string command, const Globals& g) : command_(std::move(command)), out_dir_(g.out_dir) {}

    json config = json::object();

    // Reads an input file, recording its digest.
    std::string input(const std::string& path) {
        auto bytes = read_file(path);
        inputs_.push_back({{"path", path}, {"digest", "sha256:" + sha256_hex(bytes)}});
        return bytes;
    }

    void output(const std::string& name, const std::string& content) {
        fs::create_directories(out_dir_);
        const auto path = out_dir_ / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("cannot open '" + path.string() + "' for writing");
        f << content;
        if (!f) throw Error("write failed for '" + path.string() + "'");
        outputs_.push_back(name);
    }

    void record_output(const std::string& name) { outputs_.push_back(name); }

    void finish() {
        const std::string name = command_ + ".manifest.json";
        json m{{"command", command_}, {"config", config}, {"inputs", inputs_}, {"outputs", outputs_}};
        m["outputs"].push_back(name);
        output(name, m.dump(2) + "\n");
    }

    const fs::path& out_dir() const { return out_dir_; }

private:
    std::string command_;
    fs::path out_dir_;
    json inputs_ = json::array();
    std::vector<std::string> outputs_;
};

json globals_json(const Globals& g) {
    return {{"engagement_threshold", g.engagement_threshold},
            {"edge_threshold", g.edge_threshold},
            {"seed_domain", g.seed_domain},
            {"months", g.months},
            {"rng_seed", g.rng_seed},
            {"weighted", g.weighted}};
}

std::vector<YearMonth> months_or(const Globals& g, std::string_view fallback) {
    return parse_month_list(g.months.empty() ? fallback : std::string_view(g.months));
}

template <class Fn>
auto parse_string(const std::string& bytes, Fn parse) {
    std::istringstream in(bytes);
    return parse(in);
}

std::string sidecar_path(const std::string& graph_csv) {
    fs::path p(graph_csv);
    p.replace_extension(".json");
    return p.string();
}

struct LoadedGraph {
    InvocationGraph graph;
    EmbeddedGraph embedded;
};

std::vector<LoadedGraph> load_graphs(Run& run, const std::vector<std::string>& paths, const Spectrum& spectrum) {
    std::vector<LoadedGraph> graphs;
    for (const auto& path : paths) {
        std::istringstream edges(run.input(path));
        std::istringstream sidecar(run.input(sidecar_path(path)));
        auto g = restrict_to_scored(read_graph(edges, sidecar), spectrum);
        EmbeddedGraph eg(g.graph, spectrum);
        graphs.push_back({std::move(g), std::move(eg)});
    }
    std::stable_sort(graphs.begin(), graphs.end(),
                     [](const LoadedGraph& a, const LoadedGraph& b) { return a.graph.month < b.graph.month; });
    return graphs;
}

Spectrum load_spectrum(Run& run, const std::string& path) {
    return parse_string(run.input(path), [](std::istream& in) { return read_spectrum(in); });
}

std::vector<std::string> read_order_file(const std::string& bytes) {
    std::vector<std::string> order;
    std::istringstream in(bytes);
    csv::LineReader reader(in);
    std::string line;
    while (reader.next(line)) {
        std::string_view v = line;
        if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = csv::trim(v);
        if (!v.empty()) order.emplace_back(v);
    }
    return order;
}

template <class Fn>
std::string render_to_string(Fn fn) {
    std::ostringstream out;
    fn(out);
    return out.str();
}

// ---- subcommands ----------------------------------------------------------

struct BuildGraphArgs {
    std::string reply_pairs, cooccur, blacklist, engagement_scope = "per-month";
};

void cmd_build_graph(const Globals& g, const BuildGraphArgs& a, std::ostream& out) {
    Run run("build-graph", g);
    const auto months = parse_month_list(g.months);
    const auto pairs = parse_string(run.input(a.reply_pairs), [](std::istream& in) { return parse_reply_pairs(in); });
    const auto cooccur = parse_string(run.input(a.cooccur), [](std::istream& in) { return parse_cooccurrence(in); });
    BuildConfig cfg;
    cfg.engagement_threshold = g.engagement_threshold;
    cfg.edge_threshold = g.edge_threshold;
    cfg.seed_domain = normalize_domain(g.seed_domain);
    if (!a.blacklist.empty()) {
        cfg.blacklist = parse_string(run.input(a.blacklist), [](std::istream& in) { return parse_blacklist(in); });
    }
    if (a.engagement_scope != "per-month" && a.engagement_scope != "pooled") {
        throw PreconditionError("--engagement-scope must be per-month or pooled");
    }
    run.config = globals_json(g);
    run.config["engagement_scope"] = a.engagement_scope;
    run.config["blacklist"] = cfg.blacklist;

    const auto pooled = compute_engagement(cooccur, months);
    for (const auto m : months) {
        const auto engagement =
            a.engagement_scope == "pooled" ? pooled : compute_engagement(cooccur, std::span<const YearMonth>(&m, 1));
        const auto graph = build_invocation_graph(aggregate_raw_graph(pairs, m), m, engagement, cfg);
        const auto stem = "graph_" + m.to_string();
        run.output(stem + ".csv", render_to_string([&](std::ostream& o) { write_graph_edges(o, graph); }));
        run.output(stem + ".json", graph_sidecar_json(graph, cfg) + "\n");
        out << m.to_string() << ": " << graph.graph.node_count() << " nodes, " << graph.graph.edge_count()
            << " edges\n";
    }
    run.finish();
}

struct SpectrumArgs {
    std::string cooccur, retweets, comments, clinton_sub = "hillaryclinton", trump_sub = "The_Donald";
    std::string output = "spectrum.csv";
};

void cmd_spectrum(const Globals& g, const SpectrumArgs& a, std::ostream& out) {
    Run run("spectrum", g);
    Spectrum spectrum;
    run.config = globals_json(g);
    if (!a.comments.empty()) {
        if (!a.cooccur.empty() || !a.retweets.empty()) {
            throw PreconditionError("--comments cannot be combined with --cooccur/--retweets");
        }
        const auto comments =
            parse_string(run.input(a.comments), [](std::istream& in) { return parse_reddit_comments(in); });
        spectrum = reddit_spectrum(comments, a.clinton_sub, a.trump_sub);
        run.config["source"] = "reddit";
        run.config["clinton_sub"] = a.clinton_sub;
        run.config["trump_sub"] = a.trump_sub;
    } else {
        if (a.cooccur.empty() || a.retweets.empty()) {
            throw PreconditionError("spectrum needs --cooccur and --retweets, or --comments");
        }
        const auto months = months_or(g, "2016-01:2016-09");
        const auto cooccur =
            parse_string(run.input(a.cooccur), [](std::istream& in) { return parse_cooccurrence(in); });
        const auto totals =
            parse_string(run.input(a.retweets), [](std::istream& in) { return parse_retweet_totals(in); });
        spectrum = compute_spectrum(cooccur, totals, months);
        run.config["source"] = "twitter";
        run.config["months"] = join_months(months);
    }
    run.output(a.output, render_to_string([&](std::ostream& o) { write_spectrum(o, spectrum); }));
    out << spectrum.points.size() << " domains scored\n";
    run.finish();
}

struct GraphArgs {
    std::vector<std::string> graphs;
    std::string spectrum;
    bool svg = false;
};

void cmd_outlink(const Globals& g, const GraphArgs& a, const std::string& regression_name, std::ostream& out) {
    Run run("outlink", g);
    Regression regression;
    if (regression_name == "unweighted") {
        regression = Regression::unweighted;
    } else if (regression_name == "volume") {
        regression = Regression::volume_weighted;
    } else {
        throw PreconditionError("--regression must be unweighted or volume");
    }
    run.config = globals_json(g);
    run.config["regression"] = regression_name;
    const auto spectrum = load_spectrum(run, a.spectrum);
    const auto graphs = load_graphs(run, a.graphs, spectrum);

    std::ostringstream slopes;
    csv::Writer sw(slopes);
    sw.header({"month", "slope", "intercept", "n_points"});
    for (const auto& lg : graphs) {
        const auto month = lg.graph.month.to_string();
        const auto stats = all_outlink_stats(lg.embedded);
        std::ostringstream body;
        csv::Writer w(body);
        w.header({"domain", "score", "mu_out", "mu_global_excl", "delta_out", "out_volume"});
        svg::Series points{"delta_out", {}, {}, svg::Style::points};
        for (const auto& s : stats) {
            w.field(s.domain).field(s.score).field(s.mu_out).field(s.mu_global_excl).field(s.delta_out).field(
                s.out_volume);
            w.end_row();
            points.x.push_back(s.score);
            points.y.push_back(s.delta_out);
        }
        run.output("outlink_" + month + ".csv", body.str());
        auto fit = delta_out_slope(lg.embedded, regression);
        sw.field(month).field(fit.slope).field(fit.intercept).field(fit.n_points);
        sw.end_row();
        out << month << ": a(G) = " << csv::format_double(fit.slope) << "\n";
        if (a.svg) {
            svg::Series line{"fit", {0.0, 1.0}, {fit.intercept, fit.intercept + fit.slope}, svg::Style::line};
            run.output("outlink_" + month + ".svg",
                       svg::render({"delta_out vs score, " + month, "score", "delta_out", {points, line}}));
        }
    }
    run.output("slopes.csv", slopes.str());
    run.finish();
}

void cmd_edge_lengths(const Globals& g, const GraphArgs& a, std::size_t bins, bool unweighted, std::ostream& out) {
    Run run("edge-lengths", g);
    const auto measure = unweighted ? EdgeMeasure::count : EdgeMeasure::weight;
    run.config = globals_json(g);
    run.config["bins"] = bins;
    run.config["measure"] = to_string(measure);
    const auto spectrum = load_spectrum(run, a.spectrum);
    const auto graphs = load_graphs(run, a.graphs, spectrum);
    for (const auto& lg : graphs) {
        const auto month = lg.graph.month.to_string();
        const auto hist = edge_length_histogram(lg.embedded, bins, measure);
        std::ostringstream body;
        csv::Writer w(body);
        w.header({"bin_lo", "bin_hi", "mass"});
        svg::Series steps{"mass", {}, {}, svg::Style::steps};
        for (std::size_t i = 0; i < hist.bins(); ++i) {
            w.field(hist.bin_lo(i)).field(hist.bin_hi(i)).field(hist.mass[i]);
            w.end_row();
            steps.x.push_back(hist.bin_lo(i));
            steps.y.push_back(hist.mass[i]);
        }
        steps.x.push_back(1.0);
        run.output("edge_lengths_" + month + ".csv", body.str());
        if (a.svg) {
            run.output("edge_lengths_" + month + ".svg",
                       svg::render({"edge lengths, " + month, "length", "mass", {steps}}));
        }
        out << month << ": total mass " << csv::format_double(hist.total()) << "\n";
    }
    run.finish();
}

void cmd_crossing(const Globals& g, const GraphArgs& a, const std::string& null_name, std::size_t trials,
                  std::ostream& out) {
    Run run("crossing", g);
    const auto measure = g.weighted ? EdgeMeasure::weight : EdgeMeasure::count;
    if (null_name != "none" && null_name != "analytic" && null_name != "mc") {
        throw PreconditionError("--null must be none, analytic or mc");
    }
    if (null_name == "analytic" && measure != EdgeMeasure::weight) {
        throw PreconditionError("--null analytic needs --weighted; use --null mc for edge counts");
    }
    if (null_name == "mc" && trials == 0) throw PreconditionError("--trials must be at least 1");
    run.config = globals_json(g);
    run.config["null"] = null_name;
    run.config["measure"] = to_string(measure);
    if (null_name == "mc") run.config["trials"] = trials;
    const auto spectrum = load_spectrum(run, a.spectrum);
    const auto graphs = load_graphs(run, a.graphs, spectrum);

    for (const auto& lg : graphs) {
        const auto month = lg.graph.month.to_string();
        const auto profile = crossing_profile(lg.embedded, measure);
        std::optional<NullCrossingProfile> null;
        if (null_name == "analytic") null = expected_crossing_analytic(lg.embedded);
        if (null_name == "mc") null = expected_crossing_monte_carlo(lg.embedded, measure, trials, g.rng_seed);

        std::ostringstream body, se_body;
        csv::Writer w(body), se(se_body);
        w.header({"y_lo", "y_hi", "f_right", "f_left", "f_right_null", "f_left_null"});
        se.header({"y_lo", "y_hi", "se_right_null", "se_left_null"});
        auto row = [&](double lo, double hi, double r, double l, double nr, double nl, double ser, double sel) {
            w.field(lo).field(hi).field(r).field(l);
            if (null) {
                w.field(nr).field(nl);
            } else {
                w.field(std::string_view{}).field(std::string_view{});
            }
            w.end_row();
            se.field(lo).field(hi).field(ser).field(sel);
            se.end_row();
        };
        const auto& bp = profile.breakpoints;
        // Point rows (y_lo == y_hi) carry the values exactly at a node score.
        if (!bp.empty() && bp.front() > 0.0) row(0.0, bp.front(), 0, 0, 0, 0, 0, 0);
        for (std::size_t j = 0; j < bp.size(); ++j) {
            row(bp[j], bp[j], profile.point_right[j], profile.point_left[j],
                null ? null->mean.point_right[j] : 0.0, null ? null->mean.point_left[j] : 0.0,
                null ? null->se_point_right[j] : 0.0, null ? null->se_point_left[j] : 0.0);
            if (j + 1 < bp.size()) {
                row(bp[j], bp[j + 1], profile.f_right[j], profile.f_left[j], null ? null->mean.f_right[j] : 0.0,
                    null ? null->mean.f_left[j] : 0.0, null ? null->se_right[j] : 0.0,
                    null ? null->se_left[j] : 0.0);
            }
        }
        if (!bp.empty() && bp.back() < 1.0) row(bp.back(), 1.0, 0, 0, 0, 0, 0, 0);
        run.output("crossing_" + month + ".csv", body.str());
        if (null_name == "mc") run.output("crossing_se_" + month + ".csv", se_body.str());

        if (a.svg && bp.size() >= 2) {
            std::vector<svg::Series> series;
            auto steps = [&](std::string label, const std::vector<double>& y) {
                series.push_back({std::move(label), bp, y, svg::Style::steps});
            };
            steps("f_right", profile.f_right);
            steps("f_left", profile.f_left);
            if (null) {
                steps("f_right null", null->mean.f_right);
                steps("f_left null", null->mean.f_left);
            }
            run.output("crossing_" + month + ".svg",
                       svg::render({"crossings, " + month, "y", "crossing " + std::string(to_string(measure)),
                                    std::move(series)}));
        }
        out << month << ": " << bp.size() << " breakpoints\n";
    }
    run.finish();
}

void cmd_asymmetry(const Globals& g, const GraphArgs& a, bool unweighted, std::ostream& out) {
    Run run("asymmetry", g);
    const auto measure = unweighted ? EdgeMeasure::count : EdgeMeasure::weight;
    run.config = globals_json(g);
    run.config["measure"] = to_string(measure);
    const auto spectrum = load_spectrum(run, a.spectrum);
    const auto graphs = load_graphs(run, a.graphs, spectrum);
    std::ostringstream slopes;
    csv::Writer sw(slopes);
    sw.header({"month", "slope", "intercept", "n_points"});
    for (const auto& lg : graphs) {
        const auto month = lg.graph.month.to_string();
        const auto result = asymmetry(lg.embedded, measure);
        std::ostringstream body;
        csv::Writer w(body);
        w.header({"domain", "score", "in_weight", "out_weight", "r"});
        svg::Series points{"r", {}, {}, svg::Style::points};
        for (const auto& s : result.stats) {
            w.field(s.domain).field(s.score).field(s.in_weight).field(s.out_weight).field(s.r);
            w.end_row();
            points.x.push_back(s.score);
            points.y.push_back(s.r);
        }
        run.output("asymmetry_" + month + ".csv", body.str());
        if (result.fit) {
            sw.field(month).field(result.fit->slope).field(result.fit->intercept).field(result.fit->n_points);
            sw.end_row();
            out << month << ": r slope = " << csv::format_double(result.fit->slope) << "\n";
        } else {
            out << month << ": too few domains for a slope\n";
        }
        if (a.svg) {
            run.output("asymmetry_" + month + ".svg",
                       svg::render({"in/out asymmetry, " + month, "score", "r", {points}}));
        }
    }
    run.output("asymmetry_slopes.csv", slopes.str());
    run.finish();
}

struct AlignArgs {
    std::string target, source, norm = "l2";
    std::size_t trials = 1000;
    bool svg = false;
};

void cmd_align(const Globals& g, const AlignArgs& a, std::ostream& out) {
    Run run("align", g);
    const auto norm = parse_norm(a.norm);
    run.config = globals_json(g);
    run.config["norm"] = a.norm;
    run.config["trials"] = a.trials;
    const auto target = load_spectrum(run, a.target);
    const auto source = load_spectrum(run, a.source);
    const auto result = align_spectra(target, source, norm);

    std::ostringstream body;
    csv::Writer w(body);
    w.header({"domain", "p_c_target", "p_t_target", "p_c_scaled", "p_t_scaled"});
    svg::Series tgt{"target", {}, {}, svg::Style::points}, scaled{"scaled source", {}, {}, svg::Style::points};
    for (const auto& [domain, tp] : target.points) {
        const auto* sp = source.find(domain);
        if (!sp) continue;
        const double c = result.scale_a * sp->p_c, t = result.scale_b * sp->p_t;
        w.field(domain).field(tp.p_c).field(tp.p_t).field(c).field(t);
        w.end_row();
        tgt.x.push_back(tp.p_c);
        tgt.y.push_back(tp.p_t);
        scaled.x.push_back(c);
        scaled.y.push_back(t);
    }
    run.output("alignment.csv", body.str());

    json summary{{"norm", a.norm},
                 {"scale_a", result.scale_a},
                 {"scale_b", result.scale_b},
                 {"objective", result.objective},
                 {"shared_domains", result.residuals.size()}};
    if (a.trials > 0) {
        const auto base = shuffled_alignment_baseline(target, source, norm, a.trials, g.rng_seed);
        auto nulls = base.null_objectives;
        std::sort(nulls.begin(), nulls.end());
        summary["baseline"] = {{"trials", a.trials},
                               {"quantile", base.quantile},
                               {"null_min", nulls.front()},
                               {"null_median", nulls[nulls.size() / 2]}};
        out << "shuffled baseline quantile " << csv::format_double(base.quantile) << "\n";
    }
    run.output("alignment.json", summary.dump(2) + "\n");
    if (a.svg) {
        run.output("alignment.svg", svg::render({"aligned spectra", "p_c", "p_t", {tgt, scaled}}));
    }
    out << "a = " << csv::format_double(result.scale_a) << ", b = " << csv::format_double(result.scale_b)
        << ", objective = " << csv::format_double(result.objective) << "\n";
    run.finish();
}

struct RankArgs {
    std::string order_a = std::string(INVOGRAPH_DATA_DIR) + "/table1/twitter_order.txt";
    std::string order_b = std::string(INVOGRAPH_DATA_DIR) + "/table1/reddit_order.txt";
    std::string spectrum_a, spectrum_b;
    std::size_t trials = 10000;
};

void cmd_rank_compare(const Globals& g, const RankArgs& a, std::ostream& out) {
    Run run("rank-compare", g);
    run.config = globals_json(g);
    run.config["trials"] = a.trials;
    std::vector<std::string> order_a, order_b;
    if (!a.spectrum_a.empty() || !a.spectrum_b.empty()) {
        if (a.spectrum_a.empty() || a.spectrum_b.empty()) {
            throw PreconditionError("--spectrum-a and --spectrum-b go together");
        }
        const auto sa = load_spectrum(run, a.spectrum_a);
        const auto sb = load_spectrum(run, a.spectrum_b);
        std::vector<std::string> shared;
        for (const auto& [domain, p] : sa.points) {
            if (sb.find(domain)) shared.push_back(domain);
        }
        order_a = rank_by_score(sa, shared);
        order_b = rank_by_score(sb, shared);
        run.config["source"] = "spectra";
    } else {
        order_a = read_order_file(run.input(a.order_a));
        order_b = read_order_file(run.input(a.order_b));
        run.config["source"] = "orders";
    }
    const auto test = permutation_test_spearman(order_a, order_b, a.trials, g.rng_seed);

    std::ostringstream body;
    csv::Writer w(body);
    w.header({"rank", "domain_a", "domain_b"});
    for (std::size_t i = 0; i < order_a.size(); ++i) {
        w.field(i + 1).field(order_a[i]).field(order_b[i]);
        w.end_row();
    }
    run.output("rank_compare.csv", body.str());
    json summary{{"n", order_a.size()},
                 {"rho", test.observed},
                 {"trials", test.trials},
                 {"null_max", test.null_max},
                 {"fraction_at_least", test.fraction_at_least}};
    run.output("rank_compare.json", summary.dump(2) + "\n");
    out << "rho = " << csv::format_double(test.observed) << "\n"
        << "null max over " << test.trials << " shuffles = " << csv::format_double(test.null_max) << "\n"
        << "fraction of shuffles with rho >= observed = " << csv::format_double(test.fraction_at_least) << "\n";
    run.finish();
}

struct TrendArgs {
    std::string comments, clinton_sub = "hillaryclinton", trump_sub = "The_Donald", forum = "politics";
    int window_days = 30, step_days = 1;
    bool exclude_self_replies = false;
    std::size_t trials = 100;
    std::string scope = "global";
    bool svg = false;
};

void cmd_user_trends(const Globals& g, const TrendArgs& a, std::ostream& out) {
    Run run("user-trends", g);
    ShuffleScope scope;
    if (a.scope == "global") {
        scope = ShuffleScope::global;
    } else if (a.scope == "monthly") {
        scope = ShuffleScope::monthly;
    } else {
        throw PreconditionError("--scope must be global or monthly");
    }
    run.config = globals_json(g);
    run.config.update({{"clinton_sub", a.clinton_sub},
                       {"trump_sub", a.trump_sub},
                       {"forum", a.forum},
                       {"window_days", a.window_days},
                       {"step_days", a.step_days},
                       {"exclude_self_replies", a.exclude_self_replies},
                       {"trials", a.trials},
                       {"scope", a.scope}});
    const auto comments =
        parse_string(run.input(a.comments), [](std::istream& in) { return parse_reddit_comments(in); });
    const auto users = classify_users(comments, a.clinton_sub, a.trump_sub);
    WindowConfig cfg{a.forum, a.window_days, a.step_days, a.exclude_self_replies};
    const auto windows = interaction_windows(comments, users, cfg);
    const auto series = cross_cutting_ratio(windows);

    std::ostringstream counts;
    csv::Writer cw(counts);
    cw.header({"end_date", "n_cc", "n_ct", "n_tc", "n_tt"});
    for (const auto& w : windows) {
        cw.field(format_day(w.end_day)).field(w.n_cc).field(w.n_ct).field(w.n_tc).field(w.n_tt);
        cw.end_row();
    }
    run.output("interactions.csv", counts.str());
    std::ostringstream ratios;
    csv::Writer rw(ratios);
    rw.header({"end_date", "ratio"});
    svg::Series line{"ratio", {}, {}, svg::Style::line};
    for (const auto& p : series) {
        rw.field(format_day(p.end_day)).field(p.ratio);
        rw.end_row();
        line.x.push_back(static_cast<double>(p.end_day));
        line.y.push_back(p.ratio);
    }
    run.output("cross_cutting_ratio.csv", ratios.str());

    json trend{{"clinton_users", users.clinton.size()}, {"trump_users", users.trump.size()}};
    if (a.trials > 0) {
        const auto sig = trend_significance(series, comments, users, cfg, scope, a.trials, g.rng_seed);
        trend.update({{"observed_slope", sig.observed_slope},
                      {"min_null_slope", sig.min_null_slope},
                      {"significant", sig.significant},
                      {"null_slopes", sig.null_slopes}});
        out << "slope = " << csv::format_double(sig.observed_slope)
            << " per day, min null = " << csv::format_double(sig.min_null_slope)
            << (sig.significant ? " (significant)" : " (not significant)") << "\n";
    } else {
        const double slope = ratio_slope(series);
        trend["observed_slope"] = slope;
        out << "slope = " << csv::format_double(slope) << " per day\n";
    }
    run.output("trend.json", trend.dump(2) + "\n");
    if (a.svg) {
        run.output("cross_cutting_ratio.svg",
                   svg::render({"cross-cutting ratio", "day since epoch", "ratio", {line}}));
    }
    run.finish();
}

struct SynthArgs {
    SynthConfig cfg;
    double homophily_end = 0.0;
    bool vary_homophily = false;
    bool no_noise = false;
    bool comments = false;
    CommentSynthConfig comment_cfg;
};

void cmd_synth(const Globals& g, SynthArgs a, std::ostream& out) {
    Run run("synth", g);
    a.cfg.months = months_or(g, "2016-01");
    a.cfg.rng_seed = g.rng_seed;
    a.cfg.seed_domain = g.seed_domain;
    a.cfg.include_noise = !a.no_noise;
    if (a.vary_homophily) a.cfg.homophily_end = a.homophily_end;
    run.config = globals_json(g);
    run.config.update({{"n_domains", a.cfg.n_domains},
                       {"homophily", a.cfg.homophily},
                       {"right_bias", a.cfg.right_bias},
                       {"volume", a.cfg.volume},
                       {"include_noise", a.cfg.include_noise},
                       {"comments", a.comments}});
    if (a.cfg.homophily_end) run.config["homophily_end"] = *a.cfg.homophily_end;
    const auto data = generate(a.cfg);
    std::optional<std::vector<RedditComment>> comments;
    if (a.comments) {
        a.comment_cfg.rng_seed = derive_seed(g.rng_seed, 1);
        a.comment_cfg.domain_scores = data.ground_truth;
        run.config["comment_days"] = a.comment_cfg.days;
        run.config["comments_per_day"] = a.comment_cfg.comments_per_day;
        run.config["cross_share_start"] = a.comment_cfg.cross_share_start;
        run.config["cross_share_end"] = a.comment_cfg.cross_share_end;
        comments = generate_comments(a.comment_cfg);
    }
    const auto files = write_synth_files(run.out_dir(), data, comments ? &*comments : nullptr);
    for (const auto& f : files.written) run.record_output(f.generic_string());
    out << data.reply_pairs.size() << " reply-pair rows, " << data.ground_truth.size() << " planted domains";
    if (comments) out << ", " << comments->size() << " comments";
    out << "\n";
    run.finish();
}

// Adds the graph-input options shared by the embedded-graph commands.
void add_graph_options(CLI::App* sub, GraphArgs& a) {
    sub->add_option("--graph", a.graphs, "Graph edge CSV (sidecar JSON alongside)")->required();
    sub->add_option("--spectrum", a.spectrum, "Spectrum CSV")->required();
    sub->add_flag("--svg", a.svg, "Also write an SVG plot");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invocation graphs over web domains on a political spectrum", "invograph"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--engagement-threshold", g.engagement_threshold, "Minimum political engagement p")
        ->capture_default_str();
    app.add_option("--edge-threshold", g.edge_threshold, "Minimum edge weight W for reachability")
        ->capture_default_str();
    app.add_option("--seed-domain", g.seed_domain, "BFS seed domain")->capture_default_str();
    app.add_option("--months", g.months, "Months, e.g. 2016-01:2016-09 or 2016-01,2016-10");
    app.add_option("--rng-seed", g.rng_seed, "Seed for every randomized step")->capture_default_str();
    app.add_flag("--weighted", g.weighted, "Measure crossings by edge weight instead of edge count");
    app.add_option("--out-dir", g.out_dir, "Directory for outputs")->capture_default_str();

    std::function<void()> action;

    BuildGraphArgs build;
    auto* build_cmd = app.add_subcommand("build-graph", "Filter reply pairs into monthly invocation graphs");
    build_cmd->add_option("--reply-pairs", build.reply_pairs, "Reply-pair CSV")->required();
    build_cmd->add_option("--cooccur", build.cooccur, "Co-occurrence CSV")->required();
    build_cmd->add_option("--blacklist", build.blacklist, "Blacklist file (default: built-in list)");
    build_cmd->add_option("--engagement-scope", build.engagement_scope, "per-month or pooled")
        ->capture_default_str();
    build_cmd->callback([&] {
        if (g.months.empty()) throw PreconditionError("build-graph needs --months");
        cmd_build_graph(g, build, out);
    });

    SpectrumArgs spec;
    auto* spec_cmd = app.add_subcommand("spectrum", "Score domains from co-occurrence or Reddit comments");
    spec_cmd->add_option("--cooccur", spec.cooccur, "Co-occurrence CSV");
    spec_cmd->add_option("--retweets", spec.retweets, "Retweet totals CSV");
    spec_cmd->add_option("--comments", spec.comments, "Reddit JSON-lines");
    spec_cmd->add_option("--clinton-sub", spec.clinton_sub)->capture_default_str();
    spec_cmd->add_option("--trump-sub", spec.trump_sub)->capture_default_str();
    spec_cmd->add_option("--output", spec.output, "Output file name")->capture_default_str();
    spec_cmd->callback([&] { cmd_spectrum(g, spec, out); });

    GraphArgs outlink_args;
    std::string regression = "unweighted";
    auto* outlink_cmd = app.add_subcommand("outlink", "delta_out per domain and the monthly slope a(G)");
    add_graph_options(outlink_cmd, outlink_args);
    outlink_cmd->add_option("--regression", regression, "unweighted or volume")->capture_default_str();
    outlink_cmd->callback([&] { cmd_outlink(g, outlink_args, regression, out); });

    GraphArgs length_args;
    std::size_t bins = 20;
    bool length_unweighted = false;
    auto* length_cmd = app.add_subcommand("edge-lengths", "Edge-length histograms");
    add_graph_options(length_cmd, length_args);
    length_cmd->add_option("--bins", bins)->capture_default_str();
    length_cmd->add_flag("--unweighted", length_unweighted, "Count edges instead of weighting them");
    length_cmd->callback([&] { cmd_edge_lengths(g, length_args, bins, length_unweighted, out); });

    GraphArgs crossing_args;
    std::string null_name = "none";
    std::size_t crossing_trials = 1000;
    auto* crossing_cmd = app.add_subcommand("crossing", "Crossing profiles with an optional rewired baseline");
    add_graph_options(crossing_cmd, crossing_args);
    crossing_cmd->add_option("--null", null_name, "none, analytic or mc")->capture_default_str();
    crossing_cmd->add_option("--trials", crossing_trials, "Rewires for --null mc")->capture_default_str();
    crossing_cmd->callback([&] { cmd_crossing(g, crossing_args, null_name, crossing_trials, out); });

    GraphArgs asym_args;
    bool asym_unweighted = false;
    auto* asym_cmd = app.add_subcommand("asymmetry", "In/out asymmetry r(x) against score");
    add_graph_options(asym_cmd, asym_args);
    asym_cmd->add_flag("--unweighted", asym_unweighted, "Use plain degrees");
    asym_cmd->callback([&] { cmd_asymmetry(g, asym_args, asym_unweighted, out); });

    AlignArgs align_args;
    auto* align_cmd = app.add_subcommand("align", "Scale one spectrum's axes onto another's");
    align_cmd->add_option("--target", align_args.target, "Target spectrum CSV")->required();
    align_cmd->add_option("--source", align_args.source, "Spectrum CSV to rescale")->required();
    align_cmd->add_option("--norm", align_args.norm, "l1 or l2")->capture_default_str();
    align_cmd->add_option("--trials", align_args.trials, "Shuffled baseline trials (0 to skip)")
        ->capture_default_str();
    align_cmd->add_flag("--svg", align_args.svg, "Also write an SVG plot");
    align_cmd->callback([&] { cmd_align(g, align_args, out); });

    RankArgs rank_args;
    auto* rank_cmd = app.add_subcommand("rank-compare", "Spearman correlation of two orderings");
    rank_cmd->add_option("--order-a", rank_args.order_a, "Ordering file, one domain per line")
        ->capture_default_str();
    rank_cmd->add_option("--order-b", rank_args.order_b)->capture_default_str();
    rank_cmd->add_option("--spectrum-a", rank_args.spectrum_a, "Rank shared domains of two spectra instead");
    rank_cmd->add_option("--spectrum-b", rank_args.spectrum_b);
    rank_cmd->add_option("--trials", rank_args.trials, "Permutation shuffles")->capture_default_str();
    rank_cmd->callback([&] { cmd_rank_compare(g, rank_args, out); });

    TrendArgs trend_args;
    auto* trend_cmd = app.add_subcommand("user-trends", "Interaction windows and the cross-cutting trend");
    trend_cmd->add_option("--comments", trend_args.comments, "Reddit JSON-lines")->required();
    trend_cmd->add_option("--clinton-sub", trend_args.clinton_sub)->capture_default_str();
    trend_cmd->add_option("--trump-sub", trend_args.trump_sub)->capture_default_str();
    trend_cmd->add_option("--forum", trend_args.forum, "Subreddit whose replies are counted")
        ->capture_default_str();
    trend_cmd->add_option("--window-days", trend_args.window_days)->capture_default_str();
    trend_cmd->add_option("--step-days", trend_args.step_days)->capture_default_str();
    trend_cmd->add_flag("--exclude-self-replies", trend_args.exclude_self_replies);
    trend_cmd->add_option("--trials", trend_args.trials, "User-shuffle trials (0 to skip)")->capture_default_str();
    trend_cmd->add_option("--scope", trend_args.scope, "global or monthly")->capture_default_str();
    trend_cmd->add_flag("--svg", trend_args.svg, "Also write an SVG plot");
    trend_cmd->callback([&] { cmd_user_trends(g, trend_args, out); });

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset with planted structure");
    synth_cmd->add_option("--n-domains", synth_args.cfg.n_domains)->capture_default_str();
    synth_cmd->add_option("--homophily", synth_args.cfg.homophily, "lambda; negative for cross-linking")
        ->capture_default_str();
    synth_cmd->add_option("--homophily-end", synth_args.homophily_end, "lambda in the last month")
        ->each([&](const std::string&) { synth_args.vary_homophily = true; });
    synth_cmd->add_option("--right-bias", synth_args.cfg.right_bias)->capture_default_str();
    synth_cmd->add_option("--volume", synth_args.cfg.volume, "Mean edge weight")->capture_default_str();
    synth_cmd->add_flag("--no-noise", synth_args.no_noise, "Skip the blacklisted hub and other filter bait");
    synth_cmd->add_flag("--comments", synth_args.comments, "Also write comments.jsonl");
    synth_cmd->add_option("--comment-days", synth_args.comment_cfg.days)->capture_default_str();
    synth_cmd->add_option("--comments-per-day", synth_args.comment_cfg.comments_per_day)->capture_default_str();
    synth_cmd->add_option("--cross-share-start", synth_args.comment_cfg.cross_share_start)->capture_default_str();
    synth_cmd->add_option("--cross-share-end", synth_args.comment_cfg.cross_share_end)->capture_default_str();
    synth_cmd->callback([&] { cmd_synth(g, synth_args, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "invograph: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invograph::ParseError& e) {
        err << "invograph: parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "invograph: precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DegenerateDataError& e) {
        err << "invograph: degenerate data: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "invograph: io error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace invograph::cli
