#include "invograph/align.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "invograph/error.hpp"
#include "invograph/kernels.hpp"
#include "invograph/rng.hpp"

namespace invograph {

std::string_view to_string(Norm norm) { return norm == Norm::l1 ? "l1" : "l2"; }

Norm parse_norm(std::string_view text) {
    if (text == "l1") return Norm::l1;
    if (text == "l2") return Norm::l2;
    throw PreconditionError("unknown norm '" + std::string(text) + "' (expected l1 or l2)");
}

namespace {

void check_pair(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw PreconditionError("scale fit: u and v differ in length");
    if (u.empty()) throw PreconditionError("scale fit: empty input");
}

}  // namespace

double solve_l2_scale(std::span<const double> u, std::span<const double> v) {
    check_pair(u, v);
    const double vv = kernels::dot(v, v);
    if (vv == 0.0) throw PreconditionError("l2 scale fit: v is the zero vector");
    return kernels::dot(v, u) / vv;
}

double solve_l1_scale(std::span<const double> u, std::span<const double> v) {
    check_pair(u, v);
    struct Term {
        double ratio;
        double weight;
    };
    std::vector<Term> terms;
    terms.reserve(v.size());
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) throw PreconditionError("l1 scale fit: v must be non-negative");
        if (v[i] == 0.0) continue;
        terms.push_back({u[i] / v[i], v[i]});
        total += v[i];
    }
    if (terms.empty()) throw PreconditionError("l1 scale fit: every v_i is zero");
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.ratio < b.ratio; });
    double running = 0.0;
    for (const auto& t : terms) {
        running += t.weight;
        if (2.0 * running >= total) return t.ratio;
    }
    return terms.back().ratio;
}

double scale_objective(std::span<const double> u, std::span<const double> v, double c, Norm norm) {
    return norm == Norm::l1 ? kernels::sum_abs_residual(u, v, c) : kernels::sum_sq_residual(u, v, c);
}

namespace {

struct Columns {
    std::vector<std::string> domains;
    std::vector<double> target_c, target_t, source_c, source_t;
};

Columns shared_columns(const Spectrum& target, const Spectrum& source) {
    Columns cols;
    for (const auto& [domain, tp] : target.points) {
        const auto* sp = source.find(domain);
        if (!sp) continue;
        cols.domains.push_back(domain);
        cols.target_c.push_back(tp.p_c);
        cols.target_t.push_back(tp.p_t);
        cols.source_c.push_back(sp->p_c);
        cols.source_t.push_back(sp->p_t);
    }
    if (cols.domains.empty()) throw PreconditionError("spectra share no domain; nothing to align");
    return cols;
}

double solve(std::span<const double> u, std::span<const double> v, Norm norm) {
    return norm == Norm::l1 ? solve_l1_scale(u, v) : solve_l2_scale(u, v);
}

}  // namespace

AlignmentResult align_spectra(const Spectrum& target, const Spectrum& source, Norm norm) {
    const auto cols = shared_columns(target, source);
    AlignmentResult r;
    r.norm = norm;
    r.scale_a = solve(cols.target_c, cols.source_c, norm);
    r.scale_b = solve(cols.target_t, cols.source_t, norm);
    r.objective = scale_objective(cols.target_c, cols.source_c, r.scale_a, norm) +
                  scale_objective(cols.target_t, cols.source_t, r.scale_b, norm);
    r.residuals.reserve(cols.domains.size());
    for (std::size_t i = 0; i < cols.domains.size(); ++i) {
        r.residuals.push_back({cols.domains[i], cols.target_c[i] - r.scale_a * cols.source_c[i],
                               cols.target_t[i] - r.scale_b * cols.source_t[i]});
    }
    return r;
}

double alignment_objective(const Spectrum& target, const Spectrum& source, double scale_a, double scale_b,
                           Norm norm) {
    const auto cols = shared_columns(target, source);
    return scale_objective(cols.target_c, cols.source_c, scale_a, norm) +
           scale_objective(cols.target_t, cols.source_t, scale_b, norm);
}

RankPairs rank_pairs(std::span<const std::string> order_a, std::span<const std::string> order_b) {
    if (order_a.size() != order_b.size()) {
        throw PreconditionError("rankings have different lengths (" + std::to_string(order_a.size()) + " vs " +
                                std::to_string(order_b.size()) + ")");
    }
    std::unordered_map<std::string_view, std::int32_t> pos_b;
    for (std::size_t i = 0; i < order_b.size(); ++i) {
        if (!pos_b.emplace(order_b[i], static_cast<std::int32_t>(i)).second) {
            throw PreconditionError("ranking lists '" + order_b[i] + "' twice");
        }
    }
    RankPairs pairs;
    pairs.rank_a.reserve(order_a.size());
    pairs.rank_b.reserve(order_a.size());
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < order_a.size(); ++i) {
        if (!seen.insert(order_a[i]).second) throw PreconditionError("ranking lists '" + order_a[i] + "' twice");
        auto it = pos_b.find(order_a[i]);
        if (it == pos_b.end()) throw PreconditionError("'" + order_a[i] + "' is missing from the second ranking");
        pairs.rank_a.push_back(static_cast<std::int32_t>(i));
        pairs.rank_b.push_back(it->second);
    }
    return pairs;
}

double spearman_from_sum_sq(std::int64_t sum_sq, std::size_t n) {
    if (n < 2) return 1.0;
    const double nn = static_cast<double>(n);
    return 1.0 - 6.0 * static_cast<double>(sum_sq) / (nn * (nn * nn - 1.0));
}

double spearman(std::span<const std::string> order_a, std::span<const std::string> order_b) {
    const auto pairs = rank_pairs(order_a, order_b);
    return spearman_from_sum_sq(kernels::sum_sq_diff(pairs.rank_a, pairs.rank_b), pairs.rank_a.size());
}

ShuffledAlignmentBaseline shuffled_alignment_baseline(const Spectrum& spec_a, const Spectrum& spec_b, Norm norm,
                                                      std::size_t trials, std::uint64_t rng_seed) {
    if (trials == 0) throw PreconditionError("shuffled baseline needs at least one trial");
    auto cols = shared_columns(spec_a, spec_b);
    ShuffledAlignmentBaseline out;
    out.real_objective = align_spectra(spec_a, spec_b, norm).objective;

    std::vector<std::size_t> perm(cols.domains.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<double> vc(perm.size()), vt(perm.size());
    Rng rng(rng_seed);
    out.null_objectives.reserve(trials);
    std::size_t below = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        rng.shuffle(std::span<std::size_t>(perm));
        for (std::size_t i = 0; i < perm.size(); ++i) {
            vc[i] = cols.source_c[perm[i]];
            vt[i] = cols.source_t[perm[i]];
        }
        const double a = solve(cols.target_c, vc, norm);
        const double b = solve(cols.target_t, vt, norm);
        const double obj = scale_objective(cols.target_c, vc, a, norm) + scale_objective(cols.target_t, vt, b, norm);
        out.null_objectives.push_back(obj);
        if (obj < out.real_objective) ++below;
    }
    out.quantile = static_cast<double>(below) / static_cast<double>(trials);
    return out;
}

}  // namespace invograph
