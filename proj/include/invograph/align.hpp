#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invograph/spectrum.hpp"

namespace invograph {

enum class Norm { l1, l2 };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

// argmin_c sum (u_i - c v_i)^2 = (v.u) / (v.v). Throws PreconditionError if
// the lengths differ, are zero, or v is all zeros.
double solve_l2_scale(std::span<const double> u, std::span<const double> v);

// argmin_c sum |u_i - c v_i| for v >= 0. Pairs with v_i = 0 are constant in c
// and ignored. Sorting by u_i / v_i, the answer is the ratio at the lower
// weighted median of v: the first position where the running sum of v reaches
// half the total. Throws PreconditionError on negative v or when no v_i > 0.
double solve_l1_scale(std::span<const double> u, std::span<const double> v);

double scale_objective(std::span<const double> u, std::span<const double> v, double c, Norm norm);

struct DomainResidual {
    std::string domain;
    double d_c = 0.0;  // target p_c - a * source p_c
    double d_t = 0.0;  // target p_t - b * source p_t
};

struct AlignmentResult {
    double scale_a = 1.0;  // Clinton axis
    double scale_b = 1.0;  // Trump axis
    double objective = 0.0;
    Norm norm = Norm::l2;
    std::vector<DomainResidual> residuals;  // sorted by domain
};

// Scales the source spectrum's axes onto the target's, over shared domains.
// The two axes are solved independently. Throws PreconditionError when the
// spectra share no domain.
AlignmentResult align_spectra(const Spectrum& target, const Spectrum& source, Norm norm);

// Objective of the full two-axis problem at given factors.
double alignment_objective(const Spectrum& target, const Spectrum& source, double scale_a,
                           double scale_b, Norm norm);

// Position of each item of `order_a` within `order_b` (0-based), paired with
// its position in `order_a`. Throws PreconditionError on duplicates or when the
// item sets differ.
struct RankPairs {
    std::vector<std::int32_t> rank_a;
    std::vector<std::int32_t> rank_b;
};
RankPairs rank_pairs(std::span<const std::string> order_a, std::span<const std::string> order_b);

// Spearman rank correlation 1 - 6 sum d^2 / (n (n^2 - 1)) between two
// orderings of the same items. A single item correlates perfectly (1.0).
double spearman(std::span<const std::string> order_a, std::span<const std::string> order_b);
double spearman_from_sum_sq(std::int64_t sum_sq, std::size_t n);

struct ShuffledAlignmentBaseline {
    double real_objective = 0.0;
    std::vector<double> null_objectives;
    double quantile = 0.0;  // share of null objectives strictly below the real one
};

// Null alignments permute which shared domain each of spec_b's points belongs to.
ShuffledAlignmentBaseline shuffled_alignment_baseline(const Spectrum& spec_a, const Spectrum& spec_b,
                                                      Norm norm, std::size_t trials,
                                                      std::uint64_t rng_seed);

}  // namespace invograph
