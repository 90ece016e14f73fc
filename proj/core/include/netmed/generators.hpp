#pragma once

// Generative models for triplets with known ground truth.
//
// Every model visits node pairs in row-major order (i < j) and decides each
// pair independently. Per pair, random numbers are consumed in this order:
//
//   interpolated only: one draw selecting the suppression rule (u < mu)
//   A-draw, B-draw, C-draw
//   suppression rule only: one XOR draw, consumed whether or not it is used
//
// Rules per pair:
//   uncorrelated  A, B, C ~ Bernoulli(p) independently
//   mediated      as above, then C = 1 forces A = B = 1
//   suppression   as uncorrelated, then if exactly one of A, C is set,
//                 B is also set with probability q

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "netmed/netcore.hpp"

namespace netmed {

enum class Model { kUncorrelated, kMediated, kSuppression, kInterpolated };

std::string_view to_string(Model model);
// Accepts "uncorrelated", "mediated", "suppression", "interpolated".
Model parse_model(std::string_view name);

struct GenParams {
  NodeIndex n_nodes = 50;
  double p = 0.5;
  double q = 1.0;
  double mu = 0.0;  // weight of the suppression rule in the interpolated model
  Model model = Model::kUncorrelated;

  // Throws InvalidArgument.
  void validate() const;
};

// Each throws InvalidArgument unless params.model matches.
Triplet gen_uncorrelated(const GenParams& params, std::uint64_t seed);
Triplet gen_mediated(const GenParams& params, std::uint64_t seed);
Triplet gen_suppression(const GenParams& params, std::uint64_t seed);
Triplet gen_interpolated(const GenParams& params, std::uint64_t seed);

// Dispatches on params.model.
Triplet generate(const GenParams& params, std::uint64_t seed);

// Exact per-pair membership law of a model and the expected measures derived
// from it as ratios of expected counts (the large-N limit).
struct PairExpectation {
  // joint[(a << 2) | (b << 1) | c] = P(A = a, B = b, C = c) for one pair.
  std::array<double, 8> joint{};

  double p_in_a = 0.0;
  double p_in_b = 0.0;
  double p_in_c = 0.0;
  double p_ab = 0.0;                // P(a ∩ b)
  double p_union_ab = 0.0;          // P(a ∪ b)
  double p_ab_minus_c = 0.0;        // P((a ∩ b) \ c)
  double p_union_ab_minus_c = 0.0;  // P((a ∪ b) \ c)

  double exp_nj = 0.0;
  double exp_nj_partial = 0.0;
  double exp_delta = 0.0;

  // Residual densities: a_p = a \ c, c_p = c \ a, r = b \ (a ∪ c).
  double exp_ap = 0.0;
  double exp_cp = 0.0;
  double exp_r = 0.0;
};

// Throws DegenerateDenominator when P(a ∪ b) or P((a ∪ b) \ c) is zero.
PairExpectation pair_expectation(const GenParams& params);

}  // namespace netmed
