#include "netmed/generators.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "netmed/errors.hpp"
#include "netmed/random.hpp"

namespace netmed {
namespace {

struct Membership {
  bool a = false;
  bool b = false;
  bool c = false;
};

Membership uncorrelated_rule(double p, Rng& rng) {
  Membership m;
  m.a = rng.bernoulli(p);
  m.b = rng.bernoulli(p);
  m.c = rng.bernoulli(p);
  return m;
}

Membership mediated_rule(double p, Rng& rng) {
  Membership m = uncorrelated_rule(p, rng);
  if (m.c) m.a = m.b = true;
  return m;
}

Membership suppression_rule(double p, double q, Rng& rng) {
  Membership m = uncorrelated_rule(p, rng);
  const bool xor_draw = rng.bernoulli(q);
  if (m.a != m.c && xor_draw) m.b = true;
  return m;
}

template <typename Rule>
Triplet build(const GenParams& params, std::uint64_t seed, Rule rule) {
  params.validate();
  const NodeUniverse universe(params.n_nodes);
  Rng rng(seed);
  std::vector<PairIndex> a, b, c;
  for (PairIndex k = 0; k < universe.pair_count(); ++k) {
    const Membership m = rule(rng);
    if (m.a) a.push_back(k);
    if (m.b) b.push_back(k);
    if (m.c) c.push_back(k);
  }
  return Triplet(EdgeSet::from_sorted_unique(universe, std::move(a)),
                 EdgeSet::from_sorted_unique(universe, std::move(b)),
                 EdgeSet::from_sorted_unique(universe, std::move(c)));
}

void require_model(const GenParams& params, Model expected) {
  if (params.model != expected) {
    throw InvalidArgument("generator for '" + std::string(to_string(expected)) +
                          "' called with model '" +
                          std::string(to_string(params.model)) + "'");
  }
}

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

using Joint = std::array<double, 8>;

constexpr std::size_t slot(bool a, bool b, bool c) {
  return (static_cast<std::size_t>(a) << 2) | (static_cast<std::size_t>(b) << 1) |
         static_cast<std::size_t>(c);
}

Joint uncorrelated_joint(double p) {
  Joint j{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        j[slot(a, b, c)] = (a ? p : 1 - p) * (b ? p : 1 - p) * (c ? p : 1 - p);
  return j;
}

Joint mediated_joint(double p) {
  Joint base = uncorrelated_joint(p);
  Joint j{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      j[slot(a, b, false)] += base[slot(a, b, false)];
      j[slot(true, true, true)] += base[slot(a, b, true)];
    }
  return j;
}

Joint suppression_joint(double p, double q) {
  Joint base = uncorrelated_joint(p);
  Joint j{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const double w = base[slot(a, b, c)];
        if (a != c && !b) {
          j[slot(a, true, c)] += w * q;
          j[slot(a, false, c)] += w * (1 - q);
        } else {
          j[slot(a, b, c)] += w;
        }
      }
  return j;
}

Joint model_joint(const GenParams& params) {
  switch (params.model) {
    case Model::kUncorrelated:
      return uncorrelated_joint(params.p);
    case Model::kMediated:
      return mediated_joint(params.p);
    case Model::kSuppression:
      return suppression_joint(params.p, params.q);
    case Model::kInterpolated: {
      const Joint med = mediated_joint(params.p);
      const Joint sup = suppression_joint(params.p, params.q);
      Joint j{};
      for (std::size_t k = 0; k < j.size(); ++k) {
        j[k] = (1 - params.mu) * med[k] + params.mu * sup[k];
      }
      return j;
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kUncorrelated:
      return "uncorrelated";
    case Model::kMediated:
      return "mediated";
    case Model::kSuppression:
      return "suppression";
    case Model::kInterpolated:
      return "interpolated";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::kUncorrelated, Model::kMediated, Model::kSuppression,
                  Model::kInterpolated}) {
    if (name == to_string(m)) return m;
  }
  throw InvalidArgument("unknown model '" + std::string(name) + "'");
}

void GenParams::validate() const {
  if (n_nodes < 2) throw InvalidArgument("n_nodes must be at least 2");
  if (!is_probability(p)) throw InvalidArgument("p must lie in [0, 1]");
  if (!is_probability(q)) throw InvalidArgument("q must lie in [0, 1]");
  if (!is_probability(mu)) throw InvalidArgument("mu must lie in [0, 1]");
}

Triplet gen_uncorrelated(const GenParams& params, std::uint64_t seed) {
  require_model(params, Model::kUncorrelated);
  return build(params, seed, [&](Rng& rng) { return uncorrelated_rule(params.p, rng); });
}

Triplet gen_mediated(const GenParams& params, std::uint64_t seed) {
  require_model(params, Model::kMediated);
  return build(params, seed, [&](Rng& rng) { return mediated_rule(params.p, rng); });
}

Triplet gen_suppression(const GenParams& params, std::uint64_t seed) {
  require_model(params, Model::kSuppression);
  return build(params, seed,
               [&](Rng& rng) { return suppression_rule(params.p, params.q, rng); });
}

Triplet gen_interpolated(const GenParams& params, std::uint64_t seed) {
  require_model(params, Model::kInterpolated);
  return build(params, seed, [&](Rng& rng) {
    return rng.bernoulli(params.mu) ? suppression_rule(params.p, params.q, rng)
                                    : mediated_rule(params.p, rng);
  });
}

Triplet generate(const GenParams& params, std::uint64_t seed) {
  switch (params.model) {
    case Model::kUncorrelated:
      return gen_uncorrelated(params, seed);
    case Model::kMediated:
      return gen_mediated(params, seed);
    case Model::kSuppression:
      return gen_suppression(params, seed);
    case Model::kInterpolated:
      return gen_interpolated(params, seed);
  }
  throw InvalidArgument("unknown model");
}

PairExpectation pair_expectation(const GenParams& params) {
  params.validate();
  PairExpectation e;
  e.joint = model_joint(params);

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const double w = e.joint[slot(a, b, c)];
        if (a) e.p_in_a += w;
        if (b) e.p_in_b += w;
        if (c) e.p_in_c += w;
        if (a && b) e.p_ab += w;
        if (a || b) e.p_union_ab += w;
        if (a && b && !c) e.p_ab_minus_c += w;
        if ((a || b) && !c) e.p_union_ab_minus_c += w;
        if (a && !c) e.exp_ap += w;
        if (c && !a) e.exp_cp += w;
        if (b && !a && !c) e.exp_r += w;
      }

  if (!(e.p_union_ab > 0.0)) {
    throw DegenerateDenominator("expected |a ∪ b| is zero");
  }
  if (!(e.p_union_ab_minus_c > 0.0)) {
    throw DegenerateDenominator("expected |(a ∪ b) \\ c| is zero");
  }
  e.exp_nj = e.p_ab / e.p_union_ab;
  e.exp_nj_partial = e.p_ab_minus_c / e.p_union_ab_minus_c;
  e.exp_delta = e.exp_nj_partial - e.exp_nj;
  return e;
}

}  // namespace netmed
