#include "cli/run.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "netmed/errors.hpp"
#include "netmed/ingest.hpp"
#include "netmed/nullmodels.hpp"
#include "netmed/parallel.hpp"
#include "netmed/random.hpp"
#include "netmed/similarity.hpp"
#include "netmed/stats.hpp"
#include "netmed/version.hpp"

namespace netmed::cli {
namespace {

using Json = nlohmann::ordered_json;

// Seed streams owned by the CLI (library streams are below 16).
constexpr std::uint64_t kSweepStream = 16;
constexpr std::uint64_t kTriadStream = 17;
constexpr std::uint64_t kWindowStream = 18;
constexpr std::uint64_t kSweepRewireStream = 19;

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorCategory::kData, "IoError", message) {}
};

SuppressionCondition condition_of(const RunConfig& config) {
  return config.one_sided_xor ? SuppressionCondition::kOneSided
                              : SuppressionCondition::kSymmetric;
}

std::optional<TriadMeasures> try_measure(const Triplet& t) {
  try {
    return measure(t);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::kDegenerate) throw;
    return std::nullopt;
  }
}

Json optional_number(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

std::optional<PairExpectation> try_expectation(const GenParams& params) {
  try {
    return pair_expectation(params);
  } catch (const DegenerateDenominator&) {
    return std::nullopt;
  }
}

Json summary_row(const std::string& quantity, std::span<const double> values,
                 std::optional<double> expected) {
  const EnsembleSummary s = summarize(values);
  return Json::array({quantity, s.n, s.mean, s.std, s.stderr_mean(), s.min, s.max,
                      optional_number(expected)});
}

Table histogram_table(const std::string& name, const Histogram& h) {
  Table t{name, {"bin_lower", "bin_upper", "count"}, {}};
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    t.rows.push_back(Json::array({h.bin_edges[k], h.bin_edges[k + 1], h.counts[k]}));
  }
  return t;
}

std::string triad_flags(const TriadReport& r) {
  std::string flags;
  auto add = [&](const char* flag) {
    if (!flags.empty()) flags += ';';
    flags += flag;
  };
  if (!r.m_bar_defined) add("ZeroMaxEffect:M");
  if (!r.s_bar_defined) add("ZeroMaxEffect:S");
  if (!r.sigma_s_finite) add("ZeroNullVariance:S");
  if (!r.sigma_m_finite) add("ZeroNullVariance:M");
  return flags;
}

Json ensemble_json(const TriadReport& r, std::size_t bins) {
  Json out = Json::object();
  const std::pair<const char*, const std::vector<double>*> series[] = {
      {"delta_s", &r.delta_s},
      {"delta_m", &r.delta_m},
      {"delta_rs", &r.delta_rs},
      {"delta_rm", &r.delta_rm}};
  for (const auto& [name, values] : series) {
    const Histogram h = histogram(*values, bins);
    out[name] = {{"values", *values},
                 {"histogram", {{"bin_edges", h.bin_edges}, {"counts", h.counts}}}};
  }
  return out;
}

// --- simulate ---------------------------------------------------------------

Artifact simulate(const RunConfig& config) {
  const GenParams params = *config.model;
  std::vector<std::optional<TriadMeasures>> results(config.realizations);
  parallel_for(config.realizations, config.workers, [&](std::size_t r) {
    results[r] = try_measure(generate(params, derive_seed(config.seed, streams::kGenerate, r)));
  });

  Artifact artifact;
  Table rows{"realizations", {"realization", "nj", "nj_partial", "delta"}, {}};
  std::vector<double> nj_values, njp_values, delta_values;
  for (std::size_t r = 0; r < results.size(); ++r) {
    if (!results[r]) {
      ++artifact.skipped;
      continue;
    }
    const auto& m = *results[r];
    rows.rows.push_back(Json::array({r, m.nj.value(), m.nj_partial.value(), m.delta.value()}));
    nj_values.push_back(m.nj.value());
    njp_values.push_back(m.nj_partial.value());
    delta_values.push_back(m.delta.value());
  }
  if (delta_values.empty()) throw EmptyEnsemble("every realization was degenerate");

  const auto expected = try_expectation(params);
  Table summary{"summary",
                {"quantity", "n", "mean", "std", "stderr", "min", "max", "expected"},
                {}};
  summary.rows.push_back(summary_row(
      "nj", nj_values, expected ? std::optional(expected->exp_nj) : std::nullopt));
  summary.rows.push_back(summary_row(
      "nj_partial", njp_values,
      expected ? std::optional(expected->exp_nj_partial) : std::nullopt));
  summary.rows.push_back(summary_row(
      "delta", delta_values, expected ? std::optional(expected->exp_delta) : std::nullopt));

  artifact.tables.push_back(std::move(rows));
  artifact.tables.push_back(std::move(summary));
  artifact.tables.push_back(histogram_table("histogram", histogram(delta_values, config.bins)));
  return artifact;
}

// --- sweep-mu ---------------------------------------------------------------

struct SweepSample {
  double delta = 0.0;
  RewiredDeltas rewired;
};

Artifact sweep_mu(const RunConfig& config) {
  GenParams base = *config.model;
  base.model = Model::kInterpolated;
  const std::size_t steps = config.mu_steps;
  const std::size_t cells = config.p_values.size() * steps;
  const std::size_t total = cells * config.realizations;

  auto params_of = [&](std::size_t cell) {
    GenParams g = base;
    g.p = config.p_values[cell / steps];
    g.mu = static_cast<double>(cell % steps) / static_cast<double>(steps - 1);
    return g;
  };

  std::vector<std::optional<SweepSample>> samples(total);
  parallel_for(total, config.workers, [&](std::size_t job) {
    const std::size_t cell = job / config.realizations;
    const std::size_t r = job % config.realizations;
    const std::uint64_t cell_seed = derive_seed(config.seed, kSweepStream, cell);
    const Triplet t = generate(params_of(cell), derive_seed(cell_seed, streams::kGenerate, r));
    const auto m = try_measure(t);
    if (!m) return;
    SweepSample sample{m->delta.value(), {}};
    if (config.sweep_rewire) {
      const auto rewired = rewired_deltas(t.a, t.b, t.c,
                                          derive_seed(cell_seed, kSweepRewireStream, r), 0,
                                          condition_of(config));
      if (!rewired) return;
      sample.rewired = *rewired;
    }
    samples[job] = sample;
  });

  Artifact artifact;
  Table table{"sweep", {"p", "mu", "n", "skipped", "mean_delta", "stderr_delta", "expected_delta"}, {}};
  if (config.sweep_rewire) {
    for (const char* c : {"mean_delta_s", "stderr_delta_s", "mean_delta_m", "stderr_delta_m",
                          "mean_delta_r", "mean_delta_rs", "mean_delta_rm"}) {
      table.columns.push_back(c);
    }
  }
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::vector<double> d, ds, dm, dr, drs, drm;
    std::size_t skipped = 0;
    for (std::size_t r = 0; r < config.realizations; ++r) {
      const auto& s = samples[cell * config.realizations + r];
      if (!s) {
        ++skipped;
        continue;
      }
      d.push_back(s->delta);
      ds.push_back(s->rewired.s);
      dm.push_back(s->rewired.m);
      dr.push_back(s->rewired.full);
      drs.push_back(s->rewired.rs);
      drm.push_back(s->rewired.rm);
    }
    artifact.skipped += skipped;
    const GenParams g = params_of(cell);
    if (d.empty()) throw EmptyEnsemble("every realization was degenerate at mu=" + std::to_string(g.mu));
    const auto expected = try_expectation(g);
    const EnsembleSummary sd = summarize(d);
    Json row = Json::array({g.p, g.mu, sd.n, skipped, sd.mean, sd.stderr_mean(),
                            optional_number(expected ? std::optional(expected->exp_delta)
                                                     : std::nullopt)});
    if (config.sweep_rewire) {
      const EnsembleSummary ss = summarize(ds);
      const EnsembleSummary sm = summarize(dm);
      for (const Json& v : {Json(ss.mean), Json(ss.stderr_mean()), Json(sm.mean),
                            Json(sm.stderr_mean()), Json(mean(dr)), Json(mean(drs)),
                            Json(mean(drm))}) {
        row.push_back(v);
      }
    }
    table.rows.push_back(std::move(row));
  }
  artifact.tables.push_back(std::move(table));
  return artifact;
}

// --- pairwise-null ----------------------------------------------------------

Artifact pairwise(const RunConfig& config) {
  const MultiplexDataset ds = load_multiplex(*config.dataset, config.node_list);
  const std::vector<std::string> names =
      config.layers.empty() ? ds.layer_names() : config.layers;

  Artifact artifact;
  Table table{"pairs",
              {"layer_a", "layer_b", "edges_a", "edges_b", "observed_nj", "null_mean",
               "null_std", "n_randomizations", "skipped"},
              {}};
  std::size_t index = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j, ++index) {
      const EdgeSet a = binarize(ds, names[i]);
      const EdgeSet b = binarize(ds, names[j]);
      PairwiseNullOptions options;
      options.realizations = config.realizations;
      options.seed = derive_seed(config.seed, streams::kPairwiseNull, index);
      options.workers = config.workers;
      options.randomization = config.degree_preserving_null
                                  ? NullRandomization::kDegreePreserving
                                  : NullRandomization::kEdgeCount;
      const PairwiseNullSummary s = pairwise_null(a, b, options);
      artifact.skipped += s.skipped;
      table.rows.push_back(Json::array({names[i], names[j], a.size(), b.size(),
                                        s.observed_nj.value(), s.null_mean, s.null_std,
                                        s.n_randomizations, s.skipped}));
    }
  }
  artifact.tables.push_back(std::move(table));
  return artifact;
}

// --- triad ------------------------------------------------------------------

TriadOptions triad_options(const RunConfig& config, std::uint64_t seed) {
  TriadOptions options;
  options.realizations = config.realizations;
  options.seed = seed;
  options.workers = config.workers;
  options.surrogates = config.surrogates;
  options.condition = condition_of(config);
  return options;
}

Artifact triad(const RunConfig& config) {
  std::optional<Triplet> base;
  if (config.dataset) {
    const MultiplexDataset ds = load_multiplex(*config.dataset, config.node_list);
    base = extract_triplet(ds, {config.layers[0], config.layers[1], config.layers[2]});
  } else {
    base = generate(*config.model, derive_seed(config.seed, streams::kGenerate, 0));
  }
  const EdgeSet* layers[3] = {&base->a, &base->b, &base->c};

  // (A, B, C) as indices into the input order; the given order comes first.
  std::vector<std::array<int, 3>> roles = {{0, 1, 2}};
  if (config.permute_roles) {
    roles.push_back({1, 2, 0});
    roles.push_back({0, 2, 1});
  }

  Artifact artifact;
  Table table{"triads",
              {"a", "b", "c", "edges_a", "edges_b", "edges_c", "delta0", "mean_delta_s",
               "std_delta_s", "mean_delta_m", "std_delta_m", "mean_delta_rs", "std_delta_rs",
               "mean_delta_rm", "std_delta_rm", "m_max", "s_max", "m_bar", "s_bar",
               "sigma_s", "sigma_m", "realizations", "skipped", "flags"},
              {}};
  Table ensembles{"ensembles",
                  {"assignment", "c", "realization", "delta_s", "delta_m", "delta_rs",
                   "delta_rm"},
                  {}};
  Json reports = Json::array();

  for (std::size_t k = 0; k < roles.size(); ++k) {
    const auto [ia, ib, ic] = roles[k];
    const EdgeSet& a = *layers[ia];
    const EdgeSet& b = *layers[ib];
    const EdgeSet& c = *layers[ic];
    const TriadReport r =
        triad_indices(a, b, c, triad_options(config, derive_seed(config.seed, kTriadStream, k)));
    artifact.skipped += r.skipped;
    const auto s = summarize(r.delta_s);
    const auto m = summarize(r.delta_m);
    const auto rs = summarize(r.delta_rs);
    const auto rm = summarize(r.delta_rm);
    const auto& label = base->labels;
    table.rows.push_back(Json::array(
        {label[ia], label[ib], label[ic], a.size(), b.size(), c.size(), r.delta0, s.mean,
         s.std, m.mean, m.std, rs.mean, rs.std, rm.mean, rm.std, r.m_max, r.s_max, r.m_bar,
         r.s_bar, r.sigma_s, r.sigma_m, r.delta_s.size(), r.skipped, triad_flags(r)}));
    for (std::size_t i = 0; i < r.delta_s.size(); ++i) {
      ensembles.rows.push_back(Json::array(
          {k, label[ic], i, r.delta_s[i], r.delta_m[i], r.delta_rs[i], r.delta_rm[i]}));
    }
    Json report = {{"a", label[ia]}, {"b", label[ib]}, {"c", label[ic]},
                   {"delta0", r.delta0}, {"m_bar", r.m_bar}, {"s_bar", r.s_bar},
                   {"sigma_s", r.sigma_s}, {"sigma_m", r.sigma_m}, {"m_max", r.m_max},
                   {"s_max", r.s_max}, {"m_bar_defined", r.m_bar_defined},
                   {"s_bar_defined", r.s_bar_defined},
                   {"sigma_s_finite", r.sigma_s_finite},
                   {"sigma_m_finite", r.sigma_m_finite}, {"skipped", r.skipped}};
    report["ensembles"] = ensemble_json(r, config.bins);
    reports.push_back(std::move(report));
  }
  artifact.tables.push_back(std::move(table));
  artifact.tables.push_back(std::move(ensembles));
  artifact.extra["reports"] = std::move(reports);
  return artifact;
}

// --- rssi-sweep -------------------------------------------------------------

Artifact rssi_sweep(const RunConfig& config) {
  const MultiplexDataset ds = load_multiplex(*config.dataset, config.node_list);
  const WeightWindows windows = weight_windows(ds, config.window_layer, config.windows);
  const EdgeSet a = binarize(ds, config.layers[0]);
  const EdgeSet b = binarize(ds, config.layers[1]);

  Artifact artifact;
  Table table{"windows",
              {"window", "weight_min", "weight_max", "edges", "delta0", "m_bar", "s_bar",
               "m_plus_s", "sigma_s", "sigma_m", "m_max", "s_max", "skipped", "flags"},
              {}};
  for (std::size_t w = 0; w < windows.windows.size(); ++w) {
    const EdgeSet& c = windows.windows[w];
    const TriadReport r =
        triad_indices(a, b, c, triad_options(config, derive_seed(config.seed, kWindowStream, w)));
    artifact.skipped += r.skipped;
    table.rows.push_back(Json::array(
        {w + 1, windows.bounds[w].first, windows.bounds[w].second, c.size(), r.delta0,
         r.m_bar, r.s_bar, r.m_bar + r.s_bar, r.sigma_s, r.sigma_m, r.m_max, r.s_max,
         r.skipped, triad_flags(r)}));
  }
  artifact.tables.push_back(std::move(table));
  return artifact;
}

// --- rendering --------------------------------------------------------------

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null:
      return "";
    case Json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case Json::value_t::number_integer:
      return std::to_string(v.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return std::to_string(v.get<std::uint64_t>());
    case Json::value_t::number_float:
      return format_number(v.get<double>());
    case Json::value_t::string: {
      const auto s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      return quoted + "\"";
    }
    default:
      return v.dump();
  }
}

Json table_records(const Table& t) {
  Json records = Json::array();
  for (const auto& row : t.rows) {
    Json record = Json::object();
    for (std::size_t k = 0; k < t.columns.size(); ++k) record[t.columns[k]] = row[k];
    records.push_back(std::move(record));
  }
  return records;
}

std::string csv_path(const std::string& out, const std::string& table) {
  std::string stem = out;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
    stem.resize(stem.size() - 4);
  }
  return stem + "." + table + ".csv";
}

void write_files(const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::string> temps;
  try {
    for (const auto& [path, content] : files) {
      const std::string tmp = path + ".tmp";
      temps.push_back(tmp);
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      f << content;
      f.close();
      if (!f) throw IoError("cannot write '" + tmp + "'");
    }
    for (std::size_t k = 0; k < files.size(); ++k) {
      std::filesystem::rename(temps[k], files[k].first);
    }
  } catch (...) {
    std::error_code ignored;
    for (const auto& tmp : temps) std::filesystem::remove(tmp, ignored);
    throw;
  }
}

int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kConfig:
      return kExitConfig;
    case ErrorCategory::kData:
      return kExitData;
    case ErrorCategory::kDegenerate:
      return kExitDegenerate;
  }
  return kExitData;
}

void error_record(std::ostream& err, const std::string& category, const std::string& kind,
                  const std::string& message) {
  err << Json{{"error", {{"category", category}, {"kind", kind}, {"message", message}}}}.dump()
      << '\n';
}

}  // namespace

const char* to_string(Command command) {
  switch (command) {
    case Command::kSimulate:
      return "simulate";
    case Command::kSweepMu:
      return "sweep-mu";
    case Command::kPairwiseNull:
      return "pairwise-null";
    case Command::kTriad:
      return "triad";
    case Command::kRssiSweep:
      return "rssi-sweep";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (workers == 0) throw InvalidArgument("--workers must be at least 1");
  if (bins == 0) throw InvalidArgument("--bins must be at least 1");
  if (surrogates == 0) throw InvalidArgument("--surrogates must be at least 1");
  const std::size_t min_realizations = command == Command::kSimulate ? 1 : 2;
  if (realizations < min_realizations) {
    throw InvalidArgument("--realizations must be at least " +
                          std::to_string(min_realizations));
  }
  if (model) model->validate();

  switch (command) {
    case Command::kSimulate:
      if (!model) throw InvalidArgument("simulate requires --model");
      break;
    case Command::kSweepMu:
      if (!model) throw InvalidArgument("sweep-mu requires model parameters");
      if (p_values.empty()) throw InvalidArgument("--p-values must not be empty");
      for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("--p-values must lie in [0, 1]");
      }
      if (mu_steps < 2) throw InvalidArgument("--mu-steps must be at least 2");
      break;
    case Command::kPairwiseNull:
      if (!dataset) throw InvalidArgument("pairwise-null requires --dataset");
      if (layers.size() == 1) throw InvalidArgument("--layers needs at least two layers");
      break;
    case Command::kTriad:
      if (dataset.has_value() == model.has_value()) {
        throw InvalidArgument("triad requires exactly one of --dataset or --model");
      }
      if (dataset && layers.size() != 3) {
        throw InvalidArgument("triad on a dataset requires --layers A,B,C");
      }
      break;
    case Command::kRssiSweep:
      if (!dataset) throw InvalidArgument("rssi-sweep requires --dataset");
      if (window_layer.empty()) throw InvalidArgument("rssi-sweep requires --window-layer");
      if (layers.size() != 2) throw InvalidArgument("rssi-sweep requires --layers A,B");
      if (windows == 0) throw InvalidArgument("--windows must be at least 1");
      break;
  }
}

Json RunConfig::to_json() const {
  Json j = Json::object();
  j["command"] = to_string(command);
  j["seed"] = seed;
  j["realizations"] = realizations;
  if (model) {
    j["model"] = {{"model", std::string(netmed::to_string(model->model))},
                  {"n_nodes", model->n_nodes},
                  {"p", model->p},
                  {"q", model->q},
                  {"mu", model->mu}};
  }
  switch (command) {
    case Command::kSimulate:
      j["bins"] = bins;
      break;
    case Command::kSweepMu:
      j["p_values"] = p_values;
      j["mu_steps"] = mu_steps;
      j["rewire"] = sweep_rewire;
      j["one_sided_xor"] = one_sided_xor;
      break;
    case Command::kPairwiseNull:
      j["dataset"] = *dataset;
      j["node_list"] = node_list ? Json(*node_list) : Json(nullptr);
      j["layers"] = layers;
      j["degree_preserving_null"] = degree_preserving_null;
      break;
    case Command::kTriad:
    case Command::kRssiSweep:
      j["dataset"] = dataset ? Json(*dataset) : Json(nullptr);
      j["node_list"] = node_list ? Json(*node_list) : Json(nullptr);
      j["layers"] = layers;
      if (command == Command::kTriad) {
        j["permute_roles"] = permute_roles;
      } else {
        j["window_layer"] = window_layer;
        j["windows"] = windows;
      }
      j["surrogates"] = surrogates;
      j["bins"] = bins;
      j["one_sided_xor"] = one_sided_xor;
      break;
  }
  j["format"] = format == Format::kCsv ? "csv" : "json";
  return j;
}

Artifact execute(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::kSimulate:
      return simulate(config);
    case Command::kSweepMu:
      return sweep_mu(config);
    case Command::kPairwiseNull:
      return pairwise(config);
    case Command::kTriad:
      return triad(config);
    case Command::kRssiSweep:
      return rssi_sweep(config);
  }
  throw InvalidArgument("unknown command");
}

std::string render_json(const RunConfig& config, const Artifact& artifact) {
  Json doc = Json::object();
  doc["software"] = "netmed";
  doc["version"] = kVersion;
  doc["command"] = to_string(config.command);
  doc["seed"] = config.seed;
  doc["config"] = config.to_json();
  doc["skipped"] = artifact.skipped;
  Json tables = Json::object();
  for (const auto& t : artifact.tables) tables[t.name] = table_records(t);
  doc["tables"] = std::move(tables);
  for (const auto& [key, value] : artifact.extra.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string render_csv(const RunConfig& config, const Table& table) {
  std::ostringstream out;
  out << "# netmed " << kVersion << ' ' << to_string(config.command) << '\n';
  out << "# config: " << config.to_json().dump() << '\n';
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    out << (k ? "," : "") << table.columns[k];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_cell(row[k]);
    out << '\n';
  }
  return out.str();
}

void write_artifact(const RunConfig& config, const Artifact& artifact, std::ostream& stdout_) {
  std::string skipped_line = "# skipped: " + std::to_string(artifact.skipped) + "\n";
  if (config.format == Format::kJson) {
    const std::string doc = render_json(config, artifact);
    if (config.out == "-") {
      stdout_ << doc;
    } else {
      write_files({{config.out, doc}});
    }
    return;
  }

  if (config.out == "-") {
    for (std::size_t k = 0; k < artifact.tables.size(); ++k) {
      if (k) stdout_ << '\n';
      stdout_ << "# table: " << artifact.tables[k].name << '\n' << skipped_line
              << render_csv(config, artifact.tables[k]);
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> files;
  for (std::size_t k = 0; k < artifact.tables.size(); ++k) {
    const auto& t = artifact.tables[k];
    files.emplace_back(k == 0 ? config.out : csv_path(config.out, t.name),
                       skipped_line + render_csv(config, t));
  }
  write_files(files);
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Mediation and suppression between networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig config;
  GenParams gen;
  std::string model_name;
  std::string format = "csv";
  std::string dataset;
  std::string node_list;
  std::vector<std::string> layers;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Master seed")->capture_default_str();
    sub->add_option("-R,--realizations", config.realizations, "Realizations per estimate")
        ->capture_default_str();
    sub->add_option("--workers", config.workers, "Worker threads (never changes results)")
        ->capture_default_str();
    sub->add_option("-o,--out", config.out, "Output path, '-' for stdout")
        ->capture_default_str();
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };
  auto model_options = [&](CLI::App* sub, bool with_name) {
    if (with_name) {
      sub->add_option("--model", model_name, "uncorrelated|mediated|suppression|interpolated")
          ->check(CLI::IsMember({"uncorrelated", "mediated", "suppression", "interpolated"}));
    }
    sub->add_option("-N,--nodes", gen.n_nodes, "Number of nodes")->capture_default_str();
    sub->add_option("-p", gen.p, "Edge probability")->capture_default_str();
    sub->add_option("-q", gen.q, "XOR coupling probability")->capture_default_str();
    if (with_name) sub->add_option("--mu", gen.mu, "Suppression share")->capture_default_str();
  };
  auto dataset_options = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--dataset", dataset, "Multiplex edge list");
    if (required) opt->required();
    sub->add_option("--nodes-file", node_list, "Optional node list");
  };

  auto* simulate_cmd = app.add_subcommand("simulate", "Ensemble of NJ, NJ_p and delta for one model");
  common(simulate_cmd);
  model_options(simulate_cmd, true);
  simulate_cmd->get_option("--model")->required();
  simulate_cmd->add_option("--bins", config.bins, "Histogram bins")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep-mu", "Mean delta along the mediation/suppression blend");
  common(sweep_cmd);
  model_options(sweep_cmd, false);
  sweep_cmd->add_option("--p-values", config.p_values, "Comma-separated p grid")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--mu-steps", config.mu_steps, "Points on the mu grid")
      ->capture_default_str();
  sweep_cmd->add_flag("--rewire", config.sweep_rewire, "Add selective-rewiring curves");
  sweep_cmd->add_flag("--one-sided-xor", config.one_sided_xor,
                      "Suppression removal uses A minus C only");

  auto* pairwise_cmd = app.add_subcommand("pairwise-null", "Observed NJ against randomized layers");
  common(pairwise_cmd);
  dataset_options(pairwise_cmd, true);
  pairwise_cmd->add_option("--layers", layers, "Layer subset")->delimiter(',');
  pairwise_cmd->add_flag("--degree-preserving-null", config.degree_preserving_null,
                         "Randomize by degree-preserving swaps");

  auto* triad_cmd = app.add_subcommand("triad", "Mediation/suppression indices for a triplet");
  common(triad_cmd);
  dataset_options(triad_cmd, false);
  model_options(triad_cmd, true);
  triad_cmd->add_option("--layers", layers, "Layers in role order A,B,C")->delimiter(',');
  bool fixed_roles = false;
  triad_cmd->add_flag("--fixed-roles", fixed_roles, "Do not permute the role of C");
  triad_cmd->add_option("--surrogates", config.surrogates, "Extremal surrogates per X_max")
      ->capture_default_str();
  triad_cmd->add_option("--bins", config.bins, "Histogram bins")->capture_default_str();
  triad_cmd->add_flag("--one-sided-xor", config.one_sided_xor,
                      "Suppression removal uses A minus C only");

  auto* rssi_cmd = app.add_subcommand("rssi-sweep", "Triad indices per equal-size weight window");
  common(rssi_cmd);
  dataset_options(rssi_cmd, true);
  rssi_cmd->add_option("--window-layer", config.window_layer, "Weighted layer to slice")
      ->required();
  rssi_cmd->add_option("--layers", layers, "The other two layers, A,B")->delimiter(',');
  rssi_cmd->add_option("-k,--windows", config.windows, "Number of windows")
      ->capture_default_str();
  rssi_cmd->add_option("--surrogates", config.surrogates, "Extremal surrogates per X_max")
      ->capture_default_str();
  rssi_cmd->add_flag("--one-sided-xor", config.one_sided_xor,
                     "Suppression removal uses A minus C only");

  // sweep-mu defaults to the larger networks of the interpolation study.
  sweep_cmd->preparse_callback([&](std::size_t) { gen.n_nodes = 300; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitConfig};
  }

  config.format = format == "json" ? Format::kJson : Format::kCsv;
  config.layers = layers;
  if (!dataset.empty()) config.dataset = dataset;
  if (!node_list.empty()) config.node_list = node_list;
  config.permute_roles = !fixed_roles;

  if (simulate_cmd->parsed()) {
    config.command = Command::kSimulate;
  } else if (sweep_cmd->parsed()) {
    config.command = Command::kSweepMu;
    model_name = "interpolated";
  } else if (pairwise_cmd->parsed()) {
    config.command = Command::kPairwiseNull;
  } else if (triad_cmd->parsed()) {
    config.command = Command::kTriad;
  } else {
    config.command = Command::kRssiSweep;
  }
  if (!model_name.empty()) {
    gen.model = parse_model(model_name);
    config.model = gen;
  }
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Artifact artifact = execute(config);
    write_artifact(config, artifact, out);
    return kExitOk;
  } catch (const Error& e) {
    error_record(err, netmed::to_string(e.category()), e.kind(), e.what());
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    error_record(err, "data", "IoError", e.what());
    return kExitData;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace netmed::cli
