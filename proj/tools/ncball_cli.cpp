// Batch front end for the ball-geometry, Fock-truncation and spectral
// operations.  Structured I/O only: reports are JSON (orbits are CSV),
// written atomically when --out is given, to stdout otherwise.
//
// Exit codes: 0 ok, 1 usage/config error, 2 invalid point, 3 malformed
// group generator (signature form violated), 4 verdict undecided.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncball/sampling.hpp"
#include "ncball/serialize.hpp"

namespace fs = std::filesystem;
using ncball::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBadPoint = 2;
constexpr int kExitBadGroup = 3;
constexpr int kExitUndecided = 4;

struct CliError {
  int code;
  std::string message;
};

struct RunConfig {
  int n = 1;
  int d = 6;
  std::optional<json> presentation;
  int max_word_len = 8;
  double dedup_tol = 1e-9;
  double out_threshold = 1e-6;
  double in_tol = 1e-10;
  double stabilizer_tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
  int sweep_samples = 200;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitConfig, "cannot open file: " + path};
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, std::string("invalid JSON in ") + path + ": " + e.what()};
  }
  return j;
}

// Inline JSON text, or @path to read from a file.
json parse_inline(const std::string& text) {
  if (!text.empty() && text.front() == '@') return load_json_file(text.substr(1));
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, std::string("invalid inline JSON: ") + e.what()};
  }
}

RunConfig parse_config(const json& j) {
  static const std::set<std::string> known{
      "n", "d", "presentation", "max_word_len", "dedup_tol",
      "thresholds", "seed", "format", "sweep_samples"};
  static const std::set<std::string> known_thresholds{
      "membership_out", "membership_in", "stabilizer"};
  if (!j.is_object()) throw CliError{kExitConfig, "config must be a JSON object"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw CliError{kExitConfig, "unknown config field: " + key};

  RunConfig cfg;
  try {
    cfg.n = j.value("n", cfg.n);
    cfg.d = j.value("d", cfg.d);
    if (j.contains("presentation")) cfg.presentation = j.at("presentation");
    cfg.max_word_len = j.value("max_word_len", cfg.max_word_len);
    cfg.dedup_tol = j.value("dedup_tol", cfg.dedup_tol);
    if (j.contains("thresholds")) {
      const auto& t = j.at("thresholds");
      for (const auto& [key, value] : t.items())
        if (!known_thresholds.count(key))
          throw CliError{kExitConfig, "unknown threshold field: " + key};
      cfg.out_threshold = t.value("membership_out", cfg.out_threshold);
      cfg.in_tol = t.value("membership_in", cfg.in_tol);
      cfg.stabilizer_tol = t.value("stabilizer", cfg.stabilizer_tol);
    }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.format = j.value("format", cfg.format);
    cfg.sweep_samples = j.value("sweep_samples", cfg.sweep_samples);
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, std::string("bad config value: ") + e.what()};
  }
  if (cfg.n < 1 || cfg.d < 1 || cfg.max_word_len < 0)
    throw CliError{kExitConfig, "config: need n >= 1, d >= 1, max_word_len >= 0"};
  if (cfg.dedup_tol <= 0 || cfg.out_threshold <= 0 || cfg.in_tol <= 0 ||
      cfg.stabilizer_tol <= 0)
    throw CliError{kExitConfig, "config: tolerances must be positive"};
  if (cfg.format != "json" && cfg.format != "csv")
    throw CliError{kExitConfig, "config: format must be json or csv"};
  if (cfg.sweep_samples < 1)
    throw CliError{kExitConfig, "config: sweep_samples >= 1"};
  return cfg;
}

ncball::Point point_arg(const std::string& text, const char* what) {
  try {
    return ncball::point_from_json(parse_inline(text));
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError{kExitBadPoint, std::string("invalid ") + what + ": " + e.what()};
  }
}

std::vector<ncball::Point> points_arg(const std::string& text, const char* what) {
  const json j = parse_inline(text);
  if (!j.is_array())
    throw CliError{kExitBadPoint, std::string(what) + " must be an array of points"};
  std::vector<ncball::Point> pts;
  for (const auto& p : j) {
    try {
      pts.push_back(ncball::point_from_json(p));
    } catch (const std::exception& e) {
      throw CliError{kExitBadPoint, std::string("invalid point in ") + what + ": " + e.what()};
    }
  }
  return pts;
}

ncball::GroupPresentation presentation_from_config(const RunConfig& cfg) {
  if (!cfg.presentation)
    throw CliError{kExitConfig, "config: presentation required for this command"};
  json body = *cfg.presentation;
  if (body.is_object() && body.contains("file"))
    body = load_json_file(body.at("file").get<std::string>());
  try {
    return ncball::presentation_from_json(body);
  } catch (const std::exception& e) {
    throw CliError{kExitBadGroup, std::string("malformed presentation: ") + e.what()};
  }
}

void write_atomic(const fs::path& target, const std::string& payload) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{kExitConfig, "cannot write " + tmp.string()};
    out << payload;
  }
  fs::rename(tmp, target);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty())
    std::cout << payload;
  else
    write_atomic(out_path, payload);
}

std::string render(const json& report, const RunConfig& cfg) {
  if (cfg.format == "csv") {
    // Flat key,value rows for scalar reports.
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [key, value] : report.items())
      if (value.is_primitive()) out << key << ',' << value.dump() << '\n';
    return out.str();
  }
  return report.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

int cmd_distance(const RunConfig& cfg, const std::string& z_text,
                 const std::string& w_text, const std::string& out_path) {
  const ncball::Point z = point_arg(z_text, "--z");
  const ncball::Point w = point_arg(w_text, "--w");
  if (z.dim() != w.dim())
    throw CliError{kExitBadPoint, "points of different dimension"};
  const double closed = ncball::pseudo_distance(z, w);
  const auto extremal = ncball::extremal_distance(z, w);
  json report{{"n", z.dim()},
              {"z", ncball::point_to_json(z)},
              {"w", ncball::point_to_json(w)},
              {"pseudo_distance", closed},
              {"extremal_value", extremal.value},
              {"abs_difference", std::abs(closed - extremal.value)},
              {"witness", ncball::ball_function_to_json(extremal.witness)}};
  emit(render(report, cfg), out_path);
  return kExitOk;
}

int cmd_orbit(const RunConfig& cfg, const std::string& out_path) {
  const auto pres = presentation_from_config(cfg);
  const auto enumeration =
      ncball::enumerate_elements(pres, cfg.max_word_len, cfg.dedup_tol);
  const auto orbit = ncball::orbit_of_origin(enumeration.elements, cfg.dedup_tol);
  emit(ncball::orbit_to_csv(orbit), out_path);
  return kExitOk;
}

int cmd_blaschke(const RunConfig& cfg, const std::string& out_path) {
  const auto pres = presentation_from_config(cfg);
  const auto enumeration =
      ncball::enumerate_elements(pres, cfg.max_word_len, cfg.dedup_tol);
  const auto report = ncball::blaschke_report(enumeration);
  json body = ncball::blaschke_to_json(report);
  body["elements"] = enumeration.elements.size();
  body["collisions"] = enumeration.collisions;
  emit(body.dump(2) + "\n", out_path);
  return report.verdict == ncball::Verdict::Undecided ? kExitUndecided : kExitOk;
}

int cmd_witness(const RunConfig& cfg, const std::string& delta_text,
                const std::string& z_text, const std::string& out_path) {
  const auto delta = points_arg(delta_text, "--delta");
  const ncball::Point z = point_arg(z_text, "--z");
  const auto witness = ncball::vanishing_witness(delta, z);
  (void)cfg;
  emit(ncball::witness_to_json(witness).dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_membership(const RunConfig& cfg, const std::string& delta_text,
                   const std::string& z_text, const std::string& out_path) {
  const auto delta = points_arg(delta_text, "--delta");
  const ncball::Point z = point_arg(z_text, "--z");
  const auto verdict =
      ncball::spectral_membership(delta, z, cfg.out_threshold, cfg.in_tol);
  emit(ncball::membership_to_json(verdict).dump(2) + "\n", out_path);
  return verdict.status == ncball::Membership::Undecided ? kExitUndecided : kExitOk;
}

int cmd_ergodic(const RunConfig& cfg, const std::string& poly_text, double tol,
                const std::string& out_path) {
  const auto pres = presentation_from_config(cfg);
  const auto enumeration =
      ncball::enumerate_elements(pres, cfg.max_word_len, cfg.dedup_tol);
  const auto f = ncball::poly_from_json(parse_inline(poly_text), pres.n);
  const auto report = ncball::ergodicity_certificate(enumeration.elements, f, tol);
  emit(ncball::ergodicity_to_json(report).dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_fock(const RunConfig& cfg, const std::string& poly_text,
             const std::string& eval_text, bool dump_operator,
             const std::string& out_path) {
  const auto f = ncball::poly_from_json(parse_inline(poly_text), cfg.n);
  const ncball::TruncatedFockBasis basis(cfg.n, cfg.d);
  const auto op = ncball::poly_to_operator(f, basis);
  json report{{"n", cfg.n},
              {"d", cfg.d},
              {"op_norm", ncball::op_norm(op)},
              {"coeff_l2", ncball::coeff_l2(f)},
              {"degree", f.degree()}};
  if (!eval_text.empty()) {
    const ncball::Point at = point_arg(eval_text, "--eval-at");
    report["eval"] = ncball::complex_to_json(ncball::eval_scalar(f, at));
  }
  if (dump_operator) report["operator"] = ncball::operator_to_json(op);
  emit(render(report, cfg), out_path);
  return kExitOk;
}

// Seeded property sweeps over the metric identities; every number in the
// report is a deterministic function of (config, seed).
int cmd_sweep(const RunConfig& cfg, const std::string& out_path) {
  ncball::Sampler sampler(cfg.seed);
  const int samples = cfg.sweep_samples;

  double metric_dev = 0.0, witness_dev = 0.0;
  double isometry_dev = 0.0;
  double schwarz_excess = 0.0;
  double comparability_err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int n = 1 + static_cast<int>(i % 3);
    const ncball::Point z = sampler.point_in_ball(n);
    const ncball::Point w = sampler.point_in_ball(n);

    const double rho = ncball::pseudo_distance(z, w);
    const auto ext = ncball::extremal_distance(z, w);
    metric_dev = std::max(metric_dev, std::abs(rho - ext.value));
    witness_dev = std::max(witness_dev, std::abs(ext.witness.evaluate(w)));

    const ncball::MoebiusMap g = sampler.random_moebius(n);
    isometry_dev = std::max(
        isometry_dev,
        std::abs(ncball::pseudo_distance(ncball::apply(g, z), ncball::apply(g, w)) - rho));

    if (z.norm() > 0.0) {
      const auto through_zero = ncball::extremal_distance(z, ncball::Point::origin(n));
      const ncball::Point probe = sampler.point_in_ball(n);
      schwarz_excess =
          std::max(schwarz_excess,
                   std::abs(through_zero.witness.evaluate(probe)) - probe.norm());
    }

    const double factor = ncball::comparability_factor(z, w);
    const double lhs = 1.0 - ncball::apply(ncball::involution_at(z), w).norm();
    const double rhs = factor * (1.0 - w.norm());
    comparability_err =
        std::max(comparability_err, std::abs(lhs - rhs) / std::max(lhs, 1e-300));
  }

  json report{
      {"seed", cfg.seed},
      {"samples", samples},
      {"metric_agreement",
       {{"max_abs_diff", metric_dev}, {"tolerance", 1e-10}, {"pass", metric_dev <= 1e-10}}},
      {"witness_vanishing",
       {{"max_abs_value", witness_dev}, {"tolerance", 1e-12}, {"pass", witness_dev <= 1e-12}}},
      {"isometry_invariance",
       {{"max_abs_diff", isometry_dev}, {"tolerance", 1e-9}, {"pass", isometry_dev <= 1e-9}}},
      {"schwarz_bound",
       {{"max_excess", schwarz_excess}, {"tolerance", 1e-12}, {"pass", schwarz_excess <= 1e-12}}},
      {"comparability_identity",
       {{"max_rel_err", comparability_err}, {"tolerance", 1e-12}, {"pass", comparability_err <= 1e-12}}}};
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyperbolic geometry of the complex unit ball and truncated Fock-space calculus"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> format_override;
  app.add_option("--config", config_path, "path to a JSON run configuration");
  app.add_option("--seed", seed_override, "override the config RNG seed");
  app.add_option("--out", out_path, "output path (atomic write); stdout if omitted");
  app.add_option("--format", format_override, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string z_text, w_text, delta_text, poly_text, eval_text;
  double ergodic_tol = 1e-10;
  bool dump_operator = false;

  auto* distance = app.add_subcommand("distance", "closed-form and extremal metric values");
  distance->add_option("--z", z_text, "point as [[re,im],...]")->required();
  distance->add_option("--w", w_text, "point as [[re,im],...]")->required();

  auto* orbit = app.add_subcommand("orbit", "orbit of the origin as CSV");
  auto* blaschke =
      app.add_subcommand("blaschke", "per-shell Blaschke partial sums and verdict");

  auto* witness = app.add_subcommand("witness", "vanishing product for a finite set");
  witness->add_option("--delta", delta_text, "points as [[[re,im],...],...] or @file")
      ->required();
  witness->add_option("--z", z_text, "probe point")->required();

  auto* membership =
      app.add_subcommand("membership", "spectral-closure membership verdict");
  membership->add_option("--delta", delta_text, "points or @file")->required();
  membership->add_option("--z", z_text, "probe point")->required();

  auto* ergodic =
      app.add_subcommand("ergodic", "invariance/constancy defects on the orbit");
  ergodic->add_option("--f", poly_text, "polynomial as [{word, coeff}] or @file")
      ->required();
  ergodic->add_option("--tol", ergodic_tol, "certificate tolerance");

  auto* fock =
      app.add_subcommand("fock", "truncated operator norm and scalar evaluation");
  fock->add_option("--poly", poly_text, "polynomial as [{word, coeff}] or @file")
      ->required();
  fock->add_option("--eval-at", eval_text, "optional point for scalar evaluation");
  fock->add_flag("--dump-operator", dump_operator,
                 "include the dense matrix in the report");

  auto* sweep =
      app.add_subcommand("sweep", "seeded property sweeps over the metric identities");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config(load_json_file(config_path));
    if (seed_override) cfg.seed = *seed_override;
    if (format_override) cfg.format = *format_override;

    if (distance->parsed()) return cmd_distance(cfg, z_text, w_text, out_path);
    if (orbit->parsed()) return cmd_orbit(cfg, out_path);
    if (blaschke->parsed()) return cmd_blaschke(cfg, out_path);
    if (witness->parsed()) return cmd_witness(cfg, delta_text, z_text, out_path);
    if (membership->parsed()) return cmd_membership(cfg, delta_text, z_text, out_path);
    if (ergodic->parsed()) return cmd_ergodic(cfg, poly_text, ergodic_tol, out_path);
    if (fock->parsed())
      return cmd_fock(cfg, poly_text, eval_text, dump_operator, out_path);
    if (sweep->parsed()) return cmd_sweep(cfg, out_path);
    std::cerr << json{{"error", "no subcommand"}}.dump() << "\n";
    return kExitConfig;
  } catch (const CliError& e) {
    std::cerr << json{{"error", e.message}}.dump() << "\n";
    return e.code;
  } catch (const std::domain_error& e) {
    // Domain errors surface from point construction: invalid inputs.
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitBadPoint;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitConfig;
  }
}
