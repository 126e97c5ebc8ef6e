// riesz-lab: command-line front end for the exponential-system experiments.
// Every subcommand writes a ReportEnvelope JSON (<out>.json) plus a flat CSV
// (<out>.csv) and prints a one-line summary. Exit codes: 0 success, 2 input
// error, 3 numerical-outcome flag (singular section, insufficient
// truncation), 64 unknown command.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rieszlab/pipelines.hpp"
#include "rieszlab/report_io.hpp"

namespace {

using namespace rieszlab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

struct CommandIo {
  std::string out_prefix;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << content;
  if (!os) throw std::invalid_argument("write failed: " + path);
}

int finish(const CommandIo& io, const std::string& command,
           std::map<std::string, std::string> fingerprints, const nlohmann::json& payload,
           const std::string& csv, int exit_code, const std::string& summary) {
  ReportEnvelope env;
  env.command = command;
  env.seed = io.seed;
  env.config = io.config;
  env.fingerprints = std::move(fingerprints);
  env.payload = canonicalize(payload);
  env.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - io.start).count();
  write_file(io.out_prefix + ".json", env.dump());
  write_file(io.out_prefix + ".csv", csv);
  std::cout << summary << "\n";
  return exit_code;
}

// ---------------------------------------------------------------------------
// flag parsing helpers
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "0,1;2,3" -> {[0,1],[2,3]}
IntervalSet parse_set(const std::string& text) {
  std::vector<std::pair<double, double>> raw;
  for (const std::string& part : split(text, ';')) {
    const auto nums = split(part, ',');
    if (nums.size() != 2) throw std::invalid_argument("interval needs 'lo,hi': " + part);
    raw.emplace_back(std::stod(nums[0]), std::stod(nums[1]));
  }
  return IntervalSet::normalized(raw);
}

/// "lo,hi,val;lo,hi,val" -> piecewise-constant weight
WeightSpec parse_piecewise(const std::string& text) {
  std::vector<std::pair<Interval, double>> pieces;
  for (const std::string& part : split(text, ';')) {
    const auto nums = split(part, ',');
    if (nums.size() != 3) throw std::invalid_argument("piece needs 'lo,hi,value': " + part);
    pieces.push_back({Interval{std::stod(nums[0]), std::stod(nums[1])}, std::stod(nums[2])});
  }
  return WeightSpec::piecewise(std::move(pieces));
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split(text, ',')) out.push_back(std::stod(part));
  return out;
}

std::vector<int> parse_splits(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split(text, ',')) out.push_back(std::stoi(part));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read file: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

/// Rewrites argv applying the flat key=value config file and the
/// RIESZ_LAB_SEED environment variable. Precedence: explicit flag, then
/// environment (seed only), then config file, then built-in default.
std::vector<std::string> preprocess_args(int argc, char** argv) {
  std::string config_path;
  std::vector<std::string> rest;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config") {
      if (i + 1 >= argc) throw std::invalid_argument("--config needs a file argument");
      config_path = argv[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }

  auto user_has = [&rest](const std::string& key) {
    const std::string flag = "--" + key;
    for (const std::string& a : rest) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };

  std::vector<std::string> injected;
  const char* env_seed = std::getenv("RIESZ_LAB_SEED");
  if (!config_path.empty()) {
    std::istringstream is(read_file(config_path));
    std::string line;
    while (std::getline(is, line)) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("config line is not key=value: " + t);
      }
      const std::string key = trim(t.substr(0, eq));
      const std::string value = trim(t.substr(eq + 1));
      if (user_has(key)) continue;  // flags override the file
      if (key == "seed" && env_seed != nullptr) continue;  // env overrides the file
      injected.push_back("--" + key + "=" + value);
    }
  }
  if (env_seed != nullptr && !user_has("seed")) {
    injected.push_back(std::string("--seed=") + env_seed);
  }

  std::vector<std::string> args;
  args.reserve(rest.size() + injected.size());
  if (!rest.empty() && rest.front().rfind("-", 0) != 0) {
    args.push_back(rest.front());
    args.insert(args.end(), injected.begin(), injected.end());
    args.insert(args.end(), rest.begin() + 1, rest.end());
  } else {
    args = rest;
  }
  return args;
}

/// Options shared by the 1-D commands that need (domain, system, weight).
struct DomainSystemFlags {
  std::string set_text = "0,1";
  double lattice_step = 1.0;
  long trunc = 0;
  long lo_index = 0, hi_index = 0;
  bool explicit_range = false;
  std::string freqs_file;
  double power_alpha = std::numeric_limits<double>::quiet_NaN();
  std::string piecewise_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("--set", set_text, "domain as 'lo,hi;lo,hi;...'")->capture_default_str();
    cmd->add_option("--lattice", lattice_step, "lattice step for Lambda")->capture_default_str();
    cmd->add_option("--trunc", trunc, "symmetric index truncation: k in [-trunc, trunc]");
    auto* lo = cmd->add_option("--lo", lo_index, "explicit lattice index lower end");
    auto* hi = cmd->add_option("--hi", hi_index, "explicit lattice index upper end");
    lo->needs(hi);
    hi->needs(lo);
    cmd->add_option("--freqs-file", freqs_file,
                    "frequency list file (JSON array or one per line); overrides lattice flags");
    cmd->add_option("--alpha", power_alpha, "power weight w(x) = x^alpha on [0,1]");
    cmd->add_option("--pw", piecewise_text, "piecewise weight 'lo,hi,val;...'");
    cmd->parse_complete_callback([this, cmd] { explicit_range = cmd->count("--lo") > 0; });
  }

  IntervalSet domain() const { return parse_set(set_text); }

  ExponentialSystem system() const {
    if (!freqs_file.empty()) return ExponentialSystem::parse(read_file(freqs_file));
    if (explicit_range) return ExponentialSystem::lattice(lattice_step, lo_index, hi_index);
    return ExponentialSystem::lattice(lattice_step, -trunc, trunc);
  }

  WeightSpec weight() const {
    const bool has_power = !std::isnan(power_alpha);
    if (has_power && !piecewise_text.empty()) {
      throw std::invalid_argument("choose either --alpha or --pw, not both");
    }
    if (has_power) return WeightSpec::power(power_alpha);
    if (!piecewise_text.empty()) return parse_piecewise(piecewise_text);
    return WeightSpec::unit();
  }

  void record(std::map<std::string, std::string>& cfg) const {
    cfg["set"] = set_text;
    if (!freqs_file.empty()) {
      cfg["freqs_file"] = freqs_file;
    } else {
      std::ostringstream os;
      os.precision(17);
      os << lattice_step;
      cfg["lattice"] = os.str();
      if (explicit_range) {
        cfg["lo"] = std::to_string(lo_index);
        cfg["hi"] = std::to_string(hi_index);
      } else {
        cfg["trunc"] = std::to_string(trunc);
      }
    }
    if (!std::isnan(power_alpha)) cfg["alpha"] = std::to_string(power_alpha);
    if (!piecewise_text.empty()) cfg["pw"] = piecewise_text;
  }
};

std::map<std::string, std::string> standard_fingerprints(const IntervalSet& domain,
                                                         const ExponentialSystem& system,
                                                         const WeightSpec& w) {
  return {{"domain", fingerprint(domain.to_json())},
          {"system", fingerprint(system.to_json())},
          {"weight", fingerprint(w.describe())}};
}

std::string one_row_csv(const std::vector<std::pair<std::string, double>>& fields) {
  std::ostringstream head, row;
  row.precision(17);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) {
      head << ",";
      row << ",";
    }
    head << fields[i].first;
    row << fields[i].second;
  }
  return head.str() + "\n" + row.str() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riesz-lab: finite-section experiments for exponential systems"};
  app.require_subcommand(1);

  CommandIo io;
  int exit_code = kExitOk;

  std::string config_doc;  // consumed by preprocess_args; registered for help only
  auto add_common = [&io, &config_doc](CLI::App* cmd) {
    cmd->add_option("--config", config_doc,
                    "flat key=value config file (flags override; keys are long option names)");
    cmd->add_option("--out", io.out_prefix, "output path prefix (default: command name)");
    cmd->add_option("--seed", io.seed,
                    "RNG seed for seeded instances (env RIESZ_LAB_SEED overrides the default)")
        ->capture_default_str();
  };

  // --- threshold ---------------------------------------------------------
  auto* cmd_threshold = app.add_subcommand("threshold", "golden-ratio lower-bound constant");
  add_common(cmd_threshold);
  cmd_threshold->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "threshold";
    const double k = golden_threshold();
    const double residual = k * k * k * k - k * k - 1.0;
    nlohmann::json payload;
    payload["value"] = k;
    payload["identity_residual"] = residual;
    std::ostringstream msg;
    msg.precision(17);
    msg << k << "  (K^4 - K^2 - 1 = " << residual << ")";
    exit_code = finish(io, "threshold", {}, payload,
                       one_row_csv({{"value", k}, {"identity_residual", residual}}), kExitOk,
                       msg.str());
  });

  // --- construct-set ------------------------------------------------------
  auto* cmd_construct = app.add_subcommand("construct-set", "build the nested split family");
  add_common(cmd_construct);
  static int cs_stages = 1;
  static std::string cs_splits;
  cmd_construct->add_option("--stages", cs_stages, "number of stages n >= 1")->required();
  cmd_construct->add_option("--splits", cs_splits, "comma list of per-stage split counts");
  cmd_construct->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "construct-set";
    io.config["stages"] = std::to_string(cs_stages);
    std::vector<int> splits =
        cs_splits.empty() ? default_split_counts(cs_stages) : parse_splits(cs_splits);
    if (!cs_splits.empty()) io.config["splits"] = cs_splits;
    const NestedSplitFamily family = make_split_family(cs_stages, splits);
    const nlohmann::json payload = nlohmann::json::parse(family.to_json());
    const IntervalSet& top = family.set(cs_stages);
    std::ostringstream msg;
    msg << "stage " << cs_stages << ": " << top.size() << " intervals, measure "
        << top.measure();
    exit_code = finish(io, "construct-set", {{"set", fingerprint(top.to_json())}}, payload,
                       top.to_csv(), kExitOk, msg.str());
  });

  // --- gram ---------------------------------------------------------------
  auto* cmd_gram = app.add_subcommand("gram", "assemble the Gram matrix");
  add_common(cmd_gram);
  static DomainSystemFlags gram_flags;
  gram_flags.attach(cmd_gram);
  cmd_gram->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "gram";
    gram_flags.record(io.config);
    const IntervalSet domain = gram_flags.domain();
    const ExponentialSystem system = gram_flags.system();
    const WeightSpec w = gram_flags.weight();
    const GramMatrix g = gram_matrix(system, domain, w);
    std::ostringstream msg;
    msg << "gram " << g.dim() << "x" << g.dim() << " on " << g.domain_tag;
    exit_code = finish(io, "gram", standard_fingerprints(domain, system, w),
                       nlohmann::json::parse(g.to_json()), g.to_csv(), kExitOk, msg.str());
  });

  // --- bounds -------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand("bounds", "finite-section Riesz bounds");
  add_common(cmd_bounds);
  static DomainSystemFlags bounds_flags;
  bounds_flags.attach(cmd_bounds);
  cmd_bounds->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "bounds";
    bounds_flags.record(io.config);
    const IntervalSet domain = bounds_flags.domain();
    const ExponentialSystem system = bounds_flags.system();
    const WeightSpec w = bounds_flags.weight();
    const RieszBounds rb = riesz_bounds(system, domain, w);
    std::ostringstream msg;
    msg.precision(12);
    msg << "lower " << rb.lower << ", upper " << rb.upper << ", K " << rb.constant
        << (rb.singular ? " [numerically singular section]" : "");
    exit_code = finish(io, "bounds", standard_fingerprints(domain, system, w),
                       nlohmann::json::parse(rb.to_json()),
                       one_row_csv({{"lower", rb.lower},
                                    {"upper", rb.upper},
                                    {"constant", rb.constant},
                                    {"singular", rb.singular ? 1.0 : 0.0}}),
                       rb.singular ? kExitNumerical : kExitOk, msg.str());
  });

  // --- expand -------------------------------------------------------------
  auto* cmd_expand = app.add_subcommand("expand", "least-squares expansion in E(Lambda)");
  add_common(cmd_expand);
  static DomainSystemFlags expand_flags;
  expand_flags.attach(cmd_expand);
  static std::string ex_indicator;
  static double ex_exponential = std::numeric_limits<double>::quiet_NaN();
  static double ex_ridge = 0.0;
  cmd_expand->add_option("--indicator", ex_indicator,
                         "expand the normalized indicator of this set 'lo,hi;...'");
  cmd_expand->add_option("--exponential", ex_exponential, "expand e(lam0 x)");
  cmd_expand->add_option("--ridge", ex_ridge, "ridge regularization")->capture_default_str();
  cmd_expand->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "expand";
    expand_flags.record(io.config);
    const IntervalSet domain = expand_flags.domain();
    const ExponentialSystem system = expand_flags.system();
    const WeightSpec w = expand_flags.weight();
    FunctionSpec f = SingleExponential{0.0};
    if (!ex_indicator.empty()) {
      f = unit_l2_indicator(parse_set(ex_indicator));
      io.config["indicator"] = ex_indicator;
    } else if (!std::isnan(ex_exponential)) {
      f = SingleExponential{ex_exponential};
      io.config["exponential"] = std::to_string(ex_exponential);
    } else {
      throw std::invalid_argument("expand: give --indicator or --exponential");
    }
    io.config["ridge"] = std::to_string(ex_ridge);
    const ExpansionResult res = expand_function(f, system, domain, w, ex_ridge);
    nlohmann::json payload;
    payload["residual_energy"] = res.residual_energy;
    payload["expanded_energy"] = res.expanded_energy;
    payload["function_norm_sq"] = res.function_norm_sq;
    payload["conditioning"] = res.conditioning;
    payload["conditioning_estimated"] = res.conditioning_estimated;
    nlohmann::json coeffs = nlohmann::json::array();
    for (Eigen::Index j = 0; j < res.coefficients.size(); ++j) {
      coeffs.push_back({res.coefficients[j].real(), res.coefficients[j].imag()});
    }
    payload["coefficients"] = coeffs;
    std::ostringstream csv;
    csv.precision(17);
    csv << "index,frequency,re,im\n";
    for (Eigen::Index j = 0; j < res.coefficients.size(); ++j) {
      csv << j << "," << system[std::size_t(j)] << "," << res.coefficients[j].real() << ","
          << res.coefficients[j].imag() << "\n";
    }
    std::ostringstream msg;
    msg.precision(12);
    msg << "residual " << res.residual_energy << ", conditioning " << res.conditioning;
    exit_code = finish(io, "expand", standard_fingerprints(domain, system, w), payload,
                       csv.str(), kExitOk, msg.str());
  });

  // --- translate-test -----------------------------------------------------
  auto* cmd_translate =
      app.add_subcommand("translate-test", "coefficient-translation diagnostic");
  add_common(cmd_translate);
  static DomainSystemFlags tr_flags;
  tr_flags.attach(cmd_translate);
  static std::string tr_indicator = "0,0.25";
  static double tr_shift = 0.0;
  static double tr_ridge = 0.0;
  cmd_translate->add_option("--indicator", tr_indicator, "normalized indicator region")
      ->capture_default_str();
  cmd_translate->add_option("--shift", tr_shift, "translation t")->required();
  cmd_translate->add_option("--ridge", tr_ridge, "ridge regularization")->capture_default_str();
  cmd_translate->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "translate-test";
    tr_flags.record(io.config);
    io.config["indicator"] = tr_indicator;
    io.config["shift"] = std::to_string(tr_shift);
    const IntervalSet domain = tr_flags.domain();
    const ExponentialSystem system = tr_flags.system();
    const WeightSpec w = tr_flags.weight();
    const FunctionSpec f = unit_l2_indicator(parse_set(tr_indicator));
    const TranslationReport rep =
        translation_diagnostic(domain, w, system, f, tr_shift, tr_ridge);
    std::ostringstream msg;
    msg.precision(12);
    msg << "implied_K " << rep.implied_K << " (f_energy " << rep.f_energy << ", g_energy "
        << rep.g_energy << ")";
    exit_code = finish(io, "translate-test", standard_fingerprints(domain, system, w),
                       nlohmann::json::parse(rep.to_json()),
                       one_row_csv({{"shift", rep.shift},
                                    {"implied_K", rep.implied_K},
                                    {"coeff_energy", rep.coeff_energy},
                                    {"f_energy", rep.f_energy},
                                    {"g_energy", rep.g_energy},
                                    {"residual_energy", rep.residual_energy}}),
                       kExitOk, msg.str());
  });

  // --- weighted-scan ------------------------------------------------------
  auto* cmd_scan = app.add_subcommand("weighted-scan", "weighted blow-up scan over eps");
  add_common(cmd_scan);
  static double ws_alpha = 1.0;
  static std::string ws_pw;
  static std::string ws_grid = "0.1,0.01,0.001";
  static double ws_trunc = 20000.0;
  cmd_scan->add_option("--alpha", ws_alpha, "power weight exponent")->capture_default_str();
  cmd_scan->add_option("--pw", ws_pw, "piecewise weight 'lo,hi,val;...' (overrides --alpha)");
  cmd_scan->add_option("--eps-grid", ws_grid, "strictly decreasing eps list")
      ->capture_default_str();
  cmd_scan->add_option("--trunc", ws_trunc, "frequency truncation F")->capture_default_str();
  cmd_scan->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "weighted-scan";
    io.config["eps_grid"] = ws_grid;
    io.config["trunc"] = std::to_string(ws_trunc);
    WeightSpec w = WeightSpec::power(ws_alpha);
    if (!ws_pw.empty()) {
      w = parse_piecewise(ws_pw);
      io.config["pw"] = ws_pw;
    } else {
      io.config["alpha"] = std::to_string(ws_alpha);
    }
    const WeightedScanResult res = weighted_scan(w, parse_grid(ws_grid), ws_trunc);
    std::ostringstream msg;
    msg.precision(12);
    msg << "implied_K:";
    for (const auto& row : res.rows) msg << " " << row.report.implied_K;
    exit_code = finish(io, "weighted-scan", {{"weight", fingerprint(w.describe())}},
                       nlohmann::json::parse(res.to_json()), res.to_csv(), kExitOk, msg.str());
  });

  // --- pigeonhole ---------------------------------------------------------
  auto* cmd_pigeon =
      app.add_subcommand("pigeonhole", "three-sector selection on a seeded instance");
  add_common(cmd_pigeon);
  static int ph_count = 64;
  static double ph_m = 1.0;
  static double ph_measure = 1.0;
  static int ph_grid = 256;
  cmd_pigeon->add_option("--count", ph_count, "number of sampled functions N")
      ->capture_default_str();
  cmd_pigeon->add_option("--m-bound", ph_m, "hypothesis constant M")->capture_default_str();
  cmd_pigeon->add_option("--a-measure", ph_measure, "|A|")->capture_default_str();
  cmd_pigeon->add_option("--grid", ph_grid, "grid points")->capture_default_str();
  cmd_pigeon->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "pigeonhole";
    io.config["count"] = std::to_string(ph_count);
    io.config["m_bound"] = std::to_string(ph_m);
    io.config["a_measure"] = std::to_string(ph_measure);
    io.config["grid"] = std::to_string(ph_grid);
    if (ph_count < 1 || ph_grid < 1) throw std::invalid_argument("pigeonhole: bad sizes");
    // Random-phase instance with |g_i| <= M/sqrt(N): the subset-sum
    // hypothesis then holds for every subset by the triangle inequality.
    std::mt19937_64 rng(io.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double amp = ph_m / std::sqrt(double(ph_count));
    CMatrix samples(ph_count, ph_grid);
    std::vector<double> grid(static_cast<std::size_t>(ph_grid));
    for (int p = 0; p < ph_grid; ++p) {
      grid[std::size_t(p)] = ph_measure * (p + 0.5) / ph_grid;
    }
    for (int i = 0; i < ph_count; ++i) {
      for (int p = 0; p < ph_grid; ++p) {
        const double phase = 2.0 * std::numbers::pi * unif(rng);
        samples(i, p) = amp * unif(rng) * Complex(std::cos(phase), std::sin(phase));
      }
    }
    const PigeonholeResult res = sector_pigeonhole_select(samples, grid, ph_measure, ph_m);
    std::ostringstream msg;
    msg.precision(12);
    msg << "i0 " << res.index << ", energy " << res.energy << " <= bound " << res.bound << ": "
        << (res.energy <= res.bound ? "yes" : "NO");
    exit_code = finish(io, "pigeonhole", {}, nlohmann::json::parse(res.to_json()),
                       one_row_csv({{"index", double(res.index)},
                                    {"energy", res.energy},
                                    {"bound", res.bound},
                                    {"sector", double(res.sector)},
                                    {"witness_point", res.witness_point}}),
                       res.hypothesis_ok ? kExitOk : kExitNumerical, msg.str());
  });

  // --- theorem2 -----------------------------------------------------------
  auto* cmd_theorem2 = app.add_subcommand("theorem2", "nested-family inequality chain");
  add_common(cmd_theorem2);
  static Theorem2Params t2;
  static std::string t2_splits;
  cmd_theorem2->add_option("--stages", t2.stages, "stage n")->capture_default_str();
  cmd_theorem2->add_option("--splits", t2_splits, "comma list of split counts (default 3^k)");
  cmd_theorem2->add_option("--ell", t2.ell, "lattice denominator (integer >= 4)")
      ->capture_default_str();
  cmd_theorem2->add_option("--trunc", t2.truncation, "frequency truncation F")
      ->capture_default_str();
  cmd_theorem2->add_option("--grid", t2.grid_per_interval, "grid points per edge interval")
      ->capture_default_str();
  cmd_theorem2->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "theorem2";
    t2.split_counts = t2_splits.empty() ? std::vector<int>{} : parse_splits(t2_splits);
    io.config["stages"] = std::to_string(t2.stages);
    if (!t2_splits.empty()) io.config["splits"] = t2_splits;
    io.config["ell"] = std::to_string(t2.ell);
    io.config["trunc"] = std::to_string(t2.truncation);
    io.config["grid"] = std::to_string(t2.grid_per_interval);
    const Theorem2Report rep = theorem2_run(t2);
    std::ostringstream msg;
    msg.precision(12);
    msg << "stage " << rep.stages << ": Khat " << rep.khat.constant << " [" << rep.outcome
        << (rep.khat.singular ? ", singular section" : "") << "]";
    const bool flagged = rep.outcome == "truncation_insufficient" || rep.khat.singular;
    std::map<std::string, std::string> fps = {
        {"lattice", fingerprint("ell=" + std::to_string(t2.ell) +
                                ";F=" + std::to_string(t2.truncation))}};
    exit_code = finish(io, "theorem2", std::move(fps), nlohmann::json::parse(rep.to_json()),
                       rep.to_csv(), flagged ? kExitNumerical : kExitOk, msg.str());
  });

  // --- disk ---------------------------------------------------------------
  auto* cmd_disk = app.add_subcommand("disk", "area-1 disk lune-energy experiment");
  add_common(cmd_disk);
  static int disk_n = 4;
  static DiskRunParams dp;
  cmd_disk->add_option("--grid-n", disk_n, "Lambda = Z^2 cap [-n,n]^2")->capture_default_str();
  cmd_disk->add_option("--eps", dp.eps, "inner indicator radius")->capture_default_str();
  cmd_disk->add_option("--theta-count", dp.theta_count, "number of directions")
      ->capture_default_str();
  cmd_disk->add_option("--radial", dp.radial_nodes, "radial quadrature nodes")
      ->capture_default_str();
  cmd_disk->add_option("--angular", dp.angular_nodes, "angular quadrature nodes")
      ->capture_default_str();
  cmd_disk->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "disk";
    io.config["grid_n"] = std::to_string(disk_n);
    io.config["eps"] = std::to_string(dp.eps);
    io.config["theta_count"] = std::to_string(dp.theta_count);
    io.config["radial"] = std::to_string(dp.radial_nodes);
    io.config["angular"] = std::to_string(dp.angular_nodes);
    const ExponentialSystem2D system = ExponentialSystem2D::integer_grid(disk_n);
    const DiskReport rep = disk_run(system, dp);
    std::ostringstream msg;
    msg.precision(12);
    msg << "implied K lower " << rep.implied_k_lower << " vs threshold " << rep.threshold;
    exit_code = finish(io, "disk", {{"system", fingerprint(system.to_json())}},
                       nlohmann::json::parse(rep.to_json()), rep.to_csv(),
                       rep.bounds.singular ? kExitNumerical : kExitOk, msg.str());
  });

  // --- kadec --------------------------------------------------------------
  auto* cmd_kadec = app.add_subcommand("kadec", "perturbed-integer stability experiment");
  add_common(cmd_kadec);
  static double kd_delta = 0.1;
  static int kd_n = 64;
  cmd_kadec->add_option("--delta", kd_delta, "perturbation size in [0, 0.5)")
      ->capture_default_str();
  cmd_kadec->add_option("--n", kd_n, "index range [-n, n]")->capture_default_str();
  cmd_kadec->callback([&] {
    if (io.out_prefix.empty()) io.out_prefix = "kadec";
    io.config["delta"] = std::to_string(kd_delta);
    io.config["n"] = std::to_string(kd_n);
    const RieszBounds rb = kadec_experiment(kd_delta, kd_n);
    std::ostringstream msg;
    msg.precision(12);
    msg << "delta " << kd_delta << ": lower " << rb.lower << ", K " << rb.constant;
    exit_code = finish(io, "kadec", {}, nlohmann::json::parse(rb.to_json()),
                       one_row_csv({{"delta", kd_delta},
                                    {"lower", rb.lower},
                                    {"upper", rb.upper},
                                    {"constant", rb.constant}}),
                       rb.singular ? kExitNumerical : kExitOk, msg.str());
  });

  if (argc >= 2 && std::string(argv[1]).rfind("-", 0) != 0 &&
      app.get_subcommand_no_throw(std::string(argv[1])) == nullptr) {
    std::cerr << "unknown command '" << argv[1] << "'\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    std::vector<std::string> args = preprocess_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "numerical outcome: " << e.what() << "\n";
    return kExitNumerical;
  }
  return exit_code;
}
