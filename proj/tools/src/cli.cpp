// Copyright 2026 The trilsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "trilsd/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "trilsd/acceptance.hpp"
#include "trilsd/ensembles.hpp"
#include "trilsd/errors.hpp"
#include "trilsd/joint.hpp"
#include "trilsd/lsd.hpp"
#include "trilsd/spectra.hpp"
#include "trilsd/volume.hpp"
#include "trilsd/words.hpp"

namespace trilsd::cli {
namespace {

using json = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Every option of `app` and `sub` with its effective value, so an artifact
// can be regenerated from its own header.
json run_config(const CLI::App& app, const CLI::App& sub) {
  json cfg;
  cfg["subcommand"] = sub.get_name();
  auto collect = [&cfg](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      if (opt->get_lnames().empty()) continue;
      const std::string& name = opt->get_lnames().front();
      if (name == "help" || name == "config") continue;
      if (opt->get_expected_min() == 0) {
        cfg[name] = opt->count() > 0;
        continue;
      }
      std::string value;
      if (opt->count() > 0) {
        const auto& r = opt->results();
        for (std::size_t i = 0; i < r.size(); ++i) value += (i ? "," : "") + r[i];
      } else {
        value = opt->get_default_str();
      }
      cfg[name] = value;
    }
  };
  collect(app);
  collect(sub);
  return cfg;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string csv_header(const json& cfg) { return "# config: " + cfg.dump() + "\n"; }

json pu_json(const PuValue& v) {
  if (v.is_exact()) return to_string(v.exact);
  json o;
  o["estimate"] = v.estimate;
  o["error_bar"] = v.error_bar;
  o["error_bar_kind"] = "heuristic";
  o["sizes"] = v.n_list;
  o["raw"] = v.raw;
  return o;
}

json moment_json(const MomentEstimate& m) {
  return {{"k", m.k}, {"mean", m.mean}, {"stderr", m.std_error}, {"reps", m.reps}};
}

const std::vector<std::string> kPatternNames{"wigner", "hankel", "toeplitz", "symcirc",
                                             "revcirc"};
const std::vector<std::string> kDistNames{"gaussian", "rademacher", "uniform"};
const std::vector<std::string> kRegionNames{"full", "upper", "lower", "strict-lower"};

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::size_t workers = 0;
};

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string pattern = "wigner";
  std::string region = "upper";
  std::string dist = "gaussian";
  std::size_t n = 8;
  std::string out;
};

int do_gen(const GenArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  std::ostringstream csv;
  csv << csv_header(cfg);
  if (a.pattern == "asym-gauss") {
    const ComplexMatrixDraw d = build_asym_upper(a.n, g.seed);
    for (std::size_t j = 0; j < a.n; ++j) {
      csv << (j ? "," : "") << "re" << j + 1 << ",im" << j + 1;
    }
    csv << "\n";
    for (Eigen::Index i = 0; i < d.entries.rows(); ++i) {
      for (Eigen::Index j = 0; j < d.entries.cols(); ++j) {
        csv << (j ? "," : "") << g17(d.entries(i, j).real()) << ","
            << g17(d.entries(i, j).imag());
      }
      csv << "\n";
    }
  } else {
    const MatrixDraw d = build_patterned(parse_pattern(a.pattern), parse_region(a.region),
                                         a.n, parse_distribution(a.dist), g.seed);
    for (std::size_t j = 0; j < a.n; ++j) csv << (j ? "," : "") << "c" << j + 1;
    csv << "\n";
    for (Eigen::Index i = 0; i < d.entries.rows(); ++i) {
      for (Eigen::Index j = 0; j < d.entries.cols(); ++j) {
        csv << (j ? "," : "") << g17(d.entries(i, j));
      }
      csv << "\n";
    }
  }
  emit(a.out, csv.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EsdArgs {
  std::string pattern = "wigner";
  std::string region = "upper";
  std::string dist = "gaussian";
  std::size_t n = 200;
  std::size_t reps = 10;
  std::size_t kmax = 6;
  std::size_t bins = 101;
  double lo = -3.0;
  double hi = 3.0;
  std::string prefix;
};

int do_esd(const EsdArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  const SpectralEnsemble e = parse_ensemble(a.pattern, parse_region(a.region));
  const ReplicateRun run = run_replicates(e, a.n, parse_distribution(a.dist), a.kmax,
                                          a.reps, g.seed, g.workers, true);
  std::ostringstream eigs;
  eigs << csv_header(cfg);
  for (std::size_t r = 0; r < run.samples.size(); ++r) eigs << (r ? "," : "") << "rep_" << r;
  eigs << "\n";
  const std::size_t rows = run.samples.empty() ? 0 : run.samples.front().eigenvalues.size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t r = 0; r < run.samples.size(); ++r) {
      eigs << (r ? "," : "") << g17(run.samples[r].eigenvalues[i]);
    }
    eigs << "\n";
  }

  const Histogram h =
      histogram(std::span<const SpectrumSample>(run.samples), a.bins, a.lo, a.hi);
  std::ostringstream hist;
  hist << csv_header(cfg) << "edge_lo,edge_hi,density\n";
  for (std::size_t b = 0; b < h.density.size(); ++b) {
    hist << g17(h.edges[b]) << "," << g17(h.edges[b + 1]) << "," << g17(h.density[b]) << "\n";
  }

  json moments;
  moments["config"] = cfg;
  moments["ensemble"] = ensemble_name(e);
  moments["moments"] = json::array();
  for (const auto& m : run.moments) moments["moments"].push_back(moment_json(m));

  const std::string eigs_path = a.prefix + "_eigs.csv";
  const std::string hist_path = a.prefix + "_hist.csv";
  const std::string mom_path = a.prefix + "_moments.json";
  emit(eigs_path, eigs.str(), out);
  emit(hist_path, hist.str(), out);
  emit(mom_path, moments.dump(2) + "\n", out);
  out << eigs_path << "\n" << hist_path << "\n" << mom_path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct WordsArgs {
  std::size_t k = 2;
  std::string cls = "pair";
  std::string out;
};

std::vector<Word> words_of_class(std::size_t k, const std::string& cls) {
  if (cls == "all") return enumerate_words(2 * k);
  if (cls == "pair") return enumerate_pair_matched(k);
  if (cls == "catalan") return enumerate_catalan(k);
  if (cls == "symmetric") return enumerate_symmetric(k);
  throw std::invalid_argument("unknown word class '" + cls + "'");
}

int do_words(const WordsArgs& a, const json& cfg, std::ostream& out) {
  const auto words = words_of_class(a.k, a.cls);
  json doc;
  doc["config"] = cfg;
  doc["k"] = a.k;
  doc["class"] = a.cls;
  doc["count"] = words.size();
  doc["words"] = json::array();
  for (const Word& w : words) {
    const WordClassification c = classify(w);
    doc["words"].push_back({{"word", w.str()},
                            {"pair_matched", c.pair_matched},
                            {"catalan", c.catalan},
                            {"symmetric", c.symmetric}});
  }
  emit(a.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PuArgs {
  std::string pattern = "wigner";
  std::string word;
  std::size_t k = 0;
  std::string cls = "catalan";
  std::string method = "exact";
  std::vector<std::size_t> n_list{40, 80, 160};
  std::size_t grid = 160;
  std::size_t max_k = 4;
  std::string out;
};

PuValue pu_value(PatternKind pattern, const Word& w, MomentMethod method, const PuArgs& a,
                 std::size_t workers) {
  switch (method) {
    case MomentMethod::Exact:
      if (pattern != PatternKind::Wigner) {
        throw std::invalid_argument("the exact method needs --pattern wigner");
      }
      return PuValue::exact_value(pu_exact_wigner(w));
    case MomentMethod::Count: {
      CountLimits limits;
      limits.max_half_length = a.max_k;
      return pu_estimate(pattern, w, a.n_list, limits, workers);
    }
    case MomentMethod::Grid:
      if (pattern != PatternKind::Hankel) {
        throw std::invalid_argument("the grid method needs --pattern hankel");
      }
      return pu_grid_hankel(w, a.grid, true, workers);
  }
  throw std::logic_error("unreachable");
}

int do_pu(const PuArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  const PatternKind pattern = parse_pattern(a.pattern);
  const MomentMethod method = parse_method(a.method);
  const std::vector<Word> words =
      a.word.empty() ? words_of_class(a.k, a.cls) : std::vector<Word>{Word::parse(a.word)};
  json doc;
  doc["config"] = cfg;
  doc["results"] = json::array();
  for (const Word& w : words) {
    doc["results"].push_back({{"word", w.str()},
                              {"pattern", to_string(pattern)},
                              {"method", to_string(method)},
                              {"value", pu_json(pu_value(pattern, w, method, a, g.workers))}});
  }
  emit(a.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct MomentsArgs {
  std::string pattern = "wigner";
  std::size_t kmax = 4;
  std::string method = "exact";
  std::vector<std::size_t> n_list{40, 80, 160};
  std::size_t grid = 160;
  std::size_t max_k = 4;
  std::string out;
};

int do_moments(const MomentsArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  const PatternKind pattern = parse_pattern(a.pattern);
  MomentOptions opts;
  opts.n_list = a.n_list;
  opts.grid = a.grid;
  opts.limits.max_half_length = a.max_k;
  opts.workers = g.workers;
  const MomentTable table = moment_table(pattern, a.kmax, parse_method(a.method), opts);
  json doc;
  doc["config"] = cfg;
  doc["pattern"] = to_string(table.pattern);
  doc["method"] = to_string(table.method);
  doc["entries"] = json::array();
  for (const auto& e : table.entries) {
    json row{{"k", e.k}, {"beta", pu_json(e.beta)}};
    if (pattern == PatternKind::Wigner) row["closed_form"] = to_string(closed_moment(e.k));
    doc["entries"].push_back(row);
  }
  emit(a.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
  std::string what = "psi";
  std::size_t points = 2000;
  std::string out;
};

int do_density(const DensityArgs& a, const json& cfg, std::ostream& out) {
  const auto curve = a.what == "psi" ? psi_curve(a.points) : wigner_lsd_curve(a.points);
  std::ostringstream csv;
  csv << csv_header(cfg) << "x,density\n";
  for (const auto& p : curve) csv << g17(p.x) << "," << g17(p.density) << "\n";
  emit(a.out, csv.str(), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct JointArgs {
  std::string task = "moment";
  std::string monomial = "1,1,2,2";
  std::vector<std::string> patterns{"wigner", "wigner"};
  std::string region = "upper";
  std::string dist = "gaussian";
  std::size_t n = 400;
  std::size_t reps = 20;
  std::string wiring = "shared";
  bool control = false;
  std::string out;
};

int do_joint(const JointArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  const InputDistribution dist = parse_distribution(a.dist);
  json doc;
  doc["config"] = cfg;
  if (a.task == "moment") {
    std::vector<LabelEnsemble> ensembles;
    for (const auto& p : a.patterns) ensembles.push_back({parse_pattern(p), parse_region(a.region)});
    const JointEstimate e = joint_moment(parse_monomial(a.monomial), ensembles, a.n, dist,
                                         a.reps, g.seed, g.workers);
    doc["monomial"] = to_string(e.monomial);
    doc["mean"] = e.mean;
    doc["stderr"] = e.std_error;
    doc["n"] = e.n;
    doc["reps"] = e.reps;
  } else if (a.task == "freeness") {
    const FreenessReport r = freeness_report(a.n, a.reps, g.seed, a.control, dist, g.workers);
    doc["control"] = r.full_control;
    doc["phi_a2"] = moment_json(r.a2);
    doc["phi_b2"] = moment_json(r.b2);
    doc["phi_a2b2"] = moment_json(r.a2b2);
    doc["product"] = r.product;
    doc["gap"] = r.gap;
    doc["gap_stderr"] = r.gap_std_error;
    doc["target_gap"] = r.target_gap;
    doc["flag_threshold"] = r.flag_threshold;
    doc["non_free"] = r.non_free;
  } else {
    const SemicircleReport r =
        sum_semicircle_check(a.n, a.reps, g.seed, parse_wiring(a.wiring), dist, g.workers);
    doc["wiring"] = to_string(r.wiring);
    doc["moments"] = json::array();
    for (std::size_t i = 0; i < r.moments.size(); ++i) {
      json m = moment_json(r.moments[i]);
      m["target"] = r.targets[i];
      m["tolerance"] = r.tolerances[i];
      doc["moments"].push_back(m);
    }
    doc["asserted"] = r.asserted;
    if (r.asserted) doc["passed"] = r.passed;
  }
  emit(a.out, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<int> criteria;
  std::string out;
};

int do_verify(const VerifyArgs& a, const Globals& g, const json& cfg, std::ostream& out) {
  AcceptanceOptions opts;
  opts.seed = g.seed;
  opts.workers = g.workers;
  const auto results = run_acceptance(opts, a.criteria, [&out](const CriterionResult& r) {
    out << format_result(r) << std::endl;
  });
  bool all = true;
  json doc;
  doc["config"] = cfg;
  doc["criteria"] = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    doc["criteria"].push_back({{"id", r.id},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
  }
  const std::size_t passed =
      static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                             [](const CriterionResult& r) { return r.passed; }));
  out << passed << "/" << results.size() << " criteria passed\n";
  doc["passed"] = all;
  if (!a.out.empty()) emit(a.out, doc.dump(2) + "\n", out);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and limit moments of triangular patterned random matrices",
               "trilsd"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read flags from a TOML/INI file ([subcommand] sections)");

  Globals g;
  app.add_option("--seed", g.seed, "Master seed (env TRILSD_SEED when absent)")
      ->envname("TRILSD_SEED");
  app.add_option("--workers", g.workers, "Worker threads, 0 = hardware concurrency")
      ->check(CLI::NonNegativeNumber);

  const auto patterns = CLI::IsMember(kPatternNames);
  auto with_asym = kPatternNames;
  with_asym.push_back("asym-gauss");
  const auto dists = CLI::IsMember(kDistNames);
  const auto regions = CLI::IsMember(kRegionNames);
  const auto methods = CLI::IsMember({"exact", "count", "grid"});

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit one matrix draw as CSV");
  gen_cmd->add_option("--pattern", gen.pattern)->check(CLI::IsMember(with_asym));
  gen_cmd->add_option("--region", gen.region)->check(regions);
  gen_cmd->add_option("--dist", gen.dist)->check(dists);
  gen_cmd->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen.out, "Output path, - for stdout");

  EsdArgs esd;
  CLI::App* esd_cmd = app.add_subcommand("esd", "Sample spectra, histogram and moments");
  esd_cmd->add_option("--pattern", esd.pattern)->check(CLI::IsMember(with_asym));
  esd_cmd->add_option("--region", esd.region)->check(regions);
  esd_cmd->add_option("--dist", esd.dist)->check(dists);
  esd_cmd->add_option("--n", esd.n)->check(CLI::PositiveNumber);
  esd_cmd->add_option("--reps", esd.reps)->check(CLI::PositiveNumber);
  esd_cmd->add_option("--kmax", esd.kmax)->check(CLI::PositiveNumber);
  esd_cmd->add_option("--bins", esd.bins)->check(CLI::PositiveNumber);
  esd_cmd->add_option("--lo", esd.lo, "Histogram lower edge");
  esd_cmd->add_option("--hi", esd.hi, "Histogram upper edge");
  esd_cmd->add_option("--out-prefix", esd.prefix)->required();

  WordsArgs words;
  CLI::App* words_cmd = app.add_subcommand("words", "Enumerate and classify words");
  words_cmd->add_option("--k", words.k, "Half length")->required();
  words_cmd->add_option("--class", words.cls)
      ->check(CLI::IsMember({"all", "pair", "catalan", "symmetric"}));
  words_cmd->add_option("--out", words.out);

  PuArgs pu;
  CLI::App* pu_cmd = app.add_subcommand("pu", "Word contributions p_u(w)");
  pu_cmd->add_option("--pattern", pu.pattern)->check(patterns);
  auto* word_opt = pu_cmd->add_option("--word", pu.word, "Word such as abba");
  auto* k_opt = pu_cmd->add_option("--k", pu.k, "All words of this half length");
  word_opt->excludes(k_opt);
  pu_cmd->add_option("--class", pu.cls, "Word class used with --k")
      ->check(CLI::IsMember({"pair", "catalan", "symmetric"}));
  pu_cmd->add_option("--method", pu.method)->check(methods);
  pu_cmd->add_option("--n-list", pu.n_list, "Sizes for the count method")->delimiter(',');
  pu_cmd->add_option("--grid", pu.grid, "Grid resolution, multiple of 4")
      ->check(CLI::PositiveNumber);
  pu_cmd->add_option("--max-k", pu.max_k, "Half-length cap for counting");
  pu_cmd->add_option("--out", pu.out);

  MomentsArgs mom;
  CLI::App* mom_cmd = app.add_subcommand("moments", "Limit moments beta_2k");
  mom_cmd->add_option("--pattern", mom.pattern)->check(patterns);
  mom_cmd->add_option("--kmax", mom.kmax)->check(CLI::PositiveNumber);
  mom_cmd->add_option("--method", mom.method)->check(methods);
  mom_cmd->add_option("--n-list", mom.n_list)->delimiter(',');
  mom_cmd->add_option("--grid", mom.grid)->check(CLI::PositiveNumber);
  mom_cmd->add_option("--max-k", mom.max_k);
  mom_cmd->add_option("--out", mom.out);

  DensityArgs den;
  CLI::App* den_cmd = app.add_subcommand("density", "Density curves on a v-grid");
  den_cmd->add_option("--what", den.what)->check(CLI::IsMember({"psi", "wigner-lsd"}));
  den_cmd->add_option("--points", den.points)->check(CLI::PositiveNumber);
  den_cmd->add_option("--out", den.out);

  JointArgs joint;
  CLI::App* joint_cmd = app.add_subcommand("joint", "Joint moments of several matrices");
  joint_cmd->add_option("--task", joint.task)
      ->check(CLI::IsMember({"moment", "freeness", "semicircle"}));
  joint_cmd->add_option("--monomial", joint.monomial);
  joint_cmd->add_option("--patterns", joint.patterns, "Pattern per label")
      ->delimiter(',')
      ->check(patterns);
  joint_cmd->add_option("--region", joint.region)->check(regions);
  joint_cmd->add_option("--dist", joint.dist)->check(dists);
  joint_cmd->add_option("--n", joint.n)->check(CLI::PositiveNumber);
  joint_cmd->add_option("--reps", joint.reps)->check(CLI::Range(2, 1 << 20));
  joint_cmd->add_option("--wiring", joint.wiring)
      ->check(CLI::IsMember({"shared", "independent"}));
  joint_cmd->add_flag("--control", joint.control, "Full Wigner control for --task freeness");
  joint_cmd->add_option("--out", joint.out);

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  ver_cmd->add_option("--criteria", ver.criteria, "Subset such as 1,2,3")->delimiter(',');
  ver_cmd->add_option("--out", ver.out, "Also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (pu_cmd->parsed() && pu.word.empty() && k_opt->count() == 0) {
    err << "pu: one of --word or --k is required\n";
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const json cfg = run_config(app, *sub);
    if (sub == gen_cmd) return do_gen(gen, g, cfg, out);
    if (sub == esd_cmd) return do_esd(esd, g, cfg, out);
    if (sub == words_cmd) return do_words(words, cfg, out);
    if (sub == pu_cmd) return do_pu(pu, g, cfg, out);
    if (sub == mom_cmd) return do_moments(mom, g, cfg, out);
    if (sub == den_cmd) return do_density(den, cfg, out);
    if (sub == joint_cmd) return do_joint(joint, g, cfg, out);
    if (sub == ver_cmd) return do_verify(ver, g, cfg, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"trilsd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace trilsd::cli
