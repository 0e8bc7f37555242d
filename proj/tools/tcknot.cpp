// tcknot: enumeration and tabulation of triple-crossing knot diagrams.

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcknot/enumerate.hpp"
#include "tcknot/errors.hpp"
#include "tcknot/invariants.hpp"
#include "tcknot/spd.hpp"
#include "tcknot/tabulate.hpp"

#ifndef TCKNOT_DATA_DIR
#define TCKNOT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace tcknot;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kError = 1, kViolation = 2, kPartial = 3 };

struct RunConfig {
  std::string n_range;
  double budget_secs = 0;
  std::int64_t node_cap = 0;
  int threads = 0;
  bool fold_mirror = true;
  std::string format = "json";
  std::string out;
  std::string resume;
  std::string input;
  std::string reference = std::string(TCKNOT_DATA_DIR) + "/reference_knots.csv";
  std::string pd_source = std::string(TCKNOT_DATA_DIR) + "/knots_pd.txt";
  bool homfly = true;
};

int report_error(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
  return kError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// Writes to --out when given, else stdout.
void emit(const RunConfig& cfg, const std::string& text) {
  if (!cfg.out.empty()) {
    write_file(cfg.out, text);
    return;
  }
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

// "5" or "2..5", inside 1..6.
std::pair<int, int> parse_range(const std::string& s) {
  const auto bad = [&] { return ValidationError("config", "n-range must be N or A..B within 1..6, got '" + s + "'"); };
  int lo = 0, hi = 0;
  try {
    const std::size_t dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      if (used != s.size()) throw bad();
    } else {
      lo = std::stoi(s.substr(0, dots), &used);
      if (used != dots) throw bad();
      const std::string rest = s.substr(dots + 2);
      hi = std::stoi(rest, &used);
      if (used != rest.size()) throw bad();
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (lo < 1 || hi > 6 || lo > hi) throw bad();
  return {lo, hi};
}

void check_budget(const RunConfig& cfg, const CLI::App& sub) {
  const auto given = [&](const std::string& name) {
    const CLI::Option* o = sub.get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--budget-secs") && !(cfg.budget_secs > 0))
    throw ValidationError("config", "budget must be positive");
  if (given("--node-cap") && cfg.node_cap <= 0) throw ValidationError("config", "node cap must be positive");
  if (cfg.threads < 0) throw ValidationError("config", "thread count must be non-negative");
}

fs::path run_path(const fs::path& dir, int n) { return dir / ("run_" + std::to_string(n) + ".jsonl"); }
fs::path resume_path(const fs::path& dir, int n) { return dir / ("resume_n" + std::to_string(n) + ".json"); }
fs::path classes_path(const fs::path& dir) { return dir / "classes.jsonl"; }

// Complete runs in the artifact directory, ascending n.
std::vector<EnumerationRun> load_runs(const fs::path& dir) {
  std::vector<EnumerationRun> runs;
  if (!fs::is_directory(dir)) return runs;
  for (int n = 1; n <= 6; ++n) {
    const fs::path p = run_path(dir, n);
    if (!fs::exists(p)) continue;
    EnumerationRun r = run_from_jsonl(read_file(p.string()));
    if (r.complete) runs.push_back(std::move(r));
  }
  return runs;
}

std::vector<KnotClass> load_classes(const fs::path& path) {
  std::vector<KnotClass> classes;
  if (!fs::exists(path)) return classes;
  std::istringstream in(read_file(path.string()));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) classes.push_back(class_from_record(json::parse(line)));
  return classes;
}

std::vector<ReferenceKnot> load_reference_if_present(const std::string& path) {
  if (!fs::exists(path)) return {};
  return load_reference(path);
}

// ---- subcommands -------------------------------------------------------------

int cmd_invariants(const RunConfig& cfg) {
  const TripleDiagram d = parse_spd_diagram(read_file(cfg.input));
  json j;
  j["crossings"] = d.crossing_count();
  HalfLaurent jones = 1;
  Laurent delta = 1;
  std::optional<Laurent2> homfly_value;
  if (!d.is_unknot_stub()) {
    jones = jones_triple(d);
    const Orientation o = natural_orientations(d).front();
    const DoubleDiagram dd = convert_to_double(d);
    const Orientation od = double_orientation(d, o);
    delta = alexander(dd, od);
    if (cfg.homfly) {
      try {
        homfly_value = homfly(dd, od);
      } catch (const BudgetExceeded&) {
      }
    }
  } else {
    homfly_value = Laurent2(1);
  }
  j["jones"] = jones.to_string();
  j["alexander"] = delta.to_string();
  if (homfly_value)
    j["homfly"] = homfly_value->to_string();
  else
    j["homfly"] = nullptr;
  j["breadth"] = breadth(delta);
  j["monic"] = is_monic(delta);
  emit(cfg, j.dump(2));
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ValidationError("config", "enumerate needs --out DIR");
  const auto [lo, hi] = parse_range(cfg.n_range);
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  EnumerationOptions opt;
  opt.fold_mirror = cfg.fold_mirror;
  opt.threads = cfg.threads;
  opt.budget.node_cap = cfg.node_cap;
  const auto start = std::chrono::steady_clock::now();
  json summary = json::array();
  for (int n = lo; n <= hi; ++n) {
    std::optional<ResumeState> resume;
    const fs::path rp = cfg.resume.empty() ? resume_path(dir, n) : fs::path(cfg.resume);
    if (fs::exists(rp)) {
      ResumeState r = ResumeState::from_json(json::parse(read_file(rp.string())));
      if (r.n == n) resume = std::move(r);
      else if (!cfg.resume.empty() && lo == hi) throw Error("resume state is for n=" + std::to_string(r.n));
    }
    if (cfg.budget_secs > 0) {
      const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      opt.budget.wall_seconds = std::max(1e-3, cfg.budget_secs - used);
    }
    EnumerationRun run = enumerate_projections(n, opt, resume ? &*resume : nullptr);
    json row;
    row["n"] = n;
    if (!run.complete) {
      write_file(resume_path(dir, n), run.resume->to_json().dump());
      row["status"] = "partial";
      row["resume"] = resume_path(dir, n).string();
      summary.push_back(row);
      std::cout << summary.dump(2) << '\n';
      return kPartial;
    }
    write_file(run_path(dir, n), run_to_jsonl(run));
    if (fs::exists(resume_path(dir, n))) fs::remove(resume_path(dir, n));
    row["status"] = "complete";
    row["projections"] = run.projections.size();
    row["canonical_maps"] = run.canonical_maps;
    row["knot_projections"] = run.knot_projections;
    summary.push_back(row);
  }
  std::cout << summary.dump(2) << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ValidationError("config", "classify needs --out DIR");
  const fs::path dir(cfg.out);
  std::vector<EnumerationRun> runs = load_runs(dir);
  if (!cfg.n_range.empty()) {
    const auto [lo, hi] = parse_range(cfg.n_range);
    std::erase_if(runs, [lo = lo, hi = hi](const EnumerationRun& r) { return r.n < lo || r.n > hi; });
  }
  ClassifyOptions opt;
  opt.threads = cfg.threads;
  opt.fold_mirror = cfg.fold_mirror;
  std::vector<KnotClass> classes = classify(runs, opt);
  name_classes(classes, load_reference_if_present(cfg.reference));
  std::string text;
  for (const KnotClass& k : classes) text += class_record(k).dump() + '\n';
  fs::create_directories(dir);
  write_file(classes_path(dir), text);
  json j;
  j["runs"] = runs.size();
  j["classes"] = classes.size();
  j["composites"] = std::count_if(classes.begin(), classes.end(), [](const KnotClass& k) { return k.composite; });
  j["ambiguous"] = std::count_if(classes.begin(), classes.end(), [](const KnotClass& k) { return k.ambiguous; });
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_report(const RunConfig& cfg) {
  const TableFormat format = table_format_from_string(cfg.format);
  const fs::path dir(cfg.out.empty() ? "." : cfg.out);
  const std::vector<EnumerationRun> runs = load_runs(dir);
  std::vector<KnotClass> classes = load_classes(classes_path(dir));
  const std::vector<ReferenceKnot> refs = load_reference_if_present(cfg.reference);
  name_classes(classes, refs);
  const std::vector<CountRow> counts = count_table(runs, classes);
  const ConjectureReport report = conjecture_report(classes, refs);
  if (format == TableFormat::Json) {
    json j;
    j["counts"] = json::parse(emit_counts(counts, format));
    j["classes"] = json::parse(emit_table(classes, format));
    j["conjecture"] = report.to_json();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << emit_counts(counts, format);
    std::cout << emit_table(classes, format);
  }
  return report.any_violation() ? kViolation : kOk;
}

int cmd_tikz(const RunConfig& cfg) {
  emit(cfg, emit_tikz(parse_spd_diagram(read_file(cfg.input))));
  return kOk;
}

// Reference CSV from the PD table: `name c2 Y|N PD` per line, # comments.
int cmd_reference(const RunConfig& cfg) {
  std::istringstream in(read_file(cfg.pd_source));
  std::vector<ReferenceKnot> refs;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, alt, pd;
    int c2 = 0;
    if (!(fields >> name >> c2 >> alt) || (alt != "Y" && alt != "N"))
      throw ParseError("bad PD table line " + std::to_string(line_no));
    std::getline(fields, pd);
    refs.push_back(reference_from_pd(name, c2, alt == "Y", pd));
  }
  emit(cfg, reference_to_csv(refs));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple-crossing knot enumeration and tabulation"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = default)");
    sub->add_option("--fold-mirror", cfg.fold_mirror, "Identify mirror images (true/false)");
    sub->add_option("--format", cfg.format, "json, csv or latex");
    sub->add_option("--reference", cfg.reference, "Reference knot CSV");
  };

  auto* inv = app.add_subcommand("invariants", "Invariants of an sPD diagram file");
  inv->add_option("file", cfg.input, "sPD file")->required();
  inv->add_option("--out", cfg.out, "Output file");
  inv->add_flag("!--no-homfly", cfg.homfly, "Skip HOMFLY");

  auto* en = app.add_subcommand("enumerate", "Enumerate projections for each n");
  en->add_option("--n", cfg.n_range, "N or A..B within 1..6")->required();
  en->add_option("--budget-secs", cfg.budget_secs, "Wall-clock budget in seconds");
  en->add_option("--node-cap", cfg.node_cap, "Search node budget");
  en->add_option("--out", cfg.out, "Artifact directory")->required();
  en->add_option("--resume", cfg.resume, "Resume state file");
  add_common(en);

  auto* cl = app.add_subcommand("classify", "Classify all diagrams of the stored runs");
  cl->add_option("--out", cfg.out, "Artifact directory")->required();
  cl->add_option("--n", cfg.n_range, "Restrict to N or A..B");
  add_common(cl);

  auto* rep = app.add_subcommand("report", "Count table, class table and conjecture check");
  rep->add_option("--out", cfg.out, "Artifact directory");
  add_common(rep);

  auto* tk = app.add_subcommand("tikz", "TikZ drawing of an sPD diagram file");
  tk->add_option("file", cfg.input, "sPD file")->required();
  tk->add_option("--out", cfg.out, "Output file");

  auto* ref = app.add_subcommand("reference", "Build the reference CSV from a PD table");
  ref->add_option("--pd", cfg.pd_source, "PD table");
  ref->add_option("--out", cfg.out, "Output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what());
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) check_budget(cfg, *sub);
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    if (*inv) return cmd_invariants(cfg);
    if (*en) return cmd_enumerate(cfg);
    if (*cl) return cmd_classify(cfg);
    if (*rep) return cmd_report(cfg);
    if (*tk) return cmd_tikz(cfg);
    if (*ref) return cmd_reference(cfg);
  } catch (const ValidationError& e) {
    return report_error(e.kind(), e.what());
  } catch (const ParseError& e) {
    return report_error("parse", e.what());
  } catch (const BudgetExceeded& e) {
    return report_error("budget", e.what());
  } catch (const Error& e) {
    return report_error("error", e.what());
  } catch (const std::exception& e) {
    return report_error("internal", e.what());
  }
  return kError;
}
