// exstructa: classify the exact structures of a representation-finite
// algebra, cross-check the fast and brute-force deciders, export graphs.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "exstructa/error.hpp"
#include "exstructa/poset.hpp"
#include "exstructa/report.hpp"

using namespace exstructa;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidConfig, "cannot write " + path.string());
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

// "sweep:<n>" expands to every linear Nakayama algebra on at most n vertices
std::vector<std::string> expand_algebras(const std::string& spec) {
  if (spec.rfind("sweep:", 0) != 0) return {spec};
  int n = std::stoi(spec.substr(6));
  if (n < 1 || n > 5) fail(ErrorCode::InvalidConfig, "sweep needs 1 <= n <= 5");
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& alg : all_linear_algebras(k)) out.push_back(alg.describe());
  return out;
}

int thread_count(const JobConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_thread_count(); }

// Expected consistency of one table: AW and diamond imply JH, and
// for Nakayama algebras the fast and brute-force verdicts coincide.
std::vector<std::string> table_check_failures(const ClassificationTable& t) {
  std::vector<std::string> out;
  for (const auto& r : t.rows) {
    if (r.aw_brute && !r.jh) out.push_back("B=" + r.b_hex + ": AW but not JH");
    if (r.diamond && !r.jh) out.push_back("B=" + r.b_hex + ": diamond but not JH");
    if (r.aw_fast && (*r.aw_fast != r.aw_brute || *r.aw_fast != r.jh))
      out.push_back("B=" + r.b_hex + ": aw_fast, aw_brute and jh disagree");
    if (r.jh && !r.counting_identity_holds) out.push_back("B=" + r.b_hex + ": JH but counting identity fails");
  }
  return out;
}

int run_classify(const JobConfig& cfg) {
  auto cat = load_algebra(cfg.algebra, cfg.field);
  auto t = classify(cat, select_structures(cat, cfg.structures), cfg.dim_bound, thread_count(cfg));
  auto md = to_markdown(t);
  std::cout << md;
  if (!cfg.output_dir.empty()) {
    write_file(cfg.output_dir, "classification.csv", to_csv(t));
    write_file(cfg.output_dir, "classification.md", md);
  }
  auto fails = table_check_failures(t);
  for (const auto& f : fails) std::cerr << "CHECK FAILED " << f << "\n";
  return fails.empty() ? kExitPass : kExitCheckFailure;
}

int run_verify(const JobConfig& cfg) {
  std::vector<SuiteResult> all;
  for (const auto& spec : expand_algebras(cfg.algebra)) {
    auto cat = load_algebra(spec, cfg.field);
    for (auto& r : exstructa::run_verify(cat, cfg.suites, cfg.dim_bound, thread_count(cfg))) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << cat.label << "] " << r.detail;
      if (!r.pass) std::cout << "; " << r.failures << " failures, first: " << r.first_counterexample;
      std::cout << "\n";
      all.push_back(std::move(r));
    }
  }
  bool ok = std::all_of(all.begin(), all.end(), [](const SuiteResult& r) { return r.pass; });
  if (!cfg.output_dir.empty()) write_file(cfg.output_dir, "verify.json", verify_summary_json(all));
  return ok ? kExitPass : kExitCheckFailure;
}

int run_graph(const JobConfig& cfg, const std::string& target, const std::string& object,
              const std::string& structure, const std::string& out) {
  auto cat = load_algebra(cfg.algebra, cfg.field);
  std::string dot;
  if (target == "ar") {
    dot = ar_quiver_dot(cat);
  } else {
    if (object.empty()) fail(ErrorCode::InvalidConfig, "--object is required for the poset target");
    auto ids = parse_object(cat, object);
    auto b = select_structures(cat, {structure.empty() ? std::string("0") : structure}).front();
    auto p = build_poset(cat, b, realize(cat, ids), cfg.dim_bound);
    dot = poset_to_dot(p, cat.multiset_name(ids) + " B=" + to_hex(b));
  }
  if (out.empty()) std::cout << dot;
  else {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::InvalidConfig, "cannot write " + out);
    f << dot;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structures on representation-finite algebras"};
  app.require_subcommand(1);

  std::string config_path;
  std::string algebra;
  int field = 0;
  int dim_bound = 0;
  int threads = -1;
  std::string output_dir;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON job configuration");
    sub->add_option("--algebra", algebra, "A<n>, linear:<kupisch>, cyclic:<kupisch>, sink3, source3 or a fixture path");
    sub->add_option("--field", field, "prime p for GF(p)");
    sub->add_option("--dim-bound", dim_bound, "largest object dimension examined");
    sub->add_option("--threads", threads, "worker threads (default EXSTRUCTA_THREADS)");
    sub->add_option("--out", output_dir, "output directory");
  };

  std::string structures;
  auto* classify_cmd = app.add_subcommand("classify", "classify exact structures");
  add_common(classify_cmd);
  classify_cmd->add_option("--structures", structures, "all or comma separated hex sets");

  std::string suites;
  auto* verify_cmd = app.add_subcommand("verify", "run cross-validation suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", suites, "all or comma separated: axioms,eb,aw,counting,fixture");

  std::string target = "ar";
  std::string object;
  std::string structure;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "export DOT graphs");
  add_common(graph_cmd);
  graph_cmd->add_option("--target", target, "ar or poset")->check(CLI::IsMember({"ar", "poset"}));
  graph_cmd->add_option("--object", object, "module multiset, e.g. P1+P3 or (1,3)+(2,1)");
  graph_cmd->add_option("--structure", structure, "hex set B (default 0)");
  graph_cmd->add_option("--output", graph_out, "DOT file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    JobConfig cfg;
    if (!config_path.empty()) cfg = load_job_config(config_path);
    if (!algebra.empty()) cfg.algebra = algebra;
    if (field) cfg.field = field;
    if (dim_bound) cfg.dim_bound = dim_bound;
    if (threads >= 0) cfg.threads = threads;
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (!structures.empty()) cfg.structures = structures == "all" ? std::vector<std::string>{} : split_list(structures);
    if (!suites.empty()) cfg.suites = split_list(suites);
    validate(cfg);

    if (*classify_cmd) return run_classify(cfg);
    if (*verify_cmd) return run_verify(cfg);
    return run_graph(cfg, target, object, structure, graph_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
