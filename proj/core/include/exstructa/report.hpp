#pragma once

// Job configuration, batch classification over the lattice of exact
// structures, the cross-validation suites and DOT exports.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exstructa/catalog.hpp"
#include "exstructa/jh.hpp"

namespace exstructa {

struct JobConfig {
  std::string algebra = "A3";  // preset name, Kupisch spec or fixture path
  int field = 2;
  int dim_bound = kDefaultCategoryBound;
  std::vector<std::string> structures;  // hex sets; empty means all
  std::vector<std::string> suites;      // verify only; empty means all
  std::string output_dir;               // empty: print only
  int threads = 0;                      // 0: EXSTRUCTA_THREADS or hardware
};

// Keys: algebra, field, dim_bound, structures ("all" or list of hex),
// suites, output_dir, threads. Unknown keys are rejected.
JobConfig load_job_config(const std::string& path);
void validate(const JobConfig& cfg);  // InvalidConfig

// Presets: "A<n>" (hereditary linear), "linear:l1,l2,..", "cyclic:l1,..",
// the built-in fixture names, or a path to a JSON fixture.
ModuleCatalog load_algebra(const std::string& spec, int p);

std::vector<ArSet> select_structures(const ModuleCatalog& cat, const std::vector<std::string>& hex);

struct ClassificationRow {
  std::string b_hex;
  std::string b_list;
  std::optional<bool> aw_fast;  // Nakayama catalogs only
  bool aw_brute = false;
  bool jh = false;
  bool diamond = false;
  int e_simple_count = 0;
  int indecomposables = 0;
  int b_size = 0;
  bool counting_identity_holds = false;
  std::string aw_witness;
  std::string jh_witness;
  std::string diamond_witness;
};

struct ClassificationTable {
  std::string algebra;
  int field = 2;
  int dim_bound = 0;
  std::vector<ClassificationRow> rows;
  std::vector<StructureVerdict> verdicts;  // aligned with rows
};

ClassificationTable classify(const ModuleCatalog& cat, const std::vector<ArSet>& structures, int dim_bound,
                             int threads);
std::string to_csv(const ClassificationTable& t);
std::string to_markdown(const ClassificationTable& t);

struct SuiteResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  long long failures = 0;
  std::string first_counterexample;
  std::string detail;
};

// Axiom validation on every structure of the catalog.
SuiteResult suite_axioms(const ModuleCatalog& cat, int dim_bound = kDefaultAxiomBound);
// seq_in_E against the oracle for every extension pair and every B, over
// each listed prime. Nakayama algebras only.
SuiteResult suite_eb(const AlgebraSpec& alg, const std::vector<int>& primes);
// is_aw_fast, aw_bruteforce, jh_category and the counting identity must agree.
SuiteResult suite_aw(const ModuleCatalog& cat, int dim_bound, int threads);
// Counting identity on the structures that are Jordan-Holder.
SuiteResult suite_counting(const ModuleCatalog& cat, int dim_bound, int threads);
// Structural checks on the AR data of a catalog.
SuiteResult suite_fixture(const ModuleCatalog& cat);

std::vector<std::string> known_suites();  // axioms, eb, aw, counting, fixture
std::vector<SuiteResult> run_verify(const ModuleCatalog& cat, const std::vector<std::string>& suites, int dim_bound,
                                    int threads);
std::string verify_summary_json(const std::vector<SuiteResult>& results);

// AR quiver: nodes are catalog modules, solid edges irreducible maps read
// off the AR sequences, dotted edges tau (end -> sub).
std::string ar_quiver_dot(const ModuleCatalog& cat);

// "P1+P3", "(1,3)+(2,1)" or "(2,1)x2+(1,1)"; names resolve against the catalog.
std::vector<int> parse_object(const ModuleCatalog& cat, const std::string& text);

}  // namespace exstructa
