#include "exstructa/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "exstructa/error.hpp"
#include "exstructa/exact_structure.hpp"
#include "exstructa/oracle.hpp"

namespace exstructa {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidConfig, "bad Kupisch entry '" + tok + "'");
    }
    if (used != tok.size()) fail(ErrorCode::InvalidConfig, "bad Kupisch entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

bool is_hex(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

JobConfig load_job_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidConfig, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::InvalidConfig, "config must be a JSON object");
  static const std::set<std::string> keys{"algebra", "field", "dim_bound", "structures", "suites", "output_dir",
                                          "threads"};
  JobConfig cfg;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!keys.count(it.key())) fail(ErrorCode::InvalidConfig, "unknown config key '" + it.key() + "'");
    }
    if (j.contains("algebra")) cfg.algebra = j.at("algebra").get<std::string>();
    if (j.contains("field")) cfg.field = j.at("field").get<int>();
    if (j.contains("dim_bound")) cfg.dim_bound = j.at("dim_bound").get<int>();
    if (j.contains("structures")) {
      const auto& s = j.at("structures");
      if (s.is_string()) {
        if (s.get<std::string>() != "all") fail(ErrorCode::InvalidConfig, "structures must be \"all\" or a list");
      } else {
        cfg.structures = s.get<std::vector<std::string>>();
        if (cfg.structures.empty()) fail(ErrorCode::InvalidConfig, "structure selection is empty");
      }
    }
    if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidConfig, std::string("bad config value: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

void validate(const JobConfig& cfg) {
  if (cfg.algebra.empty()) fail(ErrorCode::InvalidConfig, "no algebra given");
  if (!supported_prime(cfg.field)) fail(ErrorCode::InvalidConfig, "field must be one of 2, 3, 5, 7");
  if (cfg.dim_bound < 1 || cfg.dim_bound > kDefaultSubmoduleBound)
    fail(ErrorCode::InvalidConfig, "dim_bound must lie in 1.." + std::to_string(kDefaultSubmoduleBound));
  for (const auto& h : cfg.structures)
    if (!is_hex(h)) fail(ErrorCode::InvalidConfig, "structure '" + h + "' is not a hex bit set");
  auto known = known_suites();
  for (const auto& s : cfg.suites)
    if (s != "all" && std::find(known.begin(), known.end(), s) == known.end())
      fail(ErrorCode::InvalidConfig, "unknown suite '" + s + "'");
  if (cfg.threads < 0) fail(ErrorCode::InvalidConfig, "threads must be >= 0");
}

ModuleCatalog load_algebra(const std::string& spec, int p) {
  if (!builtin_fixture_text(spec).empty()) return load_fixture_text(builtin_fixture_text(spec), p);
  if (spec.size() >= 2 && spec[0] == 'A' &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int n = std::stoi(spec.substr(1));
    if (n < 1 || n > 8) fail(ErrorCode::InvalidConfig, "A_n preset needs 1 <= n <= 8");
    return nakayama_catalog(linear_a(n), p);
  }
  for (auto [prefix, shape] : {std::pair{"linear:", Shape::Linear}, std::pair{"cyclic:", Shape::Cyclic}}) {
    std::string pre = prefix;
    if (spec.rfind(pre, 0) == 0) {
      auto k = parse_int_list(spec.substr(pre.size()));
      return nakayama_catalog(build_algebra(shape, static_cast<int>(k.size()), k), p);
    }
  }
  if (std::filesystem::exists(spec)) return load_fixture_file(spec, p);
  fail(ErrorCode::InvalidConfig, "unknown algebra '" + spec + "'");
}

std::vector<ArSet> select_structures(const ModuleCatalog& cat, const std::vector<std::string>& hex) {
  const std::size_t k = cat.ar_count();
  std::vector<ArSet> out;
  if (hex.empty()) {
    if (k > kDefaultStructureCap) fail(ErrorCode::TooManyStructures, std::to_string(k) + " AR sequences");
    for (unsigned long long i = 0; i < (1ULL << k); ++i) out.push_back(ar_set_from_index(i, k));
    return out;
  }
  for (const auto& h : hex) out.push_back(from_hex(h, k));
  return out;
}

ClassificationTable classify(const ModuleCatalog& cat, const std::vector<ArSet>& structures, int dim_bound,
                             int threads) {
  ClassificationTable t;
  t.algebra = cat.label;
  t.field = cat.p;
  t.dim_bound = dim_bound;
  CategoryEvaluator ev(cat, dim_bound, threads);
  t.verdicts = ev.evaluate(structures);
  for (const auto& v : t.verdicts) {
    ClassificationRow r;
    r.b_hex = to_hex(v.b);
    r.b_list = to_index_list(v.b);
    if (cat.algebra) r.aw_fast = is_aw_fast(ExactStructure(*cat.algebra, v.b));
    r.aw_brute = v.aw_brute;
    r.jh = v.jh;
    r.diamond = v.diamond;
    r.e_simple_count = static_cast<int>(v.oracle_simples.size());
    r.indecomposables = static_cast<int>(cat.size());
    r.b_size = static_cast<int>(v.b.count());
    r.counting_identity_holds = r.e_simple_count == r.indecomposables - r.b_size;
    r.aw_witness = v.aw_witness;
    r.jh_witness = v.jh_witness;
    r.diamond_witness = v.diamond_witness;
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string to_csv(const ClassificationTable& t) {
  std::ostringstream os;
  os << "B,B_list,aw_fast,aw_brute,jh,diamond,e_simple_count,indecomposables,B_size,counting_identity,"
        "aw_witness,jh_witness,diamond_witness\n";
  for (const auto& r : t.rows) {
    os << r.b_hex << ',' << csv_quote(r.b_list) << ',' << (r.aw_fast ? yes_no(*r.aw_fast) : "n/a") << ','
       << yes_no(r.aw_brute) << ',' << yes_no(r.jh) << ',' << yes_no(r.diamond) << ',' << r.e_simple_count << ','
       << r.indecomposables << ',' << r.b_size << ',' << yes_no(r.counting_identity_holds) << ','
       << csv_quote(r.aw_witness) << ',' << csv_quote(r.jh_witness) << ',' << csv_quote(r.diamond_witness) << '\n';
  }
  return os.str();
}

std::string to_markdown(const ClassificationTable& t) {
  std::ostringstream os;
  os << "# " << t.algebra << " over GF(" << t.field << "), objects up to dimension " << t.dim_bound << "\n\n";
  os << "JH, AW and diamond verdicts hold up to (dimension " << t.dim_bound << ", p = " << t.field << ").\n\n";
  os << "| B | B_list | aw_fast | aw_brute | jh | diamond | e_simple_count | indecomposables | B_size | "
        "counting_identity | aw_witness | jh_witness | diamond_witness |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : t.rows) {
    os << "| " << r.b_hex << " | " << r.b_list << " | " << (r.aw_fast ? yes_no(*r.aw_fast) : "n/a") << " | "
       << yes_no(r.aw_brute) << " | " << yes_no(r.jh) << " | " << yes_no(r.diamond) << " | " << r.e_simple_count
       << " | " << r.indecomposables << " | " << r.b_size << " | " << yes_no(r.counting_identity_holds) << " | "
       << md_escape(r.aw_witness) << " | " << md_escape(r.jh_witness) << " | " << md_escape(r.diamond_witness)
       << " |\n";
  }
  return os.str();
}

namespace {

void note_failure(SuiteResult& r, const std::string& what) {
  ++r.failures;
  r.pass = false;
  if (r.first_counterexample.empty()) r.first_counterexample = what;
}

}  // namespace

SuiteResult suite_axioms(const ModuleCatalog& cat, int dim_bound) {
  SuiteResult r;
  r.name = "axioms";
  for (const auto& b : select_structures(cat, {})) {
    auto rep = validate_exact_axioms(cat, b, dim_bound);
    ++r.cases;
    if (!rep.pass) note_failure(r, cat.label + " B=" + to_hex(b) + ": " + rep.first_failure);
  }
  r.detail = std::to_string(r.cases) + " structures at dimension bound " + std::to_string(dim_bound);
  return r;
}

SuiteResult suite_eb(const AlgebraSpec& alg, const std::vector<int>& primes) {
  SuiteResult r;
  r.name = "eb";
  const auto inds = indecomposables(alg);
  const std::size_t k = ar_sequences(alg).size();
  for (int p : primes) {
    auto cat = nakayama_catalog(alg, p);
    for (const auto& sub : inds) {
      for (const auto& quot : inds) {
        auto shape = ext_shape(alg, sub, quot);
        const auto& zs = cat.modules[cat.interval_index(quot)].rep;
        const auto& ys = cat.modules[cat.interval_index(sub)].rep;
        auto basis = ext_basis(zs, ys);
        if (static_cast<bool>(shape) != !basis.empty() || basis.size() > 1) {
          note_failure(r, alg.describe() + " GF(" + std::to_string(p) + "): Ext(" + to_string(quot) + ", " +
                              to_string(sub) + ") has dimension " + std::to_string(basis.size()) +
                              " against the interval formula");
          continue;
        }
        if (!shape) continue;
        const auto& s = basis.front();
        for (unsigned long long i = 0; i < (1ULL << k); ++i) {
          ArSet b = ar_set_from_index(i, k);
          bool fast = seq_in_E(ExactStructure(alg, b), sub, quot);
          bool oracle = admissible_monic(cat, b, s.sub, s.mid, s.monic);
          ++r.cases;
          if (fast != oracle)
            note_failure(r, alg.describe() + " GF(" + std::to_string(p) + ") B=" + to_hex(b) + ": " +
                                to_string(sub) + " -> ? -> " + to_string(quot) + " fast=" + yes_no(fast) +
                                " oracle=" + yes_no(oracle));
        }
      }
    }
  }
  r.detail = std::to_string(r.cases) + " (pair, B, p) comparisons";
  return r;
}

namespace {

std::string row_summary(const ClassificationRow& row) {
  std::ostringstream os;
  os << "B=" << row.b_hex << " aw_fast=" << (row.aw_fast ? yes_no(*row.aw_fast) : "n/a")
     << " aw_brute=" << yes_no(row.aw_brute) << " jh=" << yes_no(row.jh)
     << " counting=" << yes_no(row.counting_identity_holds);
  if (!row.aw_witness.empty()) os << " [aw: " << row.aw_witness << "]";
  if (!row.jh_witness.empty()) os << " [jh: " << row.jh_witness << "]";
  return os.str();
}

}  // namespace

SuiteResult suite_aw(const ModuleCatalog& cat, int dim_bound, int threads) {
  SuiteResult r;
  r.name = "aw";
  auto t = classify(cat, select_structures(cat, {}), dim_bound, threads);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    ++r.cases;
    bool agree = row.aw_brute == row.jh && row.jh == row.counting_identity_holds;
    if (row.aw_fast) agree = agree && *row.aw_fast == row.jh;
    if (cat.algebra) {
      auto fast = e_simples(ExactStructure(*cat.algebra, t.verdicts[i].b));
      if (static_cast<int>(fast.size()) != row.e_simple_count) {
        agree = false;
        note_failure(r, cat.label + " B=" + row.b_hex + ": fast E-simple count " + std::to_string(fast.size()) +
                            " vs oracle " + std::to_string(row.e_simple_count));
        continue;
      }
    }
    if (!agree) note_failure(r, cat.label + " " + row_summary(row));
  }
  r.detail = std::to_string(r.cases) + " structures, dimension bound " + std::to_string(dim_bound) + ", GF(" +
             std::to_string(cat.p) + ")";
  return r;
}

SuiteResult suite_counting(const ModuleCatalog& cat, int dim_bound, int threads) {
  SuiteResult r;
  r.name = "counting";
  auto t = classify(cat, select_structures(cat, {}), dim_bound, threads);
  for (const auto& row : t.rows) {
    if (!row.jh) continue;
    ++r.cases;
    if (!row.counting_identity_holds)
      note_failure(r, cat.label + " B=" + row.b_hex + ": " + std::to_string(row.e_simple_count) +
                          " E-simples but |ind| - |B| = " + std::to_string(row.indecomposables - row.b_size));
  }
  r.detail = std::to_string(r.cases) + " Jordan-Holder structures checked";
  return r;
}

SuiteResult suite_fixture(const ModuleCatalog& cat) {
  SuiteResult r;
  r.name = "fixture";
  auto fails = fixture_invariant_failures(cat);
  r.cases = static_cast<long long>(cat.size() + cat.ar_count());
  for (const auto& f : fails) note_failure(r, cat.label + ": " + f);
  r.detail = std::to_string(cat.size()) + " modules, " + std::to_string(cat.ar_count()) + " AR sequences";
  return r;
}

std::vector<std::string> known_suites() { return {"axioms", "eb", "aw", "counting", "fixture"}; }

std::vector<SuiteResult> run_verify(const ModuleCatalog& cat, const std::vector<std::string>& suites, int dim_bound,
                                    int threads) {
  std::vector<std::string> todo = suites;
  if (todo.empty() || std::find(todo.begin(), todo.end(), "all") != todo.end()) todo = known_suites();
  std::vector<SuiteResult> out;
  for (const auto& s : todo) {
    if (s == "axioms") out.push_back(suite_axioms(cat, std::min(dim_bound, kDefaultAxiomBound)));
    else if (s == "eb") {
      if (cat.algebra) out.push_back(suite_eb(*cat.algebra, {2, 3}));
      else out.push_back({"eb", true, 0, 0, "", "skipped: not a Nakayama algebra"});
    } else if (s == "aw") out.push_back(suite_aw(cat, dim_bound, threads));
    else if (s == "counting") out.push_back(suite_counting(cat, dim_bound, threads));
    else if (s == "fixture") out.push_back(suite_fixture(cat));
    else fail(ErrorCode::InvalidConfig, "unknown suite '" + s + "'");
  }
  return out;
}

std::string verify_summary_json(const std::vector<SuiteResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results)
    j.push_back({{"suite", r.name},
                 {"pass", r.pass},
                 {"cases", r.cases},
                 {"failures", r.failures},
                 {"first_counterexample", r.first_counterexample},
                 {"detail", r.detail}});
  return j.dump(2) + "\n";
}

std::string ar_quiver_dot(const ModuleCatalog& cat) {
  std::set<std::pair<int, int>> irreducible;
  for (const auto& a : cat.ar) {
    for (int m : a.middles) {
      irreducible.emplace(a.sub, m);
      irreducible.emplace(m, a.end);
    }
  }
  // radical inclusions into projectives and socle quotients of injectives
  // are irreducible as well; for interval modules both are read off directly
  if (cat.algebra) {
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto& iv = cat.modules[i].interval;
      if (!iv || iv->len < 2) continue;
      if (cat.modules[i].projective) {
        int r = cat.interval_index({wrap_vertex(*cat.algebra, iv->c + 1), iv->len - 1});
        if (r >= 0) irreducible.emplace(r, static_cast<int>(i));
      }
      int q = cat.interval_index({iv->c, iv->len - 1});
      bool injective = true;
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const auto& jv = cat.modules[j].interval;
        if (jv && jv->len == iv->len + 1 && wrap_vertex(*cat.algebra, jv->c + 1) == iv->c) injective = false;
      }
      if (injective && q >= 0) irreducible.emplace(static_cast<int>(i), q);
    }
  }
  std::ostringstream os;
  os << "digraph \"" << cat.label << "\" {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cat.size(); ++i)
    os << "  m" << i << " [label=\"" << cat.modules[i].name << "\"];\n";
  for (const auto& [a, b] : irreducible) os << "  m" << a << " -> m" << b << ";\n";
  for (const auto& a : cat.ar)
    os << "  m" << a.end << " -> m" << a.sub << " [style=dotted, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

std::vector<int> parse_object(const ModuleCatalog& cat, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              tok.end());
    int mult = 1;
    auto x = tok.rfind('x');
    if (x != std::string::npos && x + 1 < tok.size() &&
        std::all_of(tok.begin() + static_cast<long>(x) + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      mult = std::stoi(tok.substr(x + 1));
      tok = tok.substr(0, x);
    }
    int id = cat.module_index(tok);
    if (id < 0) fail(ErrorCode::InvalidConfig, "unknown module '" + tok + "' in object '" + text + "'");
    for (int i = 0; i < mult; ++i) out.push_back(id);
  }
  if (out.empty()) fail(ErrorCode::InvalidConfig, "empty object");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace exstructa
