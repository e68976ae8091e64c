#pragma once

// The indecomposables and AR sequences of a representation-finite category,
// either generated for a Nakayama algebra or read from a JSON fixture.

#include <boost/rational.hpp>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exstructa/interval.hpp"
#include "exstructa/rep.hpp"

namespace exstructa {

struct CatalogModule {
  std::string name;
  QuiverRep rep;
  std::optional<Interval> interval;
  bool projective = false;
};

struct CatalogAr {
  std::string name;
  int end = -1;  // catalog index of the right end term
  int sub = -1;  // catalog index of the left end term
  std::vector<int> middles;
  SesInstance ses;
};

class ModuleCatalog {
 public:
  QuiverPtr quiver;
  int p = 2;
  std::string label;
  std::optional<AlgebraSpec> algebra;
  std::vector<CatalogModule> modules;
  std::vector<CatalogAr> ar;

  std::size_t size() const { return modules.size(); }
  std::size_t ar_count() const { return ar.size(); }
  int max_module_dim() const { return max_dim_; }
  int module_index(std::string_view name) const;
  int interval_index(const Interval& m) const;
  std::string module_name(int id) const { return modules[id].name; }
  std::string multiset_name(const std::vector<int>& ids) const;

  // dim Hom(A_a, A_b) over the catalog, and its inverse when it exists
  const std::vector<std::vector<int>>& hom_table() const { return hom_; }
  bool hom_table_invertible() const { return !hom_inv_.empty(); }
  const std::vector<std::vector<boost::rational<long long>>>& hom_table_inverse() const { return hom_inv_; }

  // fill derived tables; call after modules change
  void finalize();

 private:
  int max_dim_ = 0;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<boost::rational<long long>>> hom_inv_;
};

QuiverPtr nakayama_quiver(const AlgebraSpec& alg);
QuiverRep interval_to_rep(const AlgebraSpec& alg, const Interval& m, int p);
QuiverRep interval_to_rep(QuiverPtr q, const AlgebraSpec& alg, const Interval& m, int p);

// Modules in lexicographic interval order. AR sequences are found by the
// oracle: for each non-projective u the partner w with an almost split
// basis extension 0 -> w -> E -> u -> 0.
ModuleCatalog nakayama_catalog(const AlgebraSpec& alg, int p);

ModuleCatalog load_fixture(const nlohmann::json& doc, int p);
ModuleCatalog load_fixture_text(std::string_view text, int p);
ModuleCatalog load_fixture_file(const std::string& path, int p);

std::vector<std::string> builtin_fixture_names();
// empty view when there is no fixture of that name
std::string_view builtin_fixture_text(std::string_view name);

// Structural checks on the AR data: every listed sequence is a nonsplit
// kernel-cokernel pair with the declared middle, almost split on both
// sides against the catalog. Returns one line per failure.
std::vector<std::string> fixture_invariant_failures(const ModuleCatalog& cat);

// Almost split test of a sequence with indecomposable ends, against the catalog.
bool is_almost_split(const ModuleCatalog& cat, const SesInstance& s, int sub_id, int end_id);

}  // namespace exstructa
