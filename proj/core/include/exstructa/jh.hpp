#pragma once

// Composition series, the Jordan-Holder, diamond and Artin-Wedderburn
// properties, and the length function, decided by brute force over all
// objects up to a dimension bound.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exstructa/object_atlas.hpp"
#include "exstructa/poset.hpp"

namespace exstructa {

constexpr int kDefaultCategoryBound = 6;
constexpr std::size_t kDefaultSeriesCap = 10000;

struct CompositionSeries {
  std::vector<int> chain;    // atlas indices, 0 = X_0 < ... < X_n = X
  std::vector<int> factors;  // catalog index of X_{i+1}/X_i
  std::vector<int> factor_multiset() const;
};

struct SeriesResult {
  std::vector<CompositionSeries> series;
  bool truncated = false;
};

SeriesResult composition_series(const ObjectAtlas& atlas, const ArSet& b, std::size_t cap = kDefaultSeriesCap);
SeriesResult composition_series(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x,
                                std::size_t cap = kDefaultSeriesCap);

// Per-object verdict under one structure.
struct ObjectVerdict {
  bool aw1 = true;   // every admissible subobject splits
  bool aw2 = true;   // semisimple
  bool aw3 = true;   // rad is {0}
  bool jh = true;
  bool diamond = true;
  int min_len = 0;
  int max_len = 0;
  int series_anomalies = 0;  // poset covers whose quotient is not E-simple
  std::vector<int> witness_a;  // two factor multisets when jh fails
  std::vector<int> witness_b;
  std::string note;

  bool aw_consistent() const { return aw1 == aw2 && aw2 == aw3; }
};

ObjectVerdict evaluate_object(const ObjectAtlas& atlas, const Bits& admissible, const std::vector<char>& simple);
ObjectVerdict evaluate_object(const ObjectAtlas& atlas, const ArSet& b);

struct JhResult {
  bool holds = true;
  std::optional<std::pair<CompositionSeries, CompositionSeries>> witness;
  int min_len = 0;
  int max_len = 0;
};
JhResult jh_object(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x);

// Common length of composition series; NotJordanHolder when they differ.
int length(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x);

// Compact per-object flags kept for every (structure, object) pair.
struct ObjectFlags {
  bool aw1 = true, aw2 = true, aw3 = true, jh = true, diamond = true;
  int min_len = 0, max_len = 0;
  int anomalies = 0;
};

struct StructureVerdict {
  ArSet b;
  bool aw_brute = true;
  bool jh = true;
  bool diamond = true;
  std::string aw_witness;
  std::string jh_witness;
  std::string diamond_witness;
  std::vector<int> oracle_simples;  // catalog indices
  std::vector<ObjectFlags> objects;  // aligned with CategoryEvaluator::objects()
  int anomalies = 0;
};

class CategoryEvaluator {
 public:
  CategoryEvaluator(const ModuleCatalog& cat, int dim_bound = kDefaultCategoryBound, int threads = 1);

  const ModuleCatalog& catalog() const { return *cat_; }
  int dim_bound() const { return bound_; }
  const std::vector<std::vector<int>>& objects() const { return objects_; }
  int object_index(const std::vector<int>& ids) const;

  std::vector<StructureVerdict> evaluate(const std::vector<ArSet>& structures) const;
  StructureVerdict evaluate(const ArSet& b) const { return evaluate(std::vector<ArSet>{b}).front(); }

 private:
  const ModuleCatalog* cat_;
  int bound_;
  int threads_;
  std::vector<std::vector<int>> objects_;
};

struct CategoryResult {
  bool holds = true;
  std::string witness;
};
CategoryResult jh_category(const ModuleCatalog& cat, const ArSet& b, int dim_bound = kDefaultCategoryBound);
CategoryResult diamond_check(const ModuleCatalog& cat, const ArSet& b, int dim_bound = kDefaultCategoryBound);
CategoryResult aw_bruteforce(const ModuleCatalog& cat, const ArSet& b, int dim_bound = kDefaultCategoryBound);

// Worker count from EXSTRUCTA_THREADS, capped by the hardware; at least 1.
int default_thread_count();

}  // namespace exstructa
