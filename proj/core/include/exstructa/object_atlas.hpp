#pragma once

// Everything about one object X that does not depend on the exact
// structure: its submodules, their AR-socle masks and split flags, point
// sets for fast containment, and the pairs V < W with indecomposable W/V.
// Per-structure questions then reduce to bit operations on this data.

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "exstructa/ar_set.hpp"
#include "exstructa/catalog.hpp"
#include "exstructa/oracle.hpp"

namespace exstructa {

using Bits = boost::dynamic_bitset<>;

struct AtlasEntry {
  SubFamily family;
  int dim = 0;
  std::vector<int> dimvec;
  Bits points;  // the vectors of X lying in this submodule
  bool split = true;
  ArSet mask;
};

struct AtlasEdge {
  int lower = 0;
  int upper = 0;
  int cls = -1;  // catalog index of upper/lower
};

class ObjectAtlas {
 public:
  ObjectAtlas(const ModuleCatalog& cat, QuiverRep x, int dim_bound = kDefaultSubmoduleBound);

  const ModuleCatalog& catalog() const { return *cat_; }
  const QuiverRep& object() const { return x_; }
  const std::vector<int>& summands() const { return summands_; }
  const std::vector<AtlasEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int zero() const { return 0; }
  int top() const { return size() - 1; }
  int find(const SubFamily& u) const;

  bool contains(int big, int small) const { return entries_[small].points.is_subset_of(entries_[big].points); }
  const std::vector<AtlasEdge>& edges_below(int upper) const { return below_[upper]; }
  std::size_t edge_count() const;

  // iso class of entries[upper] / entries[lower]; lower must sit inside upper
  std::vector<int> quotient_class(int lower, int upper) const;
  QuiverRep subquotient(int lower, int upper) const;

  Bits admissible(const ArSet& b) const;

 private:
  const ModuleCatalog* cat_;
  QuiverRep x_;
  std::vector<int> summands_;
  std::vector<AtlasEntry> entries_;
  std::map<SubFamily, int, FamilyLess> index_;
  std::vector<std::vector<AtlasEdge>> below_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<int, int>, std::vector<int>> quotient_cache_;
};

// E-simplicity of each catalog module under B, decided on the oracle side:
// no proper nonzero submodule with admissible inclusion.
std::vector<char> oracle_simple_flags(const ModuleCatalog& cat, const ArSet& b);

}  // namespace exstructa
