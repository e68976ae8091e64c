#pragma once

// Brute-force ground truth over GF(p): submodule enumeration, Krull-Schmidt
// decomposition, AR-socle masks of short exact sequences and the exact
// structure axioms.
//
// Admissibility is decided from the AR socle of a sequence: bit k of
// socle_mask(s) is set when some pullback along u_k -> Z followed by some
// pushout along Y -> tau u_k turns s into a nonsplit sequence, i.e. a
// nonzero multiple of the k-th AR sequence. s lies in E(B) iff its mask is
// contained in B.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exstructa/ar_set.hpp"
#include "exstructa/catalog.hpp"
#include "exstructa/rep.hpp"

namespace exstructa {

constexpr int kDefaultSubmoduleBound = 7;
constexpr int kDefaultAxiomBound = 5;

struct FamilyLess {
  bool operator()(const SubFamily& a, const SubFamily& b) const;
};

// Every subrepresentation of x as a canonical subspace family, sorted by
// dimension then bytes. Throws DimensionBound above the bound.
std::vector<SubFamily> enumerate_submodules(const QuiverRep& x, int dim_bound = kDefaultSubmoduleBound);

// Multiset of catalog indices (sorted) with x isomorphic to their sum.
std::vector<int> iso_class(const ModuleCatalog& cat, const QuiverRep& x);

struct Decomposition {
  std::vector<int> ids;
  std::vector<RepMorphism> inclusions;   // A_i -> x
  std::vector<RepMorphism> projections;  // x -> A_i
};
Decomposition decompose(const ModuleCatalog& cat, const QuiverRep& x);

struct SesComponent {
  int quot_id = -1;
  int sub_id = -1;
  bool nonzero = false;
};
std::vector<SesComponent> ses_components(const ModuleCatalog& cat, const SesInstance& s);

ArSet socle_mask(const ModuleCatalog& cat, const SesInstance& s);

// split flag and mask of 0 -> U -> x -> x/U -> 0; the mask is only
// computed for nonsplit sequences (split ones have empty socle)
struct SubmoduleClass {
  bool split = true;
  ArSet mask;
};
SubmoduleClass classify_submodule(const ModuleCatalog& cat, const QuiverRep& x, const SubFamily& u);

bool admissible_monic(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& src, const QuiverRep& tgt,
                      const RepMorphism& f);

// A closed subfunctor of Ext^1 on a catalog with one-dimensional Ext
// components, recorded by its active (quotient, sub) pairs.
struct Subfunctor {
  std::vector<std::pair<int, int>> active;
  bool is_active(int quot, int sub) const;
};

struct ExtPair {
  int quot = -1;
  int sub = -1;
  int dim = 0;
  SesInstance basis;  // first basis element
  ArSet mask;
};
// All catalog pairs with nonzero Ext^1(quot, sub).
std::vector<ExtPair> ext_census(const ModuleCatalog& cat);

// The largest subfunctor whose AR socle is B: a pair is active iff the
// socle of its basis sequence lies inside B. Throws ExtNotMultiplicityFree.
Subfunctor subfunctor_closure(const ModuleCatalog& cat, const ArSet& b);
// first violation of the propagation rule, empty when closed
std::string subfunctor_closure_defect(const ModuleCatalog& cat, const Subfunctor& f);
// AR sequences whose (end, sub) pair is active
ArSet subfunctor_socle(const ModuleCatalog& cat, const Subfunctor& f);

bool admissible_monic(const ModuleCatalog& cat, const Subfunctor& f, const QuiverRep& src, const QuiverRep& tgt,
                      const RepMorphism& g);

// Objects up to isomorphism as multisets of catalog modules, by total
// dimension then lexicographically. Excludes the zero object.
std::vector<std::vector<int>> object_multisets(const ModuleCatalog& cat, int dim_bound);
QuiverRep realize(const ModuleCatalog& cat, const std::vector<int>& ids);

struct AxiomReport {
  bool pass = true;
  std::string first_failure;
  long long checks = 0;
  int objects = 0;
};
AxiomReport validate_exact_axioms(const ModuleCatalog& cat, const ArSet& b, int dim_bound = kDefaultAxiomBound);

}  // namespace exstructa
