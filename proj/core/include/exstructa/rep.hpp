#pragma once

// Representations of a bound quiver over GF(p) and the linear algebra of
// their morphisms, kernels, cokernels, pullbacks, pushouts and extensions.

#include <memory>
#include <string>
#include <vector>

#include "exstructa/linalg.hpp"

namespace exstructa {

struct Arrow {
  std::string name;
  int src = 0;  // 0-based vertex
  int tgt = 0;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  // relation paths as arrow indices in traversal order (first arrow applied first)
  std::vector<std::vector<int>> relations;

  int arrow_index(const std::string& name) const;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

struct QuiverRep {
  QuiverPtr quiver;
  int p = 2;
  std::vector<int> dims;
  std::vector<Matrix> mats;  // mats[a] is dims[tgt] x dims[src]

  int total_dim() const;
  std::vector<int> offsets() const;  // start of each vertex in the flattened space
  // shapes and relations; returns an empty string when fine
  std::string defect() const;
  bool operator==(const QuiverRep& o) const { return dims == o.dims && mats == o.mats; }
};

QuiverRep zero_rep(QuiverPtr q, int p);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// A morphism is a family of per-vertex matrices; the source and target
// representations travel separately (usually inside a SesInstance).
struct RepMorphism {
  std::vector<Matrix> maps;  // maps[v] is dim tgt_v x dim src_v

  bool operator==(const RepMorphism& o) const { return maps == o.maps; }
};

RepMorphism zero_morphism(const QuiverRep& src, const QuiverRep& tgt);
RepMorphism identity_morphism(const QuiverRep& x);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const RepMorphism& f, int s);
bool is_morphism(const QuiverRep& src, const QuiverRep& tgt, const RepMorphism& f);
bool is_zero(const RepMorphism& f);
bool is_injective(const RepMorphism& f);
bool is_surjective(const RepMorphism& f);
bool is_iso(const RepMorphism& f);
std::vector<std::uint8_t> flatten(const RepMorphism& f);

struct SesInstance {
  QuiverRep sub;
  QuiverRep mid;
  QuiverRep quot;
  RepMorphism monic;
  RepMorphism epic;
};

// empty string when the sequence is a kernel-cokernel pair
std::string ses_defect(const SesInstance& s);

std::vector<RepMorphism> hom_space(const QuiverRep& x, const QuiverRep& y);
int hom_dim(const QuiverRep& x, const QuiverRep& y);

// Subrepresentations given by per-vertex subspaces in canonical row form.
using SubFamily = std::vector<Matrix>;

bool is_stable(const QuiverRep& x, const SubFamily& u);
int family_dim(const SubFamily& u);
SubFamily image_family(const QuiverRep& tgt, const RepMorphism& f);
SubFamily kernel_family(const QuiverRep& src, const RepMorphism& f);
bool family_contains(const SubFamily& big, const SubFamily& small);

struct SubrepResult {
  QuiverRep rep;
  RepMorphism inclusion;
};
struct QuotientResult {
  QuiverRep rep;
  RepMorphism projection;
  RepMorphism lift;  // a vertexwise linear section, not a morphism in general
};

SubrepResult subrep(const QuiverRep& x, const SubFamily& u);
SubrepResult subrep_from_columns(const QuiverRep& x, const std::vector<Matrix>& cols);
QuotientResult quotient(const QuiverRep& x, const SubFamily& u);

// 0 -> U -> X -> X/U -> 0 for a subrepresentation U
SesInstance ses_from_submodule(const QuiverRep& x, const SubFamily& u);
// the cokernel sequence of an injective morphism; throws NotMonic
SesInstance ses_from_monic(const QuiverRep& src, const QuiverRep& tgt, const RepMorphism& f);

// pull back s along alpha: A -> s.quot; the result ends in A
SesInstance pullback(const SesInstance& s, const QuiverRep& a, const RepMorphism& alpha);
// push out s along beta: s.sub -> C; the result starts in C
SesInstance pushout(const SesInstance& s, const QuiverRep& c, const RepMorphism& beta);

bool is_split(const SesInstance& s);

// Basis of Ext^1(z, y) realised as concrete sequences 0 -> y -> E -> z -> 0.
std::vector<SesInstance> ext_basis(const QuiverRep& z, const QuiverRep& y);
int ext_dim(const QuiverRep& z, const QuiverRep& y);

}  // namespace exstructa
