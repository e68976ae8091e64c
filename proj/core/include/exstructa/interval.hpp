#pragma once

// Interval modules over a Nakayama algebra given by its Kupisch series.
//
// An interval is stored as (top vertex c, length len); vertices are 1-based.
// The zero object is the interval of length 0.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace exstructa {

enum class Shape { Linear, Cyclic };

struct AlgebraSpec {
  Shape shape = Shape::Linear;
  int n = 0;
  std::vector<int> kupisch;

  int kupisch_at(int vertex) const { return kupisch[vertex - 1]; }
  int indecomposable_count() const;
  std::string describe() const;
  bool operator==(const AlgebraSpec&) const = default;
};

struct Interval {
  int c = 0;
  int len = 0;

  bool is_zero() const { return len == 0; }
  auto operator<=>(const Interval&) const = default;
};

struct ArSeq {
  Interval end;
  Interval sub;
  Interval mid_top;
  Interval mid_small;  // zero when end.len == 1
};

struct ExtShape {
  enum class Case { Indecomposable, TwoTerms };
  Case kase = Case::Indecomposable;
  Interval top;
  Interval overlap;  // zero iff kase == Indecomposable
  bool operator==(const ExtShape&) const = default;
};

AlgebraSpec build_algebra(Shape shape, int n, std::vector<int> kupisch);
// Hereditary linear A_n, Kupisch series [n, n-1, ..., 1].
AlgebraSpec linear_a(int n);
// Every admissible linear Kupisch series on n vertices, in lexicographic order.
std::vector<AlgebraSpec> all_linear_algebras(int n);

int wrap_vertex(const AlgebraSpec& alg, int v);
int socle_vertex(const AlgebraSpec& alg, const Interval& m);
bool is_valid(const AlgebraSpec& alg, const Interval& m);
bool is_projective(const AlgebraSpec& alg, const Interval& m);
void require_valid(const AlgebraSpec& alg, const Interval& m);

std::vector<Interval> indecomposables(const AlgebraSpec& alg);
Interval tau(const AlgebraSpec& alg, const Interval& m);
std::vector<ArSeq> ar_sequences(const AlgebraSpec& alg);
bool hom_nonzero(const AlgebraSpec& alg, const Interval& src, const Interval& tgt);
std::optional<ExtShape> ext_shape(const AlgebraSpec& alg, const Interval& sub, const Interval& quot);
std::vector<Interval> submodules_of(const AlgebraSpec& alg, const Interval& m);

std::string to_string(const Interval& m);

}  // namespace exstructa
