#pragma once

// Exact structures E(B) on mod of a Nakayama algebra, decided
// combinatorially from the interval calculus.

#include <cstddef>
#include <iterator>
#include <vector>

#include "exstructa/ar_set.hpp"
#include "exstructa/interval.hpp"

namespace exstructa {

class ExactStructure {
 public:
  ExactStructure(AlgebraSpec alg, ArSet b);
  static ExactStructure split(const AlgebraSpec& alg);
  static ExactStructure maximal(const AlgebraSpec& alg);

  const AlgebraSpec& algebra() const { return alg_; }
  const std::vector<ArSeq>& ar() const { return ar_; }
  const ArSet& b() const { return b_; }

  // index of the AR sequence ending at u, or -1 when u is projective
  int ar_index(const Interval& u) const;
  bool contains_ar(const Interval& u) const;

 private:
  AlgebraSpec alg_;
  std::vector<ArSeq> ar_;
  ArSet b_;
};

bool seq_in_E(const ExactStructure& e, const Interval& sub, const Interval& quot);
// The AR end terms u that seq_in_E(sub, quot) requires to lie in B.
std::vector<Interval> required_ar_ends(const AlgebraSpec& alg, const Interval& sub, const Interval& quot);
std::vector<Interval> e_simples(const ExactStructure& e);
std::vector<Interval> e_projectives(const ExactStructure& e);
bool is_aw_fast(const ExactStructure& e);

constexpr std::size_t kDefaultStructureCap = 20;

// All 2^|AR| structures, B running through 0 .. 2^|AR|-1 as integers.
class StructureRange {
 public:
  class iterator {
   public:
    using value_type = ExactStructure;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const StructureRange* r, unsigned long long i) : range_(r), index_(i) {}
    ExactStructure operator*() const;
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { auto t = *this; ++index_; return t; }
    bool operator==(const iterator& o) const { return index_ == o.index_; }
    bool operator!=(const iterator& o) const { return index_ != o.index_; }

   private:
    const StructureRange* range_;
    unsigned long long index_;
  };

  StructureRange(AlgebraSpec alg, std::size_t bits) : alg_(std::move(alg)), bits_(bits) {}
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, 1ULL << bits_}; }
  unsigned long long size() const { return 1ULL << bits_; }

 private:
  AlgebraSpec alg_;
  std::size_t bits_;
};

StructureRange enumerate_structures(const AlgebraSpec& alg, std::size_t cap = kDefaultStructureCap);

}  // namespace exstructa
