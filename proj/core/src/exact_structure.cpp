#include "exstructa/exact_structure.hpp"

#include <algorithm>

#include "exstructa/error.hpp"

namespace exstructa {

std::string to_hex(const ArSet& b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::size_t nibbles = (b.size() + 3) / 4;
  for (std::size_t k = nibbles; k-- > 0;) {
    int v = 0;
    for (int j = 0; j < 4; ++j) {
      std::size_t bit = 4 * k + j;
      if (bit < b.size() && b.test(bit)) v |= 1 << j;
    }
    if (out.empty() && v == 0) continue;
    out.push_back(digits[v]);
  }
  return out.empty() ? "0" : out;
}

ArSet from_hex(std::string_view hex, std::size_t bits) {
  if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
  if (hex.empty()) fail(ErrorCode::InvalidConfig, "empty structure code");
  ArSet b(bits);
  std::size_t pos = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
    char ch = *it;
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else fail(ErrorCode::InvalidConfig, "bad hex digit in structure code '" + std::string(hex) + "'");
    for (int j = 0; j < 4; ++j) {
      if (!(v >> j & 1)) continue;
      if (pos + j >= bits)
        fail(ErrorCode::InvalidConfig, "structure code '" + std::string(hex) + "' names a sequence beyond " + std::to_string(bits));
      b.set(pos + j);
    }
  }
  return b;
}

ArSet ar_set_from_index(unsigned long long index, std::size_t bits) {
  ArSet b(bits);
  for (std::size_t k = 0; k < bits && k < 64; ++k)
    if (index >> k & 1ULL) b.set(k);
  return b;
}

std::string to_index_list(const ArSet& b) {
  std::string out = "{";
  bool first = true;
  for (auto k = b.find_first(); k != ArSet::npos; k = b.find_next(k)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

ExactStructure::ExactStructure(AlgebraSpec alg, ArSet b)
    : alg_(std::move(alg)), ar_(ar_sequences(alg_)), b_(std::move(b)) {
  if (b_.size() != ar_.size())
    fail(ErrorCode::InvalidConfig, "structure has " + std::to_string(b_.size()) + " bits but the algebra has " +
                                       std::to_string(ar_.size()) + " AR sequences");
}

ExactStructure ExactStructure::split(const AlgebraSpec& alg) {
  return ExactStructure(alg, ArSet(ar_sequences(alg).size()));
}

ExactStructure ExactStructure::maximal(const AlgebraSpec& alg) {
  ArSet b(ar_sequences(alg).size());
  b.set();
  return ExactStructure(alg, b);
}

int ExactStructure::ar_index(const Interval& u) const {
  auto it = std::lower_bound(ar_.begin(), ar_.end(), u, [](const ArSeq& s, const Interval& v) { return s.end < v; });
  if (it == ar_.end() || it->end != u) return -1;
  return static_cast<int>(it - ar_.begin());
}

bool ExactStructure::contains_ar(const Interval& u) const {
  int k = ar_index(u);
  return k >= 0 && b_.test(k);
}

std::vector<Interval> required_ar_ends(const AlgebraSpec& alg, const Interval& sub, const Interval& quot) {
  if (!ext_shape(alg, sub, quot))
    fail(ErrorCode::NotAnExtension, "no nonsplit extension of " + to_string(quot) + " by " + to_string(sub));
  std::vector<Interval> out;
  for (const auto& s : ar_sequences(alg)) {
    if (hom_nonzero(alg, sub, s.sub) && hom_nonzero(alg, s.end, quot)) out.push_back(s.end);
  }
  return out;
}

bool seq_in_E(const ExactStructure& e, const Interval& sub, const Interval& quot) {
  for (const auto& u : required_ar_ends(e.algebra(), sub, quot))
    if (!e.contains_ar(u)) return false;
  return true;
}

std::vector<Interval> e_simples(const ExactStructure& e) {
  const auto& alg = e.algebra();
  std::vector<Interval> out;
  for (const auto& m : indecomposables(alg)) {
    bool simple = true;
    for (int x = 1; x < m.len && simple; ++x) {
      Interval sub{wrap_vertex(alg, m.c + x), m.len - x};
      Interval quot{m.c, x};
      if (seq_in_E(e, sub, quot)) simple = false;
    }
    if (simple) out.push_back(m);
  }
  return out;
}

std::vector<Interval> e_projectives(const ExactStructure& e) {
  std::vector<Interval> out;
  for (const auto& m : indecomposables(e.algebra()))
    if (is_projective(e.algebra(), m) || !e.contains_ar(m)) out.push_back(m);
  return out;
}

bool is_aw_fast(const ExactStructure& e) {
  auto simples = e_simples(e);
  for (std::size_t k = 0; k < e.ar().size(); ++k) {
    if (!e.b().test(k)) continue;
    if (std::find(simples.begin(), simples.end(), e.ar()[k].mid_top) != simples.end()) return false;
  }
  return true;
}

ExactStructure StructureRange::iterator::operator*() const {
  return ExactStructure(range_->alg_, ar_set_from_index(index_, range_->bits_));
}

StructureRange enumerate_structures(const AlgebraSpec& alg, std::size_t cap) {
  std::size_t bits = ar_sequences(alg).size();
  if (bits > cap || bits >= 63)
    fail(ErrorCode::TooManyStructures, std::to_string(bits) + " AR sequences exceed the cap of " + std::to_string(cap));
  return StructureRange(alg, bits);
}

}  // namespace exstructa
