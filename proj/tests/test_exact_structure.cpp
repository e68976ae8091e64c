#include <gtest/gtest.h>

#include <algorithm>

#include "exstructa/error.hpp"
#include "exstructa/exact_structure.hpp"

using namespace exstructa;

namespace {

// A_3 AR sequences in end-term order: bit 0 ends at (1,1), bit 1 at (1,2), bit 2 at (2,1)
ExactStructure a3(const std::string& hex) { return ExactStructure(linear_a(3), from_hex(hex, 3)); }

std::vector<Interval> sorted(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<AlgebraSpec> up_to_sum(int total) {
  std::vector<AlgebraSpec> out;
  for (int n = 1; n <= 4; ++n)
    for (auto& a : all_linear_algebras(n)) {
      int s = 0;
      for (int l : a.kupisch) s += l;
      if (s <= total) out.push_back(a);
    }
  out.push_back(build_algebra(Shape::Cyclic, 2, {2, 2}));
  out.push_back(build_algebra(Shape::Cyclic, 3, {3, 2, 2}));
  return out;
}

}  // namespace

TEST(ExactStructure, HexConvention) {
  ArSet b(3);
  b.set(0);
  EXPECT_EQ(to_hex(b), "1");
  b.reset(0);
  b.set(1);
  b.set(2);
  EXPECT_EQ(to_hex(b), "6");
  EXPECT_EQ(to_hex(ArSet(3)), "0");
  EXPECT_EQ(from_hex("6", 3), b);
  EXPECT_EQ(to_index_list(b), "{1,2}");
  EXPECT_EQ(ar_set_from_index(5, 3), from_hex("5", 3));
}

TEST(ExactStructure, SeqInEExamples) {
  EXPECT_FALSE(seq_in_E(a3("0"), {2, 1}, {1, 1}));
  EXPECT_TRUE(seq_in_E(a3("1"), {2, 1}, {1, 1}));
  std::vector<Interval> req{{1, 1}};
  EXPECT_EQ(required_ar_ends(linear_a(3), {2, 1}, {1, 1}), req);

  std::vector<Interval> req2{{1, 2}, {2, 1}};
  EXPECT_EQ(sorted(required_ar_ends(linear_a(3), {3, 1}, {1, 2})), req2);
  for (unsigned i = 0; i < 8; ++i) {
    auto b = ar_set_from_index(i, 3);
    EXPECT_EQ(seq_in_E(ExactStructure(linear_a(3), b), {3, 1}, {1, 2}), b.test(1) && b.test(2)) << to_hex(b);
  }
}

TEST(ExactStructure, SeqInERejectsNonExtensions) {
  try {
    seq_in_E(a3("7"), {1, 2}, {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnExtension);
  }
}

TEST(ExactStructure, ESimplesExamples) {
  std::vector<Interval> simples{{1, 1}, {2, 1}, {3, 1}};
  EXPECT_EQ(sorted(e_simples(a3("7"))), simples);
  EXPECT_EQ(e_simples(a3("2")).size(), 6u);
  std::vector<Interval> five{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 1}};
  EXPECT_EQ(sorted(e_simples(a3("1"))), five);
}

TEST(ExactStructure, EProjectivesExamples) {
  EXPECT_EQ(e_projectives(a3("0")).size(), 6u);
  std::vector<Interval> proj{{1, 3}, {2, 2}, {3, 1}};
  EXPECT_EQ(sorted(e_projectives(a3("7"))), proj);
  EXPECT_EQ(e_projectives(a3("1")).size(), 5u);
  for (const auto& alg : up_to_sum(10))
    for (const auto& e : enumerate_structures(alg))
      EXPECT_EQ(e_projectives(e).size(), indecomposables(alg).size() - e.b().count());
}

TEST(ExactStructure, AwFast) {
  EXPECT_FALSE(is_aw_fast(a3("2")));
  int aw = 0;
  for (const auto& e : enumerate_structures(linear_a(3))) aw += is_aw_fast(e);
  EXPECT_EQ(aw, 7);
  for (const auto& alg : up_to_sum(10)) EXPECT_TRUE(is_aw_fast(ExactStructure::split(alg)));
}

TEST(ExactStructure, Enumeration) {
  EXPECT_EQ(enumerate_structures(linear_a(2)).size(), 2ull);
  EXPECT_EQ(enumerate_structures(linear_a(3)).size(), 8ull);
  std::vector<std::string> hex;
  for (const auto& e : enumerate_structures(linear_a(3))) hex.push_back(to_hex(e.b()));
  std::vector<std::string> want{"0", "1", "2", "3", "4", "5", "6", "7"};
  EXPECT_EQ(hex, want);
  try {
    enumerate_structures(linear_a(4), 5);  // six AR sequences
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyStructures);
  }
  // A_7 has 21 AR sequences, above the default cap
  EXPECT_THROW(enumerate_structures(linear_a(7)), Error);
}

TEST(ExactStructure, SocleConsistency) {
  for (const auto& alg : up_to_sum(10)) {
    for (const auto& e : enumerate_structures(alg)) {
      for (std::size_t k = 0; k < e.ar().size(); ++k) {
        const auto& s = e.ar()[k];
        EXPECT_EQ(seq_in_E(e, tau(alg, s.end), s.end), e.b().test(k)) << alg.describe() << " " << to_hex(e.b());
        EXPECT_EQ(e.ar_index(s.end), static_cast<int>(k));
      }
    }
  }
}

TEST(ExactStructure, SplitStructureHasNoNonsplitSequences) {
  for (const auto& alg : up_to_sum(10)) {
    auto e = ExactStructure::split(alg);
    for (const auto& s : indecomposables(alg))
      for (const auto& q : indecomposables(alg))
        if (ext_shape(alg, s, q)) EXPECT_FALSE(seq_in_E(e, s, q));
  }
}

TEST(ExactStructure, Monotonicity) {
  for (const auto& alg : up_to_sum(8)) {
    auto n = ar_sequences(alg).size();
    std::vector<std::pair<Interval, Interval>> pairs;
    for (const auto& s : indecomposables(alg))
      for (const auto& q : indecomposables(alg))
        if (ext_shape(alg, s, q)) pairs.emplace_back(s, q);
    for (unsigned long long i = 0; i < (1ull << n); ++i) {
      ExactStructure e(alg, ar_set_from_index(i, n));
      for (std::size_t k = 0; k < n; ++k) {
        if (e.b().test(k)) continue;
        auto bigger = e.b();
        bigger.set(k);
        ExactStructure f(alg, bigger);
        for (const auto& [s, q] : pairs)
          if (seq_in_E(e, s, q)) EXPECT_TRUE(seq_in_E(f, s, q));
      }
    }
  }
}

TEST(ExactStructure, SimplesAlwaysESimple) {
  for (const auto& alg : up_to_sum(10))
    for (const auto& e : enumerate_structures(alg)) {
      auto s = e_simples(e);
      for (int i = 1; i <= alg.n; ++i) EXPECT_NE(std::find(s.begin(), s.end(), Interval{i, 1}), s.end());
    }
}

TEST(ExactStructure, MaximalStructureIsClassical) {
  for (const auto& alg : up_to_sum(10)) {
    auto e = ExactStructure::maximal(alg);
    EXPECT_EQ(e_simples(e).size(), static_cast<std::size_t>(alg.n));
    EXPECT_TRUE(is_aw_fast(e));
  }
}
