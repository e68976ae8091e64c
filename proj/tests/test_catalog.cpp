#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "exstructa/catalog.hpp"
#include "exstructa/error.hpp"
#include "exstructa/oracle.hpp"
#include "test_support.hpp"

using namespace exstructa;
using exstructa::testing::catalog;
using exstructa::testing::id;

TEST(Catalog, BuiltinFixtures) {
  auto names = builtin_fixture_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "sink3"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "source3"), names.end());
  EXPECT_TRUE(builtin_fixture_text("nope").empty());
}

TEST(Catalog, FixtureShapes) {
  const auto& sink = catalog("sink3");
  EXPECT_EQ(sink.size(), 6u);
  EXPECT_EQ(sink.ar_count(), 3u);
  EXPECT_EQ(sink.ar[0].end, id(sink, "I2"));
  EXPECT_EQ(sink.ar[0].sub, id(sink, "S2"));
  EXPECT_EQ(sink.ar[1].sub, id(sink, "P3"));
  EXPECT_EQ(sink.ar[1].end, id(sink, "S1"));
  EXPECT_EQ(sink.ar[2].sub, id(sink, "P1"));
  EXPECT_EQ(sink.ar[2].end, id(sink, "S3"));
  const auto& src = catalog("source3");
  EXPECT_EQ(src.size(), 6u);
  EXPECT_EQ(src.ar_count(), 3u);
  EXPECT_EQ(src.max_module_dim(), 3);
}

TEST(Catalog, FixtureInvariantsHold) {
  for (const char* name : {"sink3", "source3", "A2", "A3", "A4", "C22"}) {
    EXPECT_TRUE(fixture_invariant_failures(catalog(name)).empty()) << name;
    EXPECT_TRUE(fixture_invariant_failures(catalog(name, 3)).empty()) << name;
  }
}

TEST(Catalog, CorruptedFixtureIsReported) {
  auto c = load_fixture_file(std::string(EXSTRUCTA_FIXTURE_DIR) + "/corrupted_source3.json", 2);
  EXPECT_FALSE(fixture_invariant_failures(c).empty());
}

TEST(Catalog, AlmostSplitSequences) {
  for (const char* name : {"sink3", "source3", "A3"}) {
    const auto& c = catalog(name);
    for (const auto& a : c.ar) EXPECT_TRUE(is_almost_split(c, a.ses, a.sub, a.end)) << name << " " << a.name;
  }
  // a split sequence is never almost split
  const auto& a2 = catalog("A2");
  auto s1 = a2.modules[a2.interval_index({1, 1})].rep;
  auto s2 = a2.modules[a2.interval_index({2, 1})].rep;
  auto x = direct_sum(s2, s1);
  auto subs = enumerate_submodules(x);
  for (const auto& u : subs) {
    if (family_dim(u) != 1) continue;
    auto s = ses_from_submodule(x, u);
    if (iso_class(a2, s.sub) == std::vector<int>{a2.interval_index({2, 1})})
      EXPECT_FALSE(is_almost_split(a2, s, a2.interval_index({2, 1}), a2.interval_index({1, 1})));
  }
}

TEST(Catalog, NakayamaOrderMatchesIntervalCalculus) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& alg : all_linear_algebras(n)) {
      auto c = nakayama_catalog(alg, 2);
      auto seqs = ar_sequences(alg);
      ASSERT_EQ(c.ar.size(), seqs.size());
      for (std::size_t k = 0; k < seqs.size(); ++k) {
        EXPECT_EQ(c.ar[k].end, c.interval_index(seqs[k].end));
        EXPECT_EQ(c.ar[k].sub, c.interval_index(seqs[k].sub));
      }
      EXPECT_EQ(c.size(), indecomposables(alg).size());
    }
  }
}

TEST(Catalog, HomTableInverse) {
  for (const char* name : {"sink3", "A3", "C22"}) {
    const auto& c = catalog(name);
    ASSERT_TRUE(c.hom_table_invertible()) << name;
    const auto& h = c.hom_table();
    const auto& inv = c.hom_table_inverse();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        boost::rational<long long> acc = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
          if (h[i][k] != 0) acc += inv[k][j] * boost::rational<long long>(h[i][k]);
        EXPECT_TRUE(acc == boost::rational<long long>(i == j ? 1 : 0)) << i << "," << j;
      }
  }
}

TEST(Catalog, LoadErrors) {
  auto code = [](const std::string& text) {
    try {
      load_fixture_text(text, 2);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidConfig;
  };
  EXPECT_EQ(code("{not json"), ErrorCode::InvalidFixture);
  EXPECT_EQ(code(R"({"vertices":["1"],"arrows":[{"name":"a","src":"1","tgt":"9"}],"modules":[],"ar_sequences":[]})"),
            ErrorCode::InvalidFixture);
  auto doc = nlohmann::json::parse(builtin_fixture_text("sink3"));
  doc["modules"][0]["dims"] = {1};
  EXPECT_EQ(code(doc.dump()), ErrorCode::InvalidFixture);
}

TEST(Catalog, MultisetNames) {
  const auto& c = catalog("sink3");
  EXPECT_EQ(c.multiset_name({id(c, "P1"), id(c, "P3")}), "P1+P3");
  const auto& a = catalog("A3");
  EXPECT_EQ(a.module_name(a.interval_index({2, 1})), "(2,1)");
}
