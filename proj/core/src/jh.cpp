#include "exstructa/jh.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "exstructa/error.hpp"

namespace exstructa {

std::vector<int> CompositionSeries::factor_multiset() const {
  auto m = factors;
  std::sort(m.begin(), m.end());
  return m;
}

namespace {

using Multiset = std::vector<int>;

bool edge_ok(const AtlasEdge& e, const Bits& adm, const std::vector<char>& simple) {
  return adm.test(e.lower) && simple[e.cls];
}

// Factor multisets of all series of each admissible entry, with one
// backpointer per (entry, multiset) to rebuild a witness chain.
struct SeriesTable {
  struct Back {
    int lower = -1;
    Multiset from;
    int cls = -1;
  };
  std::vector<std::map<Multiset, Back>> at;
};

SeriesTable series_table(const ObjectAtlas& a, const Bits& adm, const std::vector<char>& simple) {
  SeriesTable t;
  t.at.assign(a.size(), {});
  t.at[a.zero()].emplace(Multiset{}, SeriesTable::Back{});
  for (int w = 1; w < a.size(); ++w) {
    if (!adm.test(w)) continue;
    for (const auto& e : a.edges_below(w)) {
      if (!edge_ok(e, adm, simple)) continue;
      for (const auto& [ms, back] : t.at[e.lower]) {
        Multiset next = ms;
        next.insert(std::upper_bound(next.begin(), next.end(), e.cls), e.cls);
        t.at[w].try_emplace(std::move(next), SeriesTable::Back{e.lower, ms, e.cls});
      }
    }
  }
  return t;
}

CompositionSeries rebuild(const SeriesTable& t, int top, Multiset ms) {
  CompositionSeries s;
  int w = top;
  while (w != 0) {
    const auto& back = t.at[w].at(ms);
    s.chain.push_back(w);
    s.factors.push_back(back.cls);
    ms = back.from;
    w = back.lower;
  }
  s.chain.push_back(0);
  std::reverse(s.chain.begin(), s.chain.end());
  std::reverse(s.factors.begin(), s.factors.end());
  return s;
}

std::vector<int> maxima(const ObjectAtlas& a, const Bits& adm) {
  // admissible proper subobjects not inside another one, largest first
  std::vector<int> out;
  for (int i = a.top() - 1; i >= 0; --i) {
    if (!adm.test(i)) continue;
    bool dominated = false;
    for (int m : out)
      if (a.contains(m, i)) { dominated = true; break; }
    if (!dominated) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// maximal admissible entries contained in every element of subs
std::vector<int> common_below(const ObjectAtlas& a, const Bits& adm, const std::vector<int>& subs) {
  std::vector<int> lower;
  for (int i = 0; i < a.size(); ++i) {
    if (!adm.test(i)) continue;
    bool ok = true;
    for (int s : subs)
      if (!a.contains(s, i)) { ok = false; break; }
    if (ok) lower.push_back(i);
  }
  std::vector<int> out;
  for (int i : lower) {
    bool dominated = false;
    for (int j : lower)
      if (j != i && a.contains(j, i)) { dominated = true; break; }
    if (!dominated) out.push_back(i);
  }
  return out;
}

int single_class(const ObjectAtlas& a, int lower, int upper) {
  auto c = a.quotient_class(lower, upper);
  return c.size() == 1 ? c.front() : -1;
}

}  // namespace

ObjectVerdict evaluate_object(const ObjectAtlas& a, const Bits& adm, const std::vector<char>& simple) {
  ObjectVerdict v;
  const auto& cat = a.catalog();
  const int top = a.top();

  for (int i = 1; i < top; ++i)
    if (adm.test(i) && !a.entries()[i].split) {
      v.aw1 = false;
      break;
    }
  for (int id : a.summands())
    if (!simple[id]) v.aw2 = false;

  auto mx = maxima(a, adm);
  auto rad = common_below(a, adm, mx);
  v.aw3 = rad.size() == 1 && rad.front() == a.zero();

  // every cover in the admissible poset should carry an E-simple quotient
  for (int w = 1; w <= top; ++w) {
    if (!adm.test(w)) continue;
    std::vector<int> covers;
    for (int i = w - 1; i >= 0; --i) {
      if (!adm.test(i) || !a.contains(w, i)) continue;
      bool below = false;
      for (int c : covers)
        if (a.contains(c, i)) { below = true; break; }
      if (!below) covers.push_back(i);
    }
    for (int c : covers) {
      bool found = false;
      for (const auto& e : a.edges_below(w))
        if (e.lower == c && simple[e.cls]) { found = true; break; }
      if (!found) ++v.series_anomalies;
    }
  }

  auto table = series_table(a, adm, simple);
  const auto& tops = table.at[top];
  if (tops.empty()) {
    v.jh = false;
    v.note = "no composition series";
  } else {
    v.min_len = v.max_len = static_cast<int>(tops.begin()->first.size());
    for (const auto& [ms, back] : tops) {
      v.min_len = std::min(v.min_len, static_cast<int>(ms.size()));
      v.max_len = std::max(v.max_len, static_cast<int>(ms.size()));
    }
    if (tops.size() > 1) {
      v.jh = false;
      v.witness_a = tops.begin()->first;
      v.witness_b = std::next(tops.begin())->first;
    }
  }

  for (std::size_t i = 0; i < mx.size() && v.diamond; ++i) {
    for (std::size_t j = i + 1; j < mx.size() && v.diamond; ++j) {
      int xa = single_class(a, mx[i], top);
      int xb = single_class(a, mx[j], top);
      for (int y : common_below(a, adm, {mx[i], mx[j]})) {
        int ay = single_class(a, y, mx[i]);
        int by = single_class(a, y, mx[j]);
        std::ostringstream os;
        if (ay < 0 || by < 0 || !simple[ay] || !simple[by]) {
          os << "A/Y or B/Y not E-simple for A=" << cat.multiset_name(a.quotient_class(0, mx[i]))
             << ", B=" << cat.multiset_name(a.quotient_class(0, mx[j]))
             << ", Y=" << cat.multiset_name(a.quotient_class(0, y));
        } else {
          Multiset l{xa, ay}, r{xb, by};
          std::sort(l.begin(), l.end());
          std::sort(r.begin(), r.end());
          if (l != r)
            os << "{X/A, A/Y} = {" << cat.multiset_name(l) << "} but {X/B, B/Y} = {" << cat.multiset_name(r) << "}";
        }
        if (!os.str().empty()) {
          v.diamond = false;
          v.note = os.str();
          break;
        }
      }
    }
  }
  return v;
}

ObjectVerdict evaluate_object(const ObjectAtlas& atlas, const ArSet& b) {
  return evaluate_object(atlas, atlas.admissible(b), oracle_simple_flags(atlas.catalog(), b));
}

SeriesResult composition_series(const ObjectAtlas& a, const ArSet& b, std::size_t cap) {
  SeriesResult r;
  Bits adm = a.admissible(b);
  auto simple = oracle_simple_flags(a.catalog(), b);
  // depth first from the top, lower covers in ascending atlas order
  std::vector<int> chain{a.top()};
  std::vector<int> factors;
  auto rec = [&](auto&& self, int w) -> void {
    if (r.truncated) return;
    if (w == a.zero()) {
      if (r.series.size() >= cap) {
        r.truncated = true;
        return;
      }
      CompositionSeries s;
      s.chain.assign(chain.rbegin(), chain.rend());
      s.factors.assign(factors.rbegin(), factors.rend());
      r.series.push_back(std::move(s));
      return;
    }
    for (const auto& e : a.edges_below(w)) {
      if (!edge_ok(e, adm, simple)) continue;
      chain.push_back(e.lower);
      factors.push_back(e.cls);
      self(self, e.lower);
      chain.pop_back();
      factors.pop_back();
    }
  };
  rec(rec, a.top());
  return r;
}

SeriesResult composition_series(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x, std::size_t cap) {
  ObjectAtlas a(cat, x, std::max(x.total_dim(), kDefaultSubmoduleBound));
  return composition_series(a, b, cap);
}

JhResult jh_object(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x) {
  ObjectAtlas a(cat, x, std::max(x.total_dim(), kDefaultSubmoduleBound));
  Bits adm = a.admissible(b);
  auto simple = oracle_simple_flags(cat, b);
  auto table = series_table(a, adm, simple);
  JhResult r;
  const auto& tops = table.at[a.top()];
  if (tops.empty()) {
    r.holds = false;
    return r;
  }
  r.min_len = r.max_len = static_cast<int>(tops.begin()->first.size());
  for (const auto& [ms, back] : tops) {
    r.min_len = std::min(r.min_len, static_cast<int>(ms.size()));
    r.max_len = std::max(r.max_len, static_cast<int>(ms.size()));
  }
  if (tops.size() > 1) {
    r.holds = false;
    r.witness = std::make_pair(rebuild(table, a.top(), tops.begin()->first),
                               rebuild(table, a.top(), std::next(tops.begin())->first));
  }
  return r;
}

int length(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x) {
  auto r = jh_object(cat, b, x);
  if (!r.holds) {
    std::ostringstream os;
    os << "composition series disagree (lengths " << r.min_len << ".." << r.max_len << ")";
    fail(ErrorCode::NotJordanHolder, os.str());
  }
  return r.min_len;
}

int default_thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("EXSTRUCTA_THREADS");
  if (!env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, hw));
}

CategoryEvaluator::CategoryEvaluator(const ModuleCatalog& cat, int dim_bound, int threads)
    : cat_(&cat), bound_(dim_bound), threads_(std::max(1, threads)), objects_(object_multisets(cat, dim_bound)) {}

int CategoryEvaluator::object_index(const std::vector<int>& ids) const {
  auto key = ids;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == key) return static_cast<int>(i);
  return -1;
}

namespace {

template <class F>
void parallel_for(int n, int threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

std::string key_of(const Bits& adm, const std::vector<char>& simple) {
  std::string k;
  boost::to_string(adm, k);
  k.push_back('|');
  for (char c : simple) k.push_back(c ? '1' : '0');
  return k;
}

}  // namespace

std::vector<StructureVerdict> CategoryEvaluator::evaluate(const std::vector<ArSet>& structures) const {
  const auto& cat = *cat_;
  const int ns = static_cast<int>(structures.size());
  const int no = static_cast<int>(objects_.size());

  // E-simplicity of catalog modules, from one atlas per module
  std::vector<std::unique_ptr<ObjectAtlas>> mod_atlas(cat.size());
  parallel_for(static_cast<int>(cat.size()), threads_, [&](int m) {
    const auto& rep = cat.modules[m].rep;
    mod_atlas[m] = std::make_unique<ObjectAtlas>(cat, rep, std::max(rep.total_dim(), kDefaultSubmoduleBound));
  });
  std::vector<std::vector<char>> simple(ns);
  for (int s = 0; s < ns; ++s)
    for (std::size_t m = 0; m < cat.size(); ++m)
      simple[s].push_back(mod_atlas[m]->admissible(structures[s]).count() == 2 ? 1 : 0);

  std::vector<std::vector<ObjectVerdict>> verdicts(no, std::vector<ObjectVerdict>(ns));
  parallel_for(no, threads_, [&](int o) {
    ObjectAtlas a(cat, realize(cat, objects_[o]), bound_);
    std::map<std::string, ObjectVerdict> memo;
    for (int s = 0; s < ns; ++s) {
      Bits adm = a.admissible(structures[s]);
      auto key = key_of(adm, simple[s]);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, evaluate_object(a, adm, simple[s])).first;
      verdicts[o][s] = it->second;
    }
  });

  std::vector<StructureVerdict> out(ns);
  for (int s = 0; s < ns; ++s) {
    auto& sv = out[s];
    sv.b = structures[s];
    for (std::size_t m = 0; m < cat.size(); ++m)
      if (simple[s][m]) sv.oracle_simples.push_back(static_cast<int>(m));
    sv.objects.reserve(no);
    for (int o = 0; o < no; ++o) {
      const auto& v = verdicts[o][s];
      ObjectFlags f{v.aw1, v.aw2, v.aw3, v.jh, v.diamond, v.min_len, v.max_len, v.series_anomalies};
      sv.objects.push_back(f);
      sv.anomalies += v.series_anomalies;
      const std::string name = cat.multiset_name(objects_[o]);
      if (!v.aw_consistent() && sv.aw_brute) {
        sv.aw_brute = false;
        std::ostringstream os;
        os << name << ": split=" << v.aw1 << " semisimple=" << v.aw2 << " rad0=" << v.aw3;
        sv.aw_witness = os.str();
      }
      if (!v.jh && sv.jh) {
        sv.jh = false;
        sv.jh_witness = name + ": " + (v.witness_a.empty() && v.witness_b.empty()
                                           ? v.note
                                           : "{" + cat.multiset_name(v.witness_a) + "} vs {" +
                                                 cat.multiset_name(v.witness_b) + "}");
      }
      if (!v.diamond && sv.diamond) {
        sv.diamond = false;
        sv.diamond_witness = name + ": " + v.note;
      }
    }
  }
  return out;
}

CategoryResult jh_category(const ModuleCatalog& cat, const ArSet& b, int dim_bound) {
  auto v = CategoryEvaluator(cat, dim_bound, default_thread_count()).evaluate(b);
  return {v.jh, v.jh_witness};
}

CategoryResult diamond_check(const ModuleCatalog& cat, const ArSet& b, int dim_bound) {
  auto v = CategoryEvaluator(cat, dim_bound, default_thread_count()).evaluate(b);
  return {v.diamond, v.diamond_witness};
}

CategoryResult aw_bruteforce(const ModuleCatalog& cat, const ArSet& b, int dim_bound) {
  auto v = CategoryEvaluator(cat, dim_bound, default_thread_count()).evaluate(b);
  return {v.aw_brute, v.aw_witness};
}

}  // namespace exstructa
