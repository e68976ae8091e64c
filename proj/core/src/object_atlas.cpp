#include "exstructa/object_atlas.hpp"

#include <algorithm>

#include "exstructa/error.hpp"

namespace exstructa {

namespace {

Matrix coordinates_in(const Matrix& basis, const Matrix& rows) {
  // basis is RREF; rows lie in its span
  std::vector<int> piv;
  for (int i = 0; i < basis.rows(); ++i) {
    int c = 0;
    while (!basis(i, c)) ++c;
    piv.push_back(c);
  }
  Matrix out(basis.p(), rows.rows(), basis.rows());
  for (int r = 0; r < rows.rows(); ++r)
    for (std::size_t i = 0; i < piv.size(); ++i) out(r, static_cast<int>(i)) = rows(r, piv[i]);
  return out;
}

Bits point_set(const QuiverRep& x, const SubFamily& u) {
  const int p = x.p;
  const int n = x.total_dim();
  auto off = x.offsets();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  std::vector<std::vector<std::uint8_t>> gens;
  for (std::size_t v = 0; v < u.size(); ++v) {
    for (int r = 0; r < u[v].rows(); ++r) {
      std::vector<std::uint8_t> g(n, 0);
      for (int c = 0; c < u[v].cols(); ++c) g[off[v] + c] = u[v](r, c);
      gens.push_back(std::move(g));
    }
  }
  std::vector<std::vector<std::uint8_t>> pts{std::vector<std::uint8_t>(n, 0)};
  for (const auto& g : gens) {
    std::size_t m = pts.size();
    for (int c = 1; c < p; ++c)
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::uint8_t> w = pts[i];
        for (int j = 0; j < n; ++j) w[j] = static_cast<std::uint8_t>((w[j] + c * g[j]) % p);
        pts.push_back(std::move(w));
      }
  }
  Bits bits(total);
  for (const auto& w : pts) {
    std::size_t idx = 0;
    for (int j = n - 1; j >= 0; --j) idx = idx * p + w[j];
    bits.set(idx);
  }
  return bits;
}

}  // namespace

ObjectAtlas::ObjectAtlas(const ModuleCatalog& cat, QuiverRep x, int dim_bound) : cat_(&cat), x_(std::move(x)) {
  summands_ = iso_class(cat, x_);
  auto subs = enumerate_submodules(x_, dim_bound);
  entries_.reserve(subs.size());
  for (auto& u : subs) {
    AtlasEntry e;
    e.dim = family_dim(u);
    for (const auto& m : u) e.dimvec.push_back(m.rows());
    e.points = point_set(x_, u);
    auto c = classify_submodule(cat, x_, u);
    e.split = c.split;
    e.mask = std::move(c.mask);
    e.family = std::move(u);
    entries_.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].family, static_cast<int>(i));

  // pairs with indecomposable quotient; a quotient can only be a catalog
  // module with the same dimension vector
  std::map<std::vector<int>, std::vector<int>> by_dimvec;
  for (std::size_t c = 0; c < cat.size(); ++c) by_dimvec[cat.modules[c].rep.dims].push_back(static_cast<int>(c));
  const int maxd = cat.max_module_dim();
  below_.assign(entries_.size(), {});
  std::vector<int> diff(x_.dims.size());
  for (int w = 0; w < size(); ++w) {
    for (int v = 0; v < w; ++v) {
      int dd = entries_[w].dim - entries_[v].dim;
      if (dd < 1 || dd > maxd) continue;
      bool neg = false;
      for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = entries_[w].dimvec[k] - entries_[v].dimvec[k];
        if (diff[k] < 0) neg = true;
      }
      if (neg || !by_dimvec.count(diff)) continue;
      if (!contains(w, v)) continue;
      auto cls = quotient_class(v, w);
      if (cls.size() == 1) below_[w].push_back({v, w, cls.front()});
    }
  }
}

int ObjectAtlas::find(const SubFamily& u) const {
  auto it = index_.find(u);
  return it == index_.end() ? -1 : it->second;
}

std::size_t ObjectAtlas::edge_count() const {
  std::size_t s = 0;
  for (const auto& b : below_) s += b.size();
  return s;
}

QuiverRep ObjectAtlas::subquotient(int lower, int upper) const {
  auto w = subrep(x_, entries_[upper].family);
  SubFamily inner;
  for (std::size_t v = 0; v < w.rep.dims.size(); ++v) {
    const Matrix& lv = entries_[lower].family[v];
    if (lv.rows() == 0) inner.emplace_back(x_.p, 0, w.rep.dims[v]);
    else inner.push_back(canonical_rows(coordinates_in(entries_[upper].family[v], lv)));
  }
  return quotient(w.rep, inner).rep;
}

std::vector<int> ObjectAtlas::quotient_class(int lower, int upper) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = quotient_cache_.find({lower, upper});
    if (it != quotient_cache_.end()) return it->second;
  }
  auto cls = iso_class(*cat_, subquotient(lower, upper));
  std::lock_guard<std::mutex> lock(cache_mu_);
  quotient_cache_.emplace(std::make_pair(lower, upper), cls);
  return cls;
}

Bits ObjectAtlas::admissible(const ArSet& b) const {
  Bits out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].split || entries_[i].mask.is_subset_of(b)) out.set(i);
  return out;
}

std::vector<char> oracle_simple_flags(const ModuleCatalog& cat, const ArSet& b) {
  std::vector<char> out;
  for (const auto& m : cat.modules) {
    ObjectAtlas a(cat, m.rep, std::max(m.rep.total_dim(), kDefaultSubmoduleBound));
    auto adm = a.admissible(b);
    out.push_back(adm.count() == 2 ? 1 : 0);
  }
  return out;
}

}  // namespace exstructa
