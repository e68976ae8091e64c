#include "exstructa/poset.hpp"

#include <algorithm>
#include <sstream>

#include "exstructa/error.hpp"

namespace exstructa {

namespace {

SubFamily family_in(const SubFamily& outer, const SubFamily& inner, const QuiverRep& x) {
  // inner expressed in the coordinates of the RREF basis of outer
  SubFamily out;
  for (std::size_t v = 0; v < outer.size(); ++v) {
    const Matrix& o = outer[v];
    const Matrix& in = inner[v];
    if (in.rows() == 0) {
      out.emplace_back(x.p, 0, o.rows());
      continue;
    }
    std::vector<int> piv;
    for (int i = 0; i < o.rows(); ++i) {
      int c = 0;
      while (!o(i, c)) ++c;
      piv.push_back(c);
    }
    Matrix m(x.p, in.rows(), o.rows());
    for (int r = 0; r < in.rows(); ++r)
      for (std::size_t i = 0; i < piv.size(); ++i) m(r, static_cast<int>(i)) = in(r, piv[i]);
    out.push_back(canonical_rows(m));
  }
  return out;
}

}  // namespace

SubobjectPoset::SubobjectPoset(std::shared_ptr<const ObjectAtlas> atlas, const ArSet& b, PosetOptions opts)
    : atlas_(std::move(atlas)), b_(b) {
  const auto& a = *atlas_;
  Bits adm = a.admissible(b);
  for (int i = 0; i < a.size(); ++i)
    if (adm.test(i)) elements_.push_back(i);
  const int n = size();
  order_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!a.contains(elements_[j], elements_[i])) continue;
      if (opts.pairwise_admissible_order && i != j) {
        const auto& outer = a.entries()[elements_[j]].family;
        auto w = subrep(a.object(), outer);
        auto c = classify_submodule(a.catalog(), w.rep, family_in(outer, a.entries()[elements_[i]].family, a.object()));
        if (!(c.split || c.mask.is_subset_of(b))) continue;
      }
      order_[i].set(j);
    }
  }
  covers_.assign(n, {});
  for (int j = 0; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      if (!leq(i, j) || i == j) continue;
      bool below_cover = false;
      for (int c : covers_[j])
        if (leq(i, c)) { below_cover = true; break; }
      if (!below_cover) covers_[j].push_back(i);
    }
    std::sort(covers_[j].begin(), covers_[j].end());
  }
}

int SubobjectPoset::position(int atlas_index) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), atlas_index);
  if (it == elements_.end() || *it != atlas_index) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::string SubobjectPoset::label(int i) const {
  const auto& a = *atlas_;
  auto s = subrep(a.object(), a.entries()[elements_[i]].family);
  return a.catalog().multiset_name(iso_class(a.catalog(), s.rep));
}

SubobjectPoset build_poset(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x, int dim_bound,
                           PosetOptions opts) {
  return SubobjectPoset(std::make_shared<ObjectAtlas>(cat, x, dim_bound), b, opts);
}

std::vector<int> maximal_proper(const SubobjectPoset& p) {
  std::vector<int> out;
  for (int i = p.size() - 2; i >= 0; --i) {
    bool dominated = false;
    for (int m : out)
      if (p.leq(i, m)) { dominated = true; break; }
    if (!dominated) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> maximal_of(const SubobjectPoset& p, const std::vector<int>& set) {
  std::vector<int> out;
  for (int i : set) {
    bool dominated = false;
    for (int j : set)
      if (j != i && p.leq(i, j)) { dominated = true; break; }
    if (!dominated) out.push_back(i);
  }
  return out;
}

std::vector<int> minimal_of(const SubobjectPoset& p, const std::vector<int>& set) {
  std::vector<int> out;
  for (int i : set) {
    bool dominated = false;
    for (int j : set)
      if (j != i && p.leq(j, i)) { dominated = true; break; }
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<int> int_x(const SubobjectPoset& p, const std::vector<int>& subs) {
  if (subs.empty()) return {p.bottom()};
  std::vector<int> lower;
  for (int i = 0; i < p.size(); ++i) {
    bool ok = true;
    for (int s : subs)
      if (!p.leq(i, s)) { ok = false; break; }
    if (ok) lower.push_back(i);
  }
  return maximal_of(p, lower);
}

std::vector<int> sum_x(const SubobjectPoset& p, const std::vector<int>& subs) {
  if (subs.empty()) return {p.bottom()};
  std::vector<int> upper;
  for (int i = 0; i < p.size(); ++i) {
    bool ok = true;
    for (int s : subs)
      if (!p.leq(s, i)) { ok = false; break; }
    if (ok) upper.push_back(i);
  }
  return minimal_of(p, upper);
}

std::vector<int> rad_e(const SubobjectPoset& p) {
  if (p.size() <= 1) return {p.bottom()};
  return int_x(p, maximal_proper(p));
}

bool is_e_simple(const ModuleCatalog& cat, const std::vector<char>& simple_flags, const QuiverRep& x) {
  auto ids = iso_class(cat, x);
  return ids.size() == 1 && simple_flags[ids.front()];
}

bool is_semisimple(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x) {
  auto flags = oracle_simple_flags(cat, b);
  for (int id : iso_class(cat, x))
    if (!flags[id]) return false;
  return true;
}

FourthIsoResult fourth_iso_check(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& x, const SubFamily& sub,
                                 int dim_bound) {
  FourthIsoResult r;
  ObjectAtlas ax(cat, x, dim_bound);
  Bits admx = ax.admissible(b);
  int w = ax.find(sub);
  if (w < 0 || !admx.test(w)) {
    r.ok = false;
    r.defect = "X' is not an admissible subobject";
    return r;
  }
  auto q = quotient(x, sub);
  ObjectAtlas aq(cat, q.rep, dim_bound);
  Bits admq = aq.admissible(b);
  r.quotient_size = static_cast<int>(admq.count());
  std::vector<int> dom, img;
  for (int m = 0; m < ax.size(); ++m) {
    if (!admx.test(m) || !ax.contains(m, w)) continue;
    SubFamily image;
    for (std::size_t v = 0; v < sub.size(); ++v) {
      const Matrix& rows = ax.entries()[m].family[v];
      if (rows.rows() == 0) image.emplace_back(x.p, 0, q.rep.dims[v]);
      else image.push_back(canonical_rows((q.projection.maps[v] * rows.transpose()).transpose()));
    }
    int t = aq.find(image);
    if (t < 0 || !admq.test(t)) {
      r.ok = false;
      r.defect = "image of an intermediate subobject is not admissible in X/X'";
      return r;
    }
    dom.push_back(m);
    img.push_back(t);
  }
  r.interval_size = static_cast<int>(dom.size());
  auto sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.ok = false;
    r.defect = "correspondence is not injective";
    return r;
  }
  if (r.interval_size != r.quotient_size) {
    r.ok = false;
    r.defect = "correspondence is not surjective";
    return r;
  }
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j)
      if (ax.contains(dom[j], dom[i]) != aq.contains(img[j], img[i])) {
        r.ok = false;
        r.defect = "correspondence does not preserve the order";
        return r;
      }
  return r;
}

SchurReport schur_check(const ModuleCatalog& cat, const ArSet& b, const std::vector<SchurSample>& samples) {
  SchurReport rep;
  auto flags = oracle_simple_flags(cat, b);
  auto adm = [&](const QuiverRep& x, const SubFamily& u) {
    auto c = classify_submodule(cat, x, u);
    return c.split || c.mask.is_subset_of(b);
  };
  for (const auto& s : samples) {
    if (is_zero(s.f)) {
      ++rep.skipped;
      continue;
    }
    SubFamily k = kernel_family(s.src, s.f);
    SubFamily im = image_family(s.tgt, s.f);
    bool simple_src = is_e_simple(cat, flags, s.src);
    bool simple_tgt = is_e_simple(cat, flags, s.tgt);
    if (!adm(s.src, k) || !adm(s.tgt, im) || (!simple_src && !simple_tgt)) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    if (simple_src && !is_injective(s.f)) {
      rep.ok = false;
      if (rep.first_failure.empty()) rep.first_failure = "nonzero admissible map from an E-simple is not monic";
    }
    if (simple_tgt && !is_surjective(s.f)) {
      rep.ok = false;
      if (rep.first_failure.empty()) rep.first_failure = "nonzero admissible map onto an E-simple is not epic";
    }
  }
  return rep;
}

std::string poset_to_dot(const SubobjectPoset& p, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\\ndim " << p.atlas().entries()[p.entry(i)].dim << "\"];\n";
  for (int j = 0; j < p.size(); ++j)
    for (int i : p.lower_covers(j)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace exstructa
