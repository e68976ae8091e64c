#include "exstructa/oracle.hpp"

#include <algorithm>
#include <functional>

#include "exstructa/error.hpp"

namespace exstructa {

bool FamilyLess::operator()(const SubFamily& a, const SubFamily& b) const {
  int da = family_dim(a), db = family_dim(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

// rows spanning the annihilator of the row space of r (as functionals)
Matrix annihilator(const Matrix& r, int n, int p) {
  if (r.rows() == 0) return Matrix::identity(p, n);
  return kernel_basis(r).transpose();
}

// coordinates of rows of v with respect to an RREF basis c (v inside span c)
Matrix rref_coordinates(const Matrix& c, const Matrix& v) {
  std::vector<int> piv;
  for (int i = 0; i < c.rows(); ++i) {
    int col = 0;
    while (!c(i, col)) ++col;
    piv.push_back(col);
  }
  Matrix out(c.p(), v.rows(), c.rows());
  for (int r = 0; r < v.rows(); ++r)
    for (int i = 0; i < c.rows(); ++i) out(r, i) = v(r, piv[i]);
  return out;
}

struct SubmoduleSearch {
  const QuiverRep& x;
  std::vector<SubFamily>& out;
  SubFamily cur;

  void run(int v) {
    const int n = x.quiver->vertices;
    if (v == n) {
      out.push_back(cur);
      return;
    }
    const int p = x.p;
    const int d = x.dims[v];
    Matrix lower(p, 0, d);
    Matrix upper = Matrix::identity(p, d);
    bool has_loop = false;
    for (std::size_t a = 0; a < x.mats.size(); ++a) {
      const auto& ar = x.quiver->arrows[a];
      if (ar.src == v && ar.tgt == v) {
        has_loop = true;
        continue;
      }
      if (ar.tgt == v && ar.src < v && cur[ar.src].rows() > 0) {
        Matrix img = cur[ar.src] * x.mats[a].transpose();
        lower = sum_rows(lower, img);
      }
      if (ar.src == v && ar.tgt < v) {
        // x in U_v needs X_a x in U_w
        Matrix ann = annihilator(cur[ar.tgt], x.dims[ar.tgt], p);
        if (ann.rows() == 0) continue;
        Matrix k = kernel_basis(ann * x.mats[a]);
        Matrix pre = k.cols() ? span_columns(k) : Matrix(p, 0, d);
        upper = intersect_rows(upper, pre);
      }
    }
    if (!rows_contain_all(upper, lower)) return;
    // subspaces between lower and upper, in coordinates of upper
    const int k = upper.rows();
    Matrix low = canonical_rows(rref_coordinates(upper, lower));
    std::vector<char> is_piv(k, 0);
    for (int i = 0; i < low.rows(); ++i) {
      int col = 0;
      while (!low(i, col)) ++col;
      is_piv[col] = 1;
    }
    std::vector<int> rest;
    for (int c = 0; c < k; ++c)
      if (!is_piv[c]) rest.push_back(c);
    for (const auto& s : all_subspaces(p, static_cast<int>(rest.size()))) {
      Matrix lifted(p, s.rows(), k);
      for (int i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < rest.size(); ++j) lifted(i, rest[j]) = s(i, static_cast<int>(j));
      Matrix coords = vstack(low, lifted);
      Matrix u = coords.rows() ? canonical_rows(coords * upper) : Matrix(p, 0, d);
      cur[v] = u;
      if (has_loop) {
        bool ok = true;
        for (std::size_t a = 0; a < x.mats.size() && ok; ++a) {
          const auto& ar = x.quiver->arrows[a];
          if (ar.src == v && ar.tgt == v && u.rows() > 0) ok = rows_contain_all(u, u * x.mats[a].transpose());
        }
        if (!ok) continue;
      }
      run(v + 1);
    }
    cur[v] = Matrix(p, 0, d);
  }
};

}  // namespace

std::vector<SubFamily> enumerate_submodules(const QuiverRep& x, int dim_bound) {
  if (x.total_dim() > dim_bound)
    fail(ErrorCode::DimensionBound, "object of dimension " + std::to_string(x.total_dim()) + " exceeds bound " +
                                        std::to_string(dim_bound));
  std::vector<SubFamily> out;
  SubmoduleSearch search{x, out, {}};
  for (int v = 0; v < x.quiver->vertices; ++v) search.cur.emplace_back(x.p, 0, x.dims[v]);
  search.run(0);
  std::sort(out.begin(), out.end(), FamilyLess{});
  return out;
}

std::vector<int> iso_class(const ModuleCatalog& cat, const QuiverRep& x) {
  if (!cat.hom_table_invertible()) fail(ErrorCode::UnrecognizedModule, "catalog Hom table is singular");
  const std::size_t n = cat.size();
  std::vector<long long> f(n);
  for (std::size_t a = 0; a < n; ++a) f[a] = hom_dim(cat.modules[a].rep, x);
  const auto& inv = cat.hom_table_inverse();
  std::vector<int> ids;
  int dim = 0;
  for (std::size_t b = 0; b < n; ++b) {
    boost::rational<long long> m(0);
    for (std::size_t a = 0; a < n; ++a) m += inv[b][a] * f[a];
    if (m.denominator() != 1 || m.numerator() < 0)
      fail(ErrorCode::UnrecognizedModule, "Hom fingerprint does not resolve into catalog modules");
    for (long long k = 0; k < m.numerator(); ++k) ids.push_back(static_cast<int>(b));
    dim += static_cast<int>(m.numerator()) * cat.modules[b].rep.total_dim();
  }
  if (dim != x.total_dim()) fail(ErrorCode::UnrecognizedModule, "Hom fingerprint disagrees with the dimension");
  return ids;
}

Decomposition decompose(const ModuleCatalog& cat, const QuiverRep& x) {
  Decomposition dec;
  dec.ids = iso_class(cat, x);
  QuiverRep cur = x;
  RepMorphism inc = identity_morphism(x);   // cur -> x
  RepMorphism proj = identity_morphism(x);  // x -> cur
  for (int id : dec.ids) {
    const QuiverRep& a = cat.modules[id].rep;
    auto alphas = hom_space(a, cur);
    auto betas = hom_space(cur, a);
    bool found = false;
    for (const auto& al : alphas) {
      for (const auto& be : betas) {
        RepMorphism ba = compose(be, al);
        if (!is_iso(ba)) continue;
        RepMorphism ba_inv;
        for (const auto& m : ba.maps) ba_inv.maps.push_back(*inverse(m));
        RepMorphism be1 = compose(ba_inv, be);  // be1 * al = 1
        dec.inclusions.push_back(compose(inc, al));
        dec.projections.push_back(compose(be1, proj));
        // continue inside ker be1
        auto ker = subrep(cur, kernel_family(cur, be1));
        RepMorphism next_proj;
        for (std::size_t v = 0; v < cur.dims.size(); ++v) {
          ColumnBasis cb(ker.inclusion.maps[v]);
          Matrix e = Matrix::identity(x.p, cur.dims[v]) - al.maps[v] * be1.maps[v];
          next_proj.maps.push_back(cb.l * e * proj.maps[v]);
        }
        inc = compose(inc, ker.inclusion);
        proj = std::move(next_proj);
        cur = std::move(ker.rep);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) fail(ErrorCode::DecompositionFailed, "cannot split off " + cat.modules[id].name);
  }
  if (cur.total_dim() != 0) fail(ErrorCode::DecompositionFailed, "summands do not exhaust the module");
  return dec;
}

std::vector<SesComponent> ses_components(const ModuleCatalog& cat, const SesInstance& s) {
  Decomposition ys = decompose(cat, s.sub);
  Decomposition zs = decompose(cat, s.quot);
  std::vector<SesComponent> out;
  for (std::size_t j = 0; j < zs.ids.size(); ++j) {
    SesInstance pb = pullback(s, cat.modules[zs.ids[j]].rep, zs.inclusions[j]);
    for (std::size_t i = 0; i < ys.ids.size(); ++i) {
      SesInstance po = pushout(pb, cat.modules[ys.ids[i]].rep, ys.projections[i]);
      out.push_back({zs.ids[j], ys.ids[i], !is_split(po)});
    }
  }
  return out;
}

ArSet socle_mask(const ModuleCatalog& cat, const SesInstance& s) {
  ArSet mask(cat.ar_count());
  if (s.sub.total_dim() == 0 || s.quot.total_dim() == 0) return mask;
  for (std::size_t k = 0; k < cat.ar_count(); ++k) {
    const QuiverRep& t = cat.modules[cat.ar[k].sub].rep;
    const QuiverRep& u = cat.modules[cat.ar[k].end].rep;
    const int hy = hom_dim(s.sub, t);
    if (hy == 0) continue;
    for (const auto& alpha : hom_space(u, s.quot)) {
      SesInstance e = pullback(s, u, alpha);
      // the pushouts along Y -> t that split are the restrictions of Hom(E, t)
      auto phis = hom_space(e.mid, t);
      int r = 0;
      if (!phis.empty()) {
        std::vector<std::vector<std::uint8_t>> rows;
        for (const auto& phi : phis) rows.push_back(flatten(compose(phi, e.monic)));
        Matrix m(s.sub.p, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        r = rank(m);
      }
      if (r < hy) {
        mask.set(k);
        break;
      }
    }
  }
  return mask;
}

SubmoduleClass classify_submodule(const ModuleCatalog& cat, const QuiverRep& x, const SubFamily& u) {
  SubmoduleClass c;
  c.mask = ArSet(cat.ar_count());
  int d = family_dim(u);
  if (d == 0 || d == x.total_dim()) return c;
  SesInstance s = ses_from_submodule(x, u);
  c.split = is_split(s);
  if (!c.split) c.mask = socle_mask(cat, s);
  return c;
}

bool admissible_monic(const ModuleCatalog& cat, const ArSet& b, const QuiverRep& src, const QuiverRep& tgt,
                      const RepMorphism& f) {
  SesInstance s = ses_from_monic(src, tgt, f);
  if (is_split(s)) return true;
  return socle_mask(cat, s).is_subset_of(b);
}

bool Subfunctor::is_active(int quot, int sub) const {
  return std::binary_search(active.begin(), active.end(), std::make_pair(quot, sub));
}

std::vector<ExtPair> ext_census(const ModuleCatalog& cat) {
  std::vector<ExtPair> out;
  for (std::size_t z = 0; z < cat.size(); ++z) {
    for (std::size_t y = 0; y < cat.size(); ++y) {
      auto basis = ext_basis(cat.modules[z].rep, cat.modules[y].rep);
      if (basis.empty()) continue;
      ExtPair e;
      e.quot = static_cast<int>(z);
      e.sub = static_cast<int>(y);
      e.dim = static_cast<int>(basis.size());
      e.basis = std::move(basis.front());
      e.mask = socle_mask(cat, e.basis);
      out.push_back(std::move(e));
    }
  }
  return out;
}

Subfunctor subfunctor_closure(const ModuleCatalog& cat, const ArSet& b) {
  Subfunctor f;
  for (const auto& e : ext_census(cat)) {
    if (e.dim > 1)
      fail(ErrorCode::ExtNotMultiplicityFree, "Ext(" + cat.modules[e.quot].name + ", " + cat.modules[e.sub].name +
                                                  ") has dimension " + std::to_string(e.dim));
    if (e.mask.is_subset_of(b)) f.active.emplace_back(e.quot, e.sub);
  }
  std::sort(f.active.begin(), f.active.end());
  return f;
}

std::string subfunctor_closure_defect(const ModuleCatalog& cat, const Subfunctor& f) {
  for (const auto& e : ext_census(cat)) {
    if (!f.is_active(e.quot, e.sub)) continue;
    for (std::size_t z2 = 0; z2 < cat.size(); ++z2) {
      const auto& zr = cat.modules[z2].rep;
      for (const auto& alpha : hom_space(zr, e.basis.quot)) {
        SesInstance pb = pullback(e.basis, zr, alpha);
        for (std::size_t y2 = 0; y2 < cat.size(); ++y2) {
          const auto& yr = cat.modules[y2].rep;
          for (const auto& beta : hom_space(e.basis.sub, yr)) {
            if (is_split(pushout(pb, yr, beta))) continue;
            if (!f.is_active(static_cast<int>(z2), static_cast<int>(y2)))
              return "active pair (" + cat.modules[e.quot].name + "," + cat.modules[e.sub].name + ") reaches inactive (" +
                     cat.modules[z2].name + "," + cat.modules[y2].name + ")";
          }
        }
      }
    }
  }
  return {};
}

ArSet subfunctor_socle(const ModuleCatalog& cat, const Subfunctor& f) {
  ArSet b(cat.ar_count());
  for (std::size_t k = 0; k < cat.ar_count(); ++k)
    if (f.is_active(cat.ar[k].end, cat.ar[k].sub)) b.set(k);
  return b;
}

bool admissible_monic(const ModuleCatalog& cat, const Subfunctor& f, const QuiverRep& src, const QuiverRep& tgt,
                      const RepMorphism& g) {
  SesInstance s = ses_from_monic(src, tgt, g);
  for (const auto& c : ses_components(cat, s))
    if (c.nonzero && !f.is_active(c.quot_id, c.sub_id)) return false;
  return true;
}

std::vector<std::vector<int>> object_multisets(const ModuleCatalog& cat, int dim_bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> grow = [&](int from, int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int i = from; i < static_cast<int>(cat.size()); ++i) {
      int d = cat.modules[i].rep.total_dim();
      if (d > left) continue;
      cur.push_back(i);
      grow(i, left - d);
      cur.pop_back();
    }
  };
  grow(0, dim_bound);
  auto dim = [&](const std::vector<int>& ids) {
    int s = 0;
    for (int i : ids) s += cat.modules[i].rep.total_dim();
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int da = dim(a), db = dim(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

QuiverRep realize(const ModuleCatalog& cat, const std::vector<int>& ids) {
  QuiverRep x = zero_rep(cat.quiver, cat.p);
  for (int i : ids) x = direct_sum(x, cat.modules[i].rep);
  return x;
}

namespace {

bool admissible_class(const SubmoduleClass& c, const ArSet& b) { return c.split || c.mask.is_subset_of(b); }

std::string family_label(const ModuleCatalog& cat, const QuiverRep& x, const SubFamily& u) {
  try {
    return cat.multiset_name(iso_class(cat, subrep(x, u).rep));
  } catch (const Error&) {
    return "dim " + std::to_string(family_dim(u));
  }
}

}  // namespace

AxiomReport validate_exact_axioms(const ModuleCatalog& cat, const ArSet& b, int dim_bound) {
  AxiomReport rep;
  auto note = [&](const std::string& what) {
    if (rep.pass) rep.first_failure = what;
    rep.pass = false;
  };
  for (const auto& ids : object_multisets(cat, dim_bound)) {
    ++rep.objects;
    QuiverRep x = realize(cat, ids);
    const std::string xname = cat.multiset_name(ids);
    auto subs = enumerate_submodules(x, dim_bound);
    std::map<SubFamily, int, FamilyLess> index;
    std::vector<SubmoduleClass> cls;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      index.emplace(subs[i], static_cast<int>(i));
      cls.push_back(classify_submodule(cat, x, subs[i]));
    }
    // A0: 0 -> X and X -> X
    ++rep.checks;
    if (!admissible_class(cls.front(), b) || !admissible_class(cls.back(), b)) note("A0 fails on " + xname);

    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!admissible_class(cls[i], b)) continue;
      const SubFamily& w = subs[i];
      SesInstance s = ses_from_submodule(x, w);

      // A1: U admissible in W and W admissible in X give U admissible in X
      auto wsub = subrep(x, w);
      for (const auto& u : enumerate_submodules(wsub.rep, dim_bound)) {
        if (!admissible_class(classify_submodule(cat, wsub.rep, u), b)) continue;
        ++rep.checks;
        auto uin = subrep(wsub.rep, u);
        SubFamily img = image_family(x, compose(wsub.inclusion, uin.inclusion));
        auto it = index.find(img);
        if (it == index.end() || !admissible_class(cls[it->second], b))
          note("A1 fails in " + xname + ": " + family_label(cat, x, img) + " inside " + family_label(cat, x, w));
      }

      // A1op: epics X -> X/W -> (X/W)/V compose; kernel W + lift(V)
      auto q = quotient(x, w);
      for (const auto& v : enumerate_submodules(q.rep, dim_bound)) {
        if (!admissible_class(classify_submodule(cat, q.rep, v), b)) continue;
        ++rep.checks;
        SubFamily pre;
        for (std::size_t vv = 0; vv < w.size(); ++vv) {
          Matrix lifted = v[vv].rows() ? (q.lift.maps[vv] * v[vv].transpose()).transpose() : Matrix(x.p, 0, x.dims[vv]);
          pre.push_back(sum_rows(w[vv], lifted));
        }
        auto it = index.find(pre);
        if (it == index.end() || !admissible_class(cls[it->second], b))
          note("A1op fails in " + xname + " over " + family_label(cat, x, w));
      }

      if (cls[i].split) continue;  // pushouts and pullbacks of split sequences split
      // A2 and A2op along Hom-basis maps to and from catalog modules
      for (std::size_t c = 0; c < cat.size(); ++c) {
        const auto& crep = cat.modules[c].rep;
        for (const auto& beta : hom_space(s.sub, crep)) {
          ++rep.checks;
          SesInstance po = pushout(s, crep, beta);
          if (!is_split(po) && !socle_mask(cat, po).is_subset_of(b))
            note("A2 fails in " + xname + ": pushout of " + family_label(cat, x, w) + " along a map to " + cat.modules[c].name);
        }
        for (const auto& alpha : hom_space(crep, s.quot)) {
          ++rep.checks;
          SesInstance pb = pullback(s, crep, alpha);
          if (!is_split(pb) && !socle_mask(cat, pb).is_subset_of(b))
            note("A2op fails in " + xname + ": pullback along a map from " + cat.modules[c].name);
        }
      }
    }
  }
  return rep;
}

}  // namespace exstructa
