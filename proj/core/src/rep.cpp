#include "exstructa/rep.hpp"

#include "exstructa/error.hpp"

namespace exstructa {

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].name == name) return static_cast<int>(a);
  return -1;
}

int QuiverRep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

std::vector<int> QuiverRep::offsets() const {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

std::string QuiverRep::defect() const {
  if (!quiver) return "representation without quiver";
  if (static_cast<int>(dims.size()) != quiver->vertices) return "dimension vector has wrong length";
  if (mats.size() != quiver->arrows.size()) return "one matrix per arrow expected";
  for (std::size_t a = 0; a < mats.size(); ++a) {
    const auto& ar = quiver->arrows[a];
    if (mats[a].rows() != dims[ar.tgt] || mats[a].cols() != dims[ar.src])
      return "matrix for arrow " + ar.name + " has the wrong shape";
    if (mats[a].p() != p) return "matrix for arrow " + ar.name + " is over the wrong field";
  }
  for (const auto& path : quiver->relations) {
    if (path.empty()) continue;
    Matrix cur = Matrix::identity(p, dims[quiver->arrows[path.front()].src]);
    for (int a : path) cur = mats[a] * cur;
    if (!cur.is_zero()) {
      std::string name;
      for (int a : path) name += quiver->arrows[a].name + " ";
      return "relation " + name + "does not vanish";
    }
  }
  return {};
}

QuiverRep zero_rep(QuiverPtr q, int p) {
  QuiverRep r;
  r.p = p;
  r.dims.assign(q->vertices, 0);
  for (std::size_t a = 0; a < q->arrows.size(); ++a) r.mats.emplace_back(p, 0, 0);
  r.quiver = std::move(q);
  return r;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  QuiverRep r;
  r.quiver = a.quiver;
  r.p = a.p;
  r.dims.resize(a.dims.size());
  for (std::size_t v = 0; v < a.dims.size(); ++v) r.dims[v] = a.dims[v] + b.dims[v];
  for (std::size_t k = 0; k < a.mats.size(); ++k) r.mats.push_back(block_diag(a.mats[k], b.mats[k]));
  return r;
}

RepMorphism zero_morphism(const QuiverRep& src, const QuiverRep& tgt) {
  RepMorphism f;
  for (std::size_t v = 0; v < src.dims.size(); ++v) f.maps.emplace_back(src.p, tgt.dims[v], src.dims[v]);
  return f;
}

RepMorphism identity_morphism(const QuiverRep& x) {
  RepMorphism f;
  for (int d : x.dims) f.maps.push_back(Matrix::identity(x.p, d));
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
  return h;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(f.maps[v] + g.maps[v]);
  return h;
}

RepMorphism scale(const RepMorphism& f, int s) {
  RepMorphism h;
  for (const auto& m : f.maps) h.maps.push_back(m.scaled(s));
  return h;
}

bool is_morphism(const QuiverRep& src, const QuiverRep& tgt, const RepMorphism& f) {
  if (f.maps.size() != src.dims.size()) return false;
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    if (f.maps[v].rows() != tgt.dims[v] || f.maps[v].cols() != src.dims[v]) return false;
  for (std::size_t a = 0; a < src.mats.size(); ++a) {
    const auto& ar = src.quiver->arrows[a];
    if (tgt.mats[a] * f.maps[ar.src] != f.maps[ar.tgt] * src.mats[a]) return false;
  }
  return true;
}

bool is_zero(const RepMorphism& f) {
  for (const auto& m : f.maps)
    if (!m.is_zero()) return false;
  return true;
}

bool is_injective(const RepMorphism& f) {
  for (const auto& m : f.maps)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_surjective(const RepMorphism& f) {
  for (const auto& m : f.maps)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool is_iso(const RepMorphism& f) {
  for (const auto& m : f.maps)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

std::vector<std::uint8_t> flatten(const RepMorphism& f) {
  std::vector<std::uint8_t> out;
  for (const auto& m : f.maps) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

std::string ses_defect(const SesInstance& s) {
  for (const QuiverRep* r : {&s.sub, &s.mid, &s.quot}) {
    auto d = r->defect();
    if (!d.empty()) return d;
  }
  if (!is_morphism(s.sub, s.mid, s.monic)) return "monic is not a morphism";
  if (!is_morphism(s.mid, s.quot, s.epic)) return "epic is not a morphism";
  if (!is_injective(s.monic)) return "monic is not injective";
  if (!is_surjective(s.epic)) return "epic is not surjective";
  for (std::size_t v = 0; v < s.mid.dims.size(); ++v) {
    if (!(s.epic.maps[v] * s.monic.maps[v]).is_zero()) return "epic does not kill the image of the monic";
    if (s.sub.dims[v] + s.quot.dims[v] != s.mid.dims[v]) return "sequence is not exact in the middle";
  }
  return {};
}

namespace {

Matrix hom_system(const QuiverRep& x, const QuiverRep& y, std::vector<int>& off) {
  const int nv = static_cast<int>(x.dims.size());
  off.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + y.dims[v] * x.dims[v];
  int neq = 0;
  for (const auto& ar : x.quiver->arrows) neq += y.dims[ar.tgt] * x.dims[ar.src];
  Matrix sys(x.p, neq, off[nv]);
  int row = 0;
  const int p = x.p;
  for (std::size_t a = 0; a < x.mats.size(); ++a) {
    const auto& ar = x.quiver->arrows[a];
    const int v = ar.src, w = ar.tgt;
    const Matrix& ya = y.mats[a];
    const Matrix& xa = x.mats[a];
    for (int i = 0; i < y.dims[w]; ++i) {
      for (int j = 0; j < x.dims[v]; ++j, ++row) {
        std::uint8_t* eq = sys.row_ptr(row);
        // + sum_k Y_a[i][k] F_v[k][j]
        for (int k = 0; k < y.dims[v]; ++k) {
          int c = off[v] + k * x.dims[v] + j;
          eq[c] = static_cast<std::uint8_t>((eq[c] + ya(i, k)) % p);
        }
        // - sum_k F_w[i][k] X_a[k][j]
        for (int k = 0; k < x.dims[w]; ++k) {
          int c = off[w] + i * x.dims[w] + k;
          eq[c] = static_cast<std::uint8_t>((eq[c] + (p - xa(k, j))) % p);
        }
      }
    }
  }
  return sys;
}

}  // namespace

std::vector<RepMorphism> hom_space(const QuiverRep& x, const QuiverRep& y) {
  std::vector<int> off;
  Matrix sys = hom_system(x, y, off);
  Matrix k = kernel_basis(sys);
  std::vector<RepMorphism> out;
  const int nv = static_cast<int>(x.dims.size());
  for (int b = 0; b < k.cols(); ++b) {
    RepMorphism f;
    for (int v = 0; v < nv; ++v) {
      Matrix m(x.p, y.dims[v], x.dims[v]);
      for (int r = 0; r < y.dims[v]; ++r)
        for (int c = 0; c < x.dims[v]; ++c) m(r, c) = k(off[v] + r * x.dims[v] + c, b);
      f.maps.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const QuiverRep& x, const QuiverRep& y) {
  std::vector<int> off;
  Matrix sys = hom_system(x, y, off);
  return sys.cols() - rank(sys);
}

bool is_stable(const QuiverRep& x, const SubFamily& u) {
  for (std::size_t a = 0; a < x.mats.size(); ++a) {
    const auto& ar = x.quiver->arrows[a];
    const Matrix& src = u[ar.src];
    if (src.rows() == 0) continue;
    Matrix img = src * x.mats[a].transpose();
    if (!rows_contain_all(u[ar.tgt], img)) return false;
  }
  return true;
}

int family_dim(const SubFamily& u) {
  int s = 0;
  for (const auto& m : u) s += m.rows();
  return s;
}

SubFamily image_family(const QuiverRep& tgt, const RepMorphism& f) {
  SubFamily out;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    if (f.maps[v].cols() == 0) out.emplace_back(tgt.p, 0, tgt.dims[v]);
    else out.push_back(span_columns(f.maps[v]));
  }
  return out;
}

SubFamily kernel_family(const QuiverRep& src, const RepMorphism& f) {
  SubFamily out;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    Matrix k = kernel_basis(f.maps[v]);
    if (k.cols() == 0) out.emplace_back(src.p, 0, src.dims[v]);
    else out.push_back(span_columns(k));
  }
  return out;
}

bool family_contains(const SubFamily& big, const SubFamily& small) {
  for (std::size_t v = 0; v < big.size(); ++v)
    if (!rows_contain_all(big[v], small[v])) return false;
  return true;
}

SubrepResult subrep_from_columns(const QuiverRep& x, const std::vector<Matrix>& cols) {
  SubrepResult r;
  r.rep.quiver = x.quiver;
  r.rep.p = x.p;
  std::vector<ColumnBasis> bases;
  for (std::size_t v = 0; v < cols.size(); ++v) {
    bases.emplace_back(cols[v]);
    r.rep.dims.push_back(cols[v].cols());
    r.inclusion.maps.push_back(cols[v]);
  }
  for (std::size_t a = 0; a < x.mats.size(); ++a) {
    const auto& ar = x.quiver->arrows[a];
    r.rep.mats.push_back(bases[ar.tgt].coordinates(x.mats[a] * bases[ar.src].k));
  }
  return r;
}

SubrepResult subrep(const QuiverRep& x, const SubFamily& u) {
  std::vector<Matrix> cols;
  for (const auto& m : u) cols.push_back(m.transpose());
  for (std::size_t v = 0; v < u.size(); ++v)
    if (u[v].rows() == 0) cols[v] = Matrix(x.p, x.dims[v], 0);
  return subrep_from_columns(x, cols);
}

QuotientResult quotient(const QuiverRep& x, const SubFamily& u) {
  QuotientResult q;
  q.rep.quiver = x.quiver;
  q.rep.p = x.p;
  const int p = x.p;
  for (std::size_t v = 0; v < u.size(); ++v) {
    const Matrix& rows = u[v];
    const int n = x.dims[v];
    std::vector<int> piv;
    std::vector<char> is_piv(n, 0);
    for (int i = 0; i < rows.rows(); ++i) {
      int c = 0;
      while (!rows(i, c)) ++c;
      piv.push_back(c);
      is_piv[c] = 1;
    }
    std::vector<int> rest;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) rest.push_back(c);
    const int qd = static_cast<int>(rest.size());
    Matrix proj(p, qd, n), lift(p, n, qd);
    for (int t = 0; t < qd; ++t) {
      proj(t, rest[t]) = 1;
      lift(rest[t], t) = 1;
      for (std::size_t i = 0; i < piv.size(); ++i)
        proj(t, piv[i]) = static_cast<std::uint8_t>((p - rows(static_cast<int>(i), rest[t])) % p);
    }
    q.rep.dims.push_back(qd);
    q.projection.maps.push_back(std::move(proj));
    q.lift.maps.push_back(std::move(lift));
  }
  for (std::size_t a = 0; a < x.mats.size(); ++a) {
    const auto& ar = x.quiver->arrows[a];
    q.rep.mats.push_back(q.projection.maps[ar.tgt] * x.mats[a] * q.lift.maps[ar.src]);
  }
  return q;
}

SesInstance ses_from_submodule(const QuiverRep& x, const SubFamily& u) {
  auto s = subrep(x, u);
  auto q = quotient(x, u);
  return SesInstance{std::move(s.rep), x, std::move(q.rep), std::move(s.inclusion), std::move(q.projection)};
}

SesInstance ses_from_monic(const QuiverRep& src, const QuiverRep& tgt, const RepMorphism& f) {
  if (!is_morphism(src, tgt, f)) fail(ErrorCode::NotMonic, "map is not a morphism of representations");
  if (!is_injective(f)) fail(ErrorCode::NotMonic, "map is not injective");
  auto q = quotient(tgt, image_family(tgt, f));
  return SesInstance{src, tgt, std::move(q.rep), f, std::move(q.projection)};
}

SesInstance pullback(const SesInstance& s, const QuiverRep& a, const RepMorphism& alpha) {
  QuiverRep amb = direct_sum(s.mid, a);
  std::vector<Matrix> cols;
  for (std::size_t v = 0; v < s.mid.dims.size(); ++v) {
    Matrix k = kernel_basis(hstack(s.epic.maps[v], -alpha.maps[v]));
    cols.push_back(std::move(k));
  }
  auto e = subrep_from_columns(amb, cols);
  RepMorphism monic, epic;
  for (std::size_t v = 0; v < cols.size(); ++v) {
    ColumnBasis cb(cols[v]);
    Matrix into = vstack(s.monic.maps[v], Matrix(a.p, a.dims[v], s.sub.dims[v]));
    monic.maps.push_back(cb.coordinates(into));
    Matrix pr = hstack(Matrix(a.p, a.dims[v], s.mid.dims[v]), Matrix::identity(a.p, a.dims[v]));
    epic.maps.push_back(pr * cols[v]);
  }
  return SesInstance{s.sub, std::move(e.rep), a, std::move(monic), std::move(epic)};
}

SesInstance pushout(const SesInstance& s, const QuiverRep& c, const RepMorphism& beta) {
  QuiverRep amb = direct_sum(s.mid, c);
  SubFamily img;
  for (std::size_t v = 0; v < s.mid.dims.size(); ++v) {
    Matrix g = vstack(s.monic.maps[v], -beta.maps[v]);
    if (g.cols() == 0) img.emplace_back(s.mid.p, 0, amb.dims[v]);
    else img.push_back(span_columns(g));
  }
  auto q = quotient(amb, img);
  RepMorphism monic, epic;
  for (std::size_t v = 0; v < img.size(); ++v) {
    Matrix in_c = vstack(Matrix(c.p, s.mid.dims[v], c.dims[v]), Matrix::identity(c.p, c.dims[v]));
    monic.maps.push_back(q.projection.maps[v] * in_c);
    Matrix g0 = hstack(s.epic.maps[v], Matrix(c.p, s.quot.dims[v], c.dims[v]));
    epic.maps.push_back(g0 * q.lift.maps[v]);
  }
  return SesInstance{c, std::move(q.rep), s.quot, std::move(monic), std::move(epic)};
}

bool is_split(const SesInstance& s) {
  if (s.sub.total_dim() == 0 || s.quot.total_dim() == 0) return true;
  auto rs = hom_space(s.mid, s.sub);
  auto target = flatten(identity_morphism(s.sub));
  if (rs.empty()) return false;
  Matrix sys(s.sub.p, static_cast<int>(target.size()), static_cast<int>(rs.size()));
  for (std::size_t b = 0; b < rs.size(); ++b) {
    auto v = flatten(compose(rs[b], s.monic));
    for (std::size_t i = 0; i < v.size(); ++i) sys(static_cast<int>(i), static_cast<int>(b)) = v[i];
  }
  return solve(sys, Matrix::column(s.sub.p, target)).has_value();
}

namespace {

struct ExtSystem {
  std::vector<int> off;  // per arrow, start of D_a variables
  Matrix cocycles;       // columns
  Matrix coboundaries;   // columns
};

Matrix path_product(const QuiverRep& r, const std::vector<int>& path, std::size_t from, std::size_t to, int start_dim) {
  // product of arrows path[from..to) applied in order, as a matrix
  Matrix cur = Matrix::identity(r.p, start_dim);
  for (std::size_t i = from; i < to; ++i) cur = r.mats[path[i]] * cur;
  return cur;
}

ExtSystem ext_system(const QuiverRep& z, const QuiverRep& y) {
  const auto& q = *z.quiver;
  const int p = z.p;
  ExtSystem es;
  es.off.assign(q.arrows.size() + 1, 0);
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    es.off[a + 1] = es.off[a] + y.dims[q.arrows[a].tgt] * z.dims[q.arrows[a].src];
  const int nvar = es.off.back();

  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& path : q.relations) {
    if (path.empty()) continue;
    int s0 = q.arrows[path.front()].src;
    int t1 = q.arrows[path.back()].tgt;
    std::vector<Matrix> lefts, rights;
    for (std::size_t i = 0; i < path.size(); ++i) {
      rights.push_back(path_product(z, path, 0, i, z.dims[s0]));
      lefts.push_back(path_product(y, path, i + 1, path.size(), y.dims[q.arrows[path[i]].tgt]));
    }
    for (int r = 0; r < y.dims[t1]; ++r) {
      for (int c = 0; c < z.dims[s0]; ++c) {
        std::vector<std::uint8_t> eq(nvar, 0);
        for (std::size_t i = 0; i < path.size(); ++i) {
          const int a = path[i];
          const int zs = z.dims[q.arrows[a].src];
          const Matrix& l = lefts[i];
          const Matrix& rr = rights[i];
          for (int ss = 0; ss < y.dims[q.arrows[a].tgt]; ++ss) {
            if (!l(r, ss)) continue;
            for (int tt = 0; tt < zs; ++tt) {
              if (!rr(tt, c)) continue;
              int var = es.off[a] + ss * zs + tt;
              eq[var] = static_cast<std::uint8_t>((eq[var] + l(r, ss) * rr(tt, c)) % p);
            }
          }
        }
        rows.push_back(std::move(eq));
      }
    }
  }
  Matrix cons(p, static_cast<int>(rows.size()), nvar);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nvar; ++j) cons(static_cast<int>(i), j) = rows[i][j];
  es.cocycles = kernel_basis(cons);

  // coboundaries: D_a = Y_a h_v - h_w Z_a with h_v : z_v -> y_v
  std::vector<int> hoff(q.vertices + 1, 0);
  for (int v = 0; v < q.vertices; ++v) hoff[v + 1] = hoff[v] + y.dims[v] * z.dims[v];
  Matrix cob(p, nvar, hoff.back());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int v = q.arrows[a].src, w = q.arrows[a].tgt;
    const Matrix& ya = y.mats[a];
    const Matrix& za = z.mats[a];
    for (int i = 0; i < y.dims[w]; ++i) {
      for (int j = 0; j < z.dims[v]; ++j) {
        int var = es.off[a] + i * z.dims[v] + j;
        for (int k = 0; k < y.dims[v]; ++k) {
          int h = hoff[v] + k * z.dims[v] + j;
          cob(var, h) = static_cast<std::uint8_t>((cob(var, h) + ya(i, k)) % p);
        }
        for (int k = 0; k < z.dims[w]; ++k) {
          int h = hoff[w] + i * z.dims[w] + k;
          cob(var, h) = static_cast<std::uint8_t>((cob(var, h) + (p - za(k, j))) % p);
        }
      }
    }
  }
  es.coboundaries = cob;
  return es;
}

}  // namespace

std::vector<SesInstance> ext_basis(const QuiverRep& z, const QuiverRep& y) {
  const auto& q = *z.quiver;
  const int p = z.p;
  ExtSystem es = ext_system(z, y);
  Matrix span = es.coboundaries.cols() ? span_columns(es.coboundaries) : Matrix(p, 0, es.off.back());
  std::vector<SesInstance> out;
  for (int b = 0; b < es.cocycles.cols(); ++b) {
    Matrix col = es.cocycles.block(0, b, es.cocycles.rows(), 1).transpose();
    if (rows_contain(span, col.row_ptr(0))) continue;
    span = sum_rows(span, col);
    SesInstance s;
    s.sub = y;
    s.quot = z;
    s.mid.quiver = z.quiver;
    s.mid.p = p;
    for (int v = 0; v < q.vertices; ++v) {
      s.mid.dims.push_back(y.dims[v] + z.dims[v]);
      s.monic.maps.push_back(vstack(Matrix::identity(p, y.dims[v]), Matrix(p, z.dims[v], y.dims[v])));
      s.epic.maps.push_back(hstack(Matrix(p, z.dims[v], y.dims[v]), Matrix::identity(p, z.dims[v])));
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const int v = q.arrows[a].src, w = q.arrows[a].tgt;
      Matrix d(p, y.dims[w], z.dims[v]);
      for (int i = 0; i < y.dims[w]; ++i)
        for (int j = 0; j < z.dims[v]; ++j) d(i, j) = col(0, es.off[a] + i * z.dims[v] + j);
      Matrix m(p, y.dims[w] + z.dims[w], y.dims[v] + z.dims[v]);
      m.paste(0, 0, y.mats[a]);
      m.paste(0, y.dims[v], d);
      m.paste(y.dims[w], y.dims[v], z.mats[a]);
      s.mid.mats.push_back(std::move(m));
    }
    out.push_back(std::move(s));
  }
  return out;
}

int ext_dim(const QuiverRep& z, const QuiverRep& y) {
  ExtSystem es = ext_system(z, y);
  return es.cocycles.cols() - rank(es.coboundaries);
}

}  // namespace exstructa
