#include "exstructa/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "exstructa/error.hpp"
#include "exstructa/oracle.hpp"

namespace exstructa {

namespace detail {
extern const std::string_view kFixtureSink3;
extern const std::string_view kFixtureSource3;
}  // namespace detail

using Rational = boost::rational<long long>;

int ModuleCatalog::module_index(std::string_view name) const {
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (modules[i].name == name) return static_cast<int>(i);
  return -1;
}

int ModuleCatalog::interval_index(const Interval& m) const {
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (modules[i].interval && *modules[i].interval == m) return static_cast<int>(i);
  return -1;
}

std::string ModuleCatalog::multiset_name(const std::vector<int>& ids) const {
  if (ids.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += "+";
    out += modules[ids[i]].name;
  }
  return out;
}

void ModuleCatalog::finalize() {
  const std::size_t n = modules.size();
  max_dim_ = 0;
  for (const auto& m : modules) max_dim_ = std::max(max_dim_, m.rep.total_dim());
  hom_.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) hom_[a][b] = hom_dim(modules[a].rep, modules[b].rep);

  // Gauss-Jordan over the rationals
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(hom_[i][j]);
    m[i][n + i] = Rational(1);
  }
  hom_inv_.clear();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == Rational(0)) ++piv;
    if (piv == n) return;  // singular; iso_class will refuse
    std::swap(m[piv], m[c]);
    Rational d = m[c][c];
    for (auto& x : m[c]) x /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == Rational(0)) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  hom_inv_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom_inv_[i][j] = m[i][n + j];
}

QuiverPtr nakayama_quiver(const AlgebraSpec& alg) {
  auto q = std::make_shared<Quiver>();
  q->vertices = alg.n;
  const int narrows = alg.shape == Shape::Linear ? alg.n - 1 : alg.n;
  for (int i = 0; i < narrows; ++i)
    q->arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % alg.n});
  for (int i = 0; i < alg.n; ++i) {
    const int l = alg.kupisch[i];
    if (alg.shape == Shape::Linear && i + l > narrows) continue;  // path leaves the quiver
    std::vector<int> path;
    for (int k = 0; k < l; ++k) path.push_back((i + k) % alg.n);
    q->relations.push_back(std::move(path));
  }
  return q;
}

QuiverRep interval_to_rep(QuiverPtr q, const AlgebraSpec& alg, const Interval& m, int p) {
  require_valid(alg, m);
  if (!supported_prime(p)) fail(ErrorCode::InvalidConfig, "unsupported field size " + std::to_string(p));
  QuiverRep r;
  r.p = p;
  r.dims.assign(alg.n, 0);
  std::vector<int> pos(alg.n, -1);
  for (int k = 0; k < m.len; ++k) {
    int v = (m.c - 1 + k) % alg.n;
    r.dims[v] += 1;
    pos[v] = k;
  }
  for (const auto& ar : q->arrows) {
    Matrix a(p, r.dims[ar.tgt], r.dims[ar.src]);
    if (r.dims[ar.src] && r.dims[ar.tgt] && pos[ar.src] + 1 < m.len && pos[ar.tgt] == pos[ar.src] + 1) a(0, 0) = 1;
    r.mats.push_back(std::move(a));
  }
  r.quiver = std::move(q);
  return r;
}

QuiverRep interval_to_rep(const AlgebraSpec& alg, const Interval& m, int p) {
  return interval_to_rep(nakayama_quiver(alg), alg, m, p);
}

bool is_almost_split(const ModuleCatalog& cat, const SesInstance& s, int sub_id, int end_id) {
  if (is_split(s)) return false;
  for (std::size_t w = 0; w < cat.size(); ++w) {
    const auto& rep = cat.modules[w].rep;
    for (const auto& h : hom_space(rep, s.quot)) {
      if (static_cast<int>(w) == end_id && is_iso(h)) continue;
      if (!is_split(pullback(s, rep, h))) return false;
    }
    for (const auto& g : hom_space(s.sub, rep)) {
      if (static_cast<int>(w) == sub_id && is_iso(g)) continue;
      if (!is_split(pushout(s, rep, g))) return false;
    }
  }
  return true;
}

ModuleCatalog nakayama_catalog(const AlgebraSpec& alg, int p) {
  ModuleCatalog cat;
  cat.quiver = nakayama_quiver(alg);
  cat.p = p;
  cat.label = alg.describe();
  cat.algebra = alg;
  for (const auto& m : indecomposables(alg)) {
    CatalogModule cm;
    cm.name = to_string(m);
    cm.rep = interval_to_rep(cat.quiver, alg, m, p);
    cm.interval = m;
    cat.modules.push_back(std::move(cm));
  }
  cat.finalize();
  const int n = static_cast<int>(cat.size());
  for (int u = 0; u < n; ++u) {
    bool projective = true;
    for (int w = 0; w < n && projective; ++w)
      if (ext_dim(cat.modules[u].rep, cat.modules[w].rep) > 0) projective = false;
    cat.modules[u].projective = projective;
  }
  for (int u = 0; u < n; ++u) {
    if (cat.modules[u].projective) continue;
    bool found = false;
    for (int w = 0; w < n && !found; ++w) {
      auto basis = ext_basis(cat.modules[u].rep, cat.modules[w].rep);
      if (basis.size() != 1) continue;
      if (!is_almost_split(cat, basis.front(), w, u)) continue;
      CatalogAr a;
      a.name = cat.modules[u].name;
      a.end = u;
      a.sub = w;
      a.middles = iso_class(cat, basis.front().mid);
      a.ses = std::move(basis.front());
      cat.ar.push_back(std::move(a));
      found = true;
    }
    if (!found) fail(ErrorCode::InvalidFixture, "no AR sequence ends in " + cat.modules[u].name);
  }
  return cat;
}

namespace {

Matrix flat_matrix(const nlohmann::json& j, int rows, int cols, int p, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::InvalidFixture, what + ": matrix must be a flat array");
  if (static_cast<int>(j.size()) != rows * cols)
    fail(ErrorCode::InvalidFixture, what + ": expected " + std::to_string(rows * cols) + " entries, got " +
                                        std::to_string(j.size()));
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const auto& e = j[r * cols + c];
      if (!e.is_number_integer()) fail(ErrorCode::InvalidFixture, what + ": entries must be integers");
      m.set(r, c, e.get<long long>());
    }
  return m;
}

}  // namespace

ModuleCatalog load_fixture(const nlohmann::json& doc, int p) {
  if (!supported_prime(p)) fail(ErrorCode::InvalidConfig, "unsupported field size " + std::to_string(p));
  try {
    ModuleCatalog cat;
    cat.p = p;
    cat.label = doc.value("name", std::string("fixture"));
    auto q = std::make_shared<Quiver>();
    std::vector<std::string> vnames;
    for (const auto& v : doc.at("vertices")) vnames.push_back(v.get<std::string>());
    q->vertices = static_cast<int>(vnames.size());
    auto vertex = [&](const std::string& name) {
      auto it = std::find(vnames.begin(), vnames.end(), name);
      if (it == vnames.end()) fail(ErrorCode::InvalidFixture, "unknown vertex '" + name + "'");
      return static_cast<int>(it - vnames.begin());
    };
    for (const auto& a : doc.at("arrows")) {
      q->arrows.push_back({a.at("name").get<std::string>(), vertex(a.at("src").get<std::string>()),
                           vertex(a.at("tgt").get<std::string>())});
    }
    for (const auto& rel : doc.value("relations", nlohmann::json::array())) {
      std::vector<int> path;
      for (const auto& name : rel) {
        int a = q->arrow_index(name.get<std::string>());
        if (a < 0) fail(ErrorCode::InvalidFixture, "relation uses unknown arrow " + name.get<std::string>());
        if (!path.empty() && q->arrows[path.back()].tgt != q->arrows[a].src)
          fail(ErrorCode::InvalidFixture, "relation path is not composable");
        path.push_back(a);
      }
      q->relations.push_back(std::move(path));
    }
    cat.quiver = q;

    for (const auto& m : doc.at("modules")) {
      CatalogModule cm;
      cm.name = m.at("name").get<std::string>();
      if (cat.module_index(cm.name) >= 0) fail(ErrorCode::InvalidFixture, "duplicate module " + cm.name);
      cm.rep.quiver = q;
      cm.rep.p = p;
      cm.rep.dims = m.at("dims").get<std::vector<int>>();
      if (static_cast<int>(cm.rep.dims.size()) != q->vertices)
        fail(ErrorCode::InvalidFixture, cm.name + ": dimension vector has the wrong length");
      const auto& mats = m.at("matrices");
      for (const auto& ar : q->arrows) {
        cm.rep.mats.push_back(flat_matrix(mats.at(ar.name), cm.rep.dims[ar.tgt], cm.rep.dims[ar.src], p,
                                          cm.name + "." + ar.name));
      }
      auto d = cm.rep.defect();
      if (!d.empty()) fail(ErrorCode::InvalidFixture, cm.name + ": " + d);
      cat.modules.push_back(std::move(cm));
    }

    auto module = [&](const std::string& name) {
      int i = cat.module_index(name);
      if (i < 0) fail(ErrorCode::InvalidFixture, "unknown module '" + name + "'");
      return i;
    };
    for (const auto& a : doc.value("ar_sequences", nlohmann::json::array())) {
      CatalogAr s;
      s.name = a.at("name").get<std::string>();
      s.sub = module(a.at("sub").get<std::string>());
      s.end = module(a.at("quot").get<std::string>());
      for (const auto& mid : a.at("middles")) s.middles.push_back(module(mid.get<std::string>()));
      if (s.middles.empty()) fail(ErrorCode::InvalidFixture, s.name + ": empty middle term");
      s.ses.sub = cat.modules[s.sub].rep;
      s.ses.quot = cat.modules[s.end].rep;
      s.ses.mid = cat.modules[s.middles.front()].rep;
      for (std::size_t k = 1; k < s.middles.size(); ++k) s.ses.mid = direct_sum(s.ses.mid, cat.modules[s.middles[k]].rep);
      const auto& monic = a.at("monic");
      const auto& epic = a.at("epic");
      if (static_cast<int>(monic.size()) != q->vertices || static_cast<int>(epic.size()) != q->vertices)
        fail(ErrorCode::InvalidFixture, s.name + ": one monic and one epic matrix per vertex expected");
      for (int v = 0; v < q->vertices; ++v) {
        s.ses.monic.maps.push_back(flat_matrix(monic[v], s.ses.mid.dims[v], s.ses.sub.dims[v], p, s.name + ".monic"));
        s.ses.epic.maps.push_back(flat_matrix(epic[v], s.ses.quot.dims[v], s.ses.mid.dims[v], p, s.name + ".epic"));
      }
      std::sort(s.middles.begin(), s.middles.end());
      cat.ar.push_back(std::move(s));
    }
    for (auto& m : cat.modules) m.projective = true;
    for (const auto& s : cat.ar) cat.modules[s.end].projective = false;
    cat.finalize();
    return cat;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidFixture, std::string("malformed fixture: ") + e.what());
  }
}

ModuleCatalog load_fixture_text(std::string_view text, int p) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidFixture, std::string("fixture is not JSON: ") + e.what());
  }
  return load_fixture(doc, p);
}

ModuleCatalog load_fixture_file(const std::string& path, int p) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidFixture, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_fixture_text(ss.str(), p);
}

std::vector<std::string> builtin_fixture_names() { return {"sink3", "source3"}; }

std::string_view builtin_fixture_text(std::string_view name) {
  if (name == "sink3") return detail::kFixtureSink3;
  if (name == "source3") return detail::kFixtureSource3;
  return {};
}

std::vector<std::string> fixture_invariant_failures(const ModuleCatalog& cat) {
  std::vector<std::string> out;
  if (!cat.hom_table_invertible()) out.push_back("Hom table is singular; modules are not distinguishable");
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto d = cat.modules[i].rep.defect();
    if (!d.empty()) out.push_back(cat.modules[i].name + ": " + d);
    if (cat.hom_table_invertible() && iso_class(cat, cat.modules[i].rep) != std::vector<int>{static_cast<int>(i)})
      out.push_back(cat.modules[i].name + ": not recognised as a single catalog module");
  }
  for (const auto& a : cat.ar) {
    const std::string tag = "AR sequence " + a.name + ": ";
    auto d = ses_defect(a.ses);
    if (!d.empty()) {
      out.push_back(tag + d);
      continue;
    }
    if (is_split(a.ses)) out.push_back(tag + "splits");
    if (cat.hom_table_invertible()) {
      try {
        auto mid = iso_class(cat, a.ses.mid);
        if (mid != a.middles) out.push_back(tag + "middle term is " + cat.multiset_name(mid) + ", declared " + cat.multiset_name(a.middles));
      } catch (const Error& e) {
        out.push_back(tag + e.what());
      }
    }
    int e = ext_dim(a.ses.quot, a.ses.sub);
    if (e != 1) out.push_back(tag + "Ext of the end terms has dimension " + std::to_string(e));
    if (!is_split(a.ses) && !is_almost_split(cat, a.ses, a.sub, a.end)) out.push_back(tag + "not almost split");
  }
  return out;
}

}  // namespace exstructa
