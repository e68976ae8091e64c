#include "exstructa/interval.hpp"

#include <algorithm>
#include <sstream>

#include "exstructa/error.hpp"

namespace exstructa {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

void extend_linear(int n, int i, std::vector<int>& cur, std::vector<AlgebraSpec>& out) {
  // fill positions n-1 .. 0 backwards; cur[i] constrained by cur[i+1]
  if (i < 0) {
    out.push_back(build_algebra(Shape::Linear, n, cur));
    return;
  }
  int hi = std::min(n - i, cur[i + 1] + 1);
  for (int l = 1; l <= hi; ++l) {
    cur[i] = l;
    extend_linear(n, i - 1, cur, out);
  }
}

}  // namespace

int AlgebraSpec::indecomposable_count() const {
  int s = 0;
  for (int l : kupisch) s += l;
  return s;
}

std::string AlgebraSpec::describe() const {
  std::ostringstream os;
  os << (shape == Shape::Linear ? "linear:" : "cyclic:");
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << kupisch[i];
  return os.str();
}

AlgebraSpec build_algebra(Shape shape, int n, std::vector<int> kupisch) {
  if (n < 1) fail(ErrorCode::KupischViolation, "an algebra needs at least one vertex");
  if (static_cast<int>(kupisch.size()) != n)
    fail(ErrorCode::KupischViolation, "Kupisch series must have one entry per vertex");
  for (int i = 0; i < n; ++i) {
    if (kupisch[i] < 1) fail(ErrorCode::KupischViolation, "projective lengths must be positive");
  }
  if (shape == Shape::Linear) {
    if (kupisch[n - 1] != 1) fail(ErrorCode::KupischViolation, "last projective of a linear quiver is simple");
    for (int i = 0; i < n; ++i) {
      if (kupisch[i] > n - i)
        fail(ErrorCode::KupischViolation, "projective at vertex " + std::to_string(i + 1) + " runs off the quiver");
      if (i + 1 < n && kupisch[i + 1] < kupisch[i] - 1)
        fail(ErrorCode::KupischViolation, "condition l(i+1) >= l(i) - 1 fails at vertex " + std::to_string(i + 1));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      if (kupisch[i] > n)
        fail(ErrorCode::WindingUnsupported, "projective at vertex " + std::to_string(i + 1) + " winds around the cycle");
    }
    for (int i = 0; i < n; ++i) {
      if (kupisch[(i + 1) % n] < kupisch[i] - 1)
        fail(ErrorCode::KupischViolation, "condition l(i+1) >= l(i) - 1 fails at vertex " + std::to_string(i + 1));
    }
  }
  return AlgebraSpec{shape, n, std::move(kupisch)};
}

AlgebraSpec linear_a(int n) {
  std::vector<int> k(n);
  for (int i = 0; i < n; ++i) k[i] = n - i;
  return build_algebra(Shape::Linear, n, k);
}

std::vector<AlgebraSpec> all_linear_algebras(int n) {
  std::vector<AlgebraSpec> out;
  std::vector<int> cur(n, 1);
  extend_linear(n, n - 2, cur, out);
  std::sort(out.begin(), out.end(), [](const AlgebraSpec& a, const AlgebraSpec& b) { return a.kupisch < b.kupisch; });
  return out;
}

int wrap_vertex(const AlgebraSpec& alg, int v) { return mod(v - 1, alg.n) + 1; }

int socle_vertex(const AlgebraSpec& alg, const Interval& m) { return wrap_vertex(alg, m.c + m.len - 1); }

bool is_valid(const AlgebraSpec& alg, const Interval& m) {
  return m.c >= 1 && m.c <= alg.n && m.len >= 1 && m.len <= alg.kupisch_at(m.c);
}

bool is_projective(const AlgebraSpec& alg, const Interval& m) { return m.len == alg.kupisch_at(m.c); }

void require_valid(const AlgebraSpec& alg, const Interval& m) {
  if (!is_valid(alg, m)) fail(ErrorCode::InvalidInterval, to_string(m) + " is not an indecomposable of " + alg.describe());
}

std::vector<Interval> indecomposables(const AlgebraSpec& alg) {
  std::vector<Interval> out;
  for (int c = 1; c <= alg.n; ++c)
    for (int l = 1; l <= alg.kupisch_at(c); ++l) out.push_back({c, l});
  return out;
}

Interval tau(const AlgebraSpec& alg, const Interval& m) {
  require_valid(alg, m);
  if (is_projective(alg, m)) fail(ErrorCode::ProjectiveHasNoTau, to_string(m) + " is projective");
  return {wrap_vertex(alg, m.c + 1), m.len};
}

std::vector<ArSeq> ar_sequences(const AlgebraSpec& alg) {
  std::vector<ArSeq> out;
  for (const auto& u : indecomposables(alg)) {
    if (is_projective(alg, u)) continue;
    ArSeq s;
    s.end = u;
    s.sub = tau(alg, u);
    s.mid_top = {u.c, u.len + 1};
    s.mid_small = u.len == 1 ? Interval{} : Interval{wrap_vertex(alg, u.c + 1), u.len - 1};
    out.push_back(s);
  }
  return out;
}

bool hom_nonzero(const AlgebraSpec& alg, const Interval& src, const Interval& tgt) {
  require_valid(alg, src);
  require_valid(alg, tgt);
  int j = mod(src.c - tgt.c, alg.n);
  return j <= tgt.len - 1 && tgt.len - j <= src.len;
}

std::optional<ExtShape> ext_shape(const AlgebraSpec& alg, const Interval& sub, const Interval& quot) {
  require_valid(alg, sub);
  require_valid(alg, quot);
  int j = mod(sub.c - quot.c, alg.n);
  if (j < 1 || j > quot.len) return std::nullopt;
  if (quot.len >= j + sub.len) return std::nullopt;
  Interval top{quot.c, j + sub.len};
  if (alg.shape == Shape::Cyclic && top.len > alg.n) return std::nullopt;
  if (!is_valid(alg, top)) return std::nullopt;
  ExtShape e;
  e.top = top;
  if (j == quot.len) {
    e.kase = ExtShape::Case::Indecomposable;
  } else {
    e.kase = ExtShape::Case::TwoTerms;
    e.overlap = {sub.c, quot.len - j};
  }
  return e;
}

std::vector<Interval> submodules_of(const AlgebraSpec& alg, const Interval& m) {
  require_valid(alg, m);
  std::vector<Interval> out;
  for (int x = 0; x < m.len; ++x) out.push_back({wrap_vertex(alg, m.c + x), m.len - x});
  out.push_back(Interval{});
  return out;
}

std::string to_string(const Interval& m) {
  if (m.is_zero()) return "0";
  return "(" + std::to_string(m.c) + "," + std::to_string(m.len) + ")";
}

}  // namespace exstructa
