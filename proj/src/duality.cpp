#include "affgebra/duality.hpp"

#include <algorithm>

#include "affgebra/errors.hpp"
#include "affgebra/random.hpp"
#include "affgebra/skew.hpp"

namespace affgebra {

namespace {

void require_len(const FibrePoint& v, std::size_t n, const char* where) {
  if (v.size() != n) throw DimensionMismatch(std::string(where) + ": dimension mismatch");
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational k = m[r][c];
      for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] -= k * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Rational det(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational out = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      out = -out;
    }
    out *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return out;
}

// Coordinates of v_1 ^ .. ^ v_k on increasing index tuples.
FibrePoint plucker(const std::vector<FibrePoint>& vs, int dim) {
  FibrePoint out;
  for (const auto& I : increasing_tuples(dim, int(vs.size()))) {
    RationalMatrix minor;
    for (const auto& v : vs) {
      minor.emplace_back();
      for (int i : I) minor.back().push_back(v[std::size_t(i)]);
    }
    out.push_back(det(minor));
  }
  return out;
}

FibrePoint level_point(Rng& rng, const FibrePoint& phi, std::size_t pivot, const Rational& level) {
  FibrePoint v;
  for (std::size_t i = 0; i < phi.size(); ++i) v.push_back(random_rational(rng));
  Rational rest = level;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i != pivot) rest -= phi[i] * v[i];
  }
  v[pivot] = rest / phi[pivot];
  return v;
}

std::string print_vector(const FibrePoint& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::size_t binomial(int n, int k) {
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * std::size_t(n - k + i) / std::size_t(i);
  return out;
}

std::string fresh_name(const Ctx& taken, std::string name) {
  while (taken->index_of(name)) name += "_";
  return name;
}

}  // namespace

std::size_t rational_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return echelon(m, m[0].size()).size();
}

std::optional<FibrePoint> kernel_vector(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix r = m;
  auto pivots = echelon(r, cols);
  std::size_t free = 0;
  while (free < cols && std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  if (free == cols) return std::nullopt;
  FibrePoint x(cols, Rational(0));
  x[free] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free];
  return x;
}

std::optional<FibrePoint> solve_linear(const RationalMatrix& m, const FibrePoint& rhs) {
  if (m.size() != rhs.size()) throw DimensionMismatch("solve_linear: row count mismatch");
  if (m.empty()) return FibrePoint{};
  const std::size_t cols = m[0].size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  auto pivots = echelon(aug, cols + 1);
  FibrePoint x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

Rational dot(const FibrePoint& a, const FibrePoint& b) {
  require_len(b, a.size(), "dot");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Rational eta_value(const DualTriple& d, const FibrePoint& b) {
  require_len(d.phi, d.a.size(), "eta_value");
  require_len(b, d.a.size(), "eta_value");
  Rational out = d.t;
  for (std::size_t i = 0; i < b.size(); ++i) out += d.phi[i] * (b[i] - d.a[i]);
  return out;
}

bool eta_orbit_equal(const DualTriple& d1, const DualTriple& d2) {
  require_len(d1.phi, d1.a.size(), "eta_orbit_equal");
  require_len(d2.a, d1.a.size(), "eta_orbit_equal");
  require_len(d2.phi, d1.a.size(), "eta_orbit_equal");
  if (d1.phi != d2.phi) return false;
  Rational shift = 0;
  for (std::size_t i = 0; i < d1.a.size(); ++i) shift += d1.phi[i] * (d2.a[i] - d1.a[i]);
  return d2.t == d1.t + shift;
}

DualTriple eta_move(const DualTriple& d, const FibrePoint& u) {
  require_len(u, d.a.size(), "eta_move");
  DualTriple out = d;
  for (std::size_t i = 0; i < u.size(); ++i) out.a[i] += u[i];
  out.t += dot(d.phi, u);
  return out;
}

HullTriple hull_move(const HullTriple& e, const FibrePoint& u) {
  require_len(u, e.a.size(), "hull_move");
  require_len(e.v, e.a.size(), "hull_move");
  HullTriple out = e;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.a[i] -= u[i];
    out.v[i] += e.s * u[i];
  }
  return out;
}

Rational pairing60(const DualTriple& d, const HullTriple& e) {
  const std::size_t n = d.a.size();
  require_len(d.phi, n, "pairing60");
  require_len(e.a, n, "pairing60");
  require_len(e.v, n, "pairing60");
  Rational out = dot(d.phi, e.v) + e.s * d.t;
  for (std::size_t i = 0; i < n; ++i) out += e.s * d.phi[i] * (e.a[i] - d.a[i]);
  return out;
}

ZDualElem ZDualElem::root(const Rational& s, const Rational& a) {
  if (a == 0) throw InvalidStructure("ZDualElem::root: zero slope");
  return ZDualElem(s, a);
}

ZDualElem ZDualElem::constant(const Rational& t) { return ZDualElem(t, 0); }

Rational ZDualElem::eval(const Rational& y) const {
  if (is_constant()) return first_;
  return a_ * (y - first_);
}

ZDualElem zdual_add(const ZDualElem& u, const ZDualElem& w) {
  if (u.is_constant() && w.is_constant()) return ZDualElem::constant(u.first() + w.first());
  if (u.is_constant()) return ZDualElem::root(w.first() - u.first() / w.slope(), w.slope());
  if (w.is_constant()) return ZDualElem::root(u.first() - w.first() / u.slope(), u.slope());
  const Rational &s = u.first(), &a = u.slope(), &s2 = w.first(), &a2 = w.slope();
  if (a + a2 == 0) return ZDualElem::constant(a * (s2 - s));
  return ZDualElem::root(s + a2 / (a + a2) * (s2 - s), a + a2);
}

ZDualElem zdual_scale(const Rational& lambda, const ZDualElem& u) {
  if (u.is_constant()) return ZDualElem::constant(lambda * u.first());
  if (lambda == 0) return ZDualElem::constant(0);
  return ZDualElem::root(u.first(), lambda * u.slope());
}

Rational ztriple_eval(const ZTriple& f, const Rational& y) { return f.t + f.s * (y - f.z); }

Rational pairing62(const ZTriple& f, const ZTriple& g) { return f.s * g.t - g.s * f.t + f.s * g.s * (f.z - g.z); }

Report lemma1_span_check(int dim, const FibrePoint& phi, int k, int samples, std::uint64_t seed) {
  if (dim < 1 || dim > 6 || k < 1 || k > dim) throw DimensionMismatch("lemma1_span_check: need 1 <= k <= dim <= 6");
  require_len(phi, std::size_t(dim), "lemma1_span_check");
  auto pivot = std::find_if(phi.begin(), phi.end(), [](const Rational& c) { return c != 0; });
  if (pivot == phi.end()) throw InvalidStructure("lemma1_span_check: phi = 0 has no unit level set");
  const std::size_t p = std::size_t(pivot - phi.begin());
  const std::size_t need = binomial(dim, k);
  Report r;
  if (std::size_t(samples) < need) {
    r.note("lemma1: " + std::to_string(samples) + " samples cannot span a space of dimension " +
           std::to_string(need) + "; rerun with at least " + std::to_string(need));
    return r;
  }
  Rng rng(seed);
  RationalMatrix wedges, mixed;
  for (int s = 0; s < samples; ++s) {
    std::vector<FibrePoint> vs, ws;
    for (int i = 0; i < k; ++i) vs.push_back(level_point(rng, phi, p, 1));
    ws.push_back(level_point(rng, phi, p, 1));
    for (int i = 1; i < k; ++i) ws.push_back(level_point(rng, phi, p, 0));
    wedges.push_back(plucker(vs, dim));
    mixed.push_back(plucker(ws, dim));
  }
  const std::size_t r1 = rational_rank(wedges), r2 = rational_rank(mixed);
  const std::string target = "/" + std::to_string(need);
  r.add("lemma1.wedge_span", r1 == need, "rank " + std::to_string(r1) + target);
  r.add("lemma1.kernel_span", r2 == need, "rank " + std::to_string(r2) + target);
  return r;
}

Report pairing_iso_check(const BiAffinePairing& pairing) {
  const std::size_t n1 = pairing.P.size();
  if (n1 == 0) throw DimensionMismatch("pairing_iso_check: empty pairing");
  for (const auto& row : pairing.P) require_len(row, n1, "pairing_iso_check");
  require_len(pairing.phi0, n1, "pairing_iso_check");
  Report r;
  FibrePoint unit(n1, Rational(0));
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t i = 0; i < n1; ++i) unit[j] += pairing.phi0[i] * pairing.P[i][j];
  }
  FibrePoint expected(n1, Rational(0));
  expected[0] = 1;
  r.add("pairing.unit", unit == expected, unit == expected ? "" : print_vector(unit));
  // v -> <., v> is injective iff P^T has trivial kernel
  RationalMatrix Pt(n1, FibrePoint(n1));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) Pt[j][i] = pairing.P[i][j];
  }
  auto kv = kernel_vector(Pt, n1);
  r.add("pairing.vector_dual", !kv, kv ? print_vector(*kv) : "");
  RationalMatrix lin;
  for (const auto& row : pairing.P) lin.emplace_back(row.begin() + 1, row.end());
  auto ka = kernel_vector(lin, n1 - 1);
  r.add("pairing.affine_dual", !ka, ka ? print_vector(*ka) : "");
  return r;
}

FibrePoint to_double_dual(const FibrePoint& a, const std::vector<AffineFunction>& basis) {
  FibrePoint out;
  for (const auto& b : basis) out.push_back(b.c + dot(b.lin, a));
  return out;
}

FibrePoint from_double_dual(const FibrePoint& psi, const std::vector<AffineFunction>& basis) {
  require_len(psi, basis.size(), "from_double_dual");
  if (basis.empty()) throw DimensionMismatch("from_double_dual: empty basis");
  const std::size_t n = basis[0].lin.size();
  RationalMatrix full, lin;
  FibrePoint rhs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    require_len(basis[j].lin, n, "from_double_dual");
    full.push_back({basis[j].c});
    full.back().insert(full.back().end(), basis[j].lin.begin(), basis[j].lin.end());
    lin.push_back(basis[j].lin);
    rhs.push_back(psi[j] - basis[j].c);
  }
  if (basis.size() != n + 1 || rational_rank(full) != n + 1) {
    throw DimensionMismatch("from_double_dual: basis does not span the affine functions");
  }
  auto a = solve_linear(lin, rhs);
  if (!a) throw InvalidStructure("from_double_dual: functional is not 1 on the constant function");
  return *a;
}

EpiData EpiData::make(const Ctx& base, int n) {
  EpiData e;
  e.base = base;
  e.n = n;
  std::vector<std::string> fiber = fresh_names(base, "y", 1, n);
  Ctx partial = VarContext::make(base->names(), fiber);
  fiber.push_back(fresh_name(partial, "z"));
  e.total = total_context(base, fiber);
  return e;
}

Poly linsec_to_fsigma(const EpiData& e, const LinSec& f) {
  if (int(f.size()) != e.n) throw DimensionMismatch("linsec_to_fsigma: wrong number of components");
  Poly out = Poly::variable(e.total, e.z());
  for (int i = 0; i < e.n; ++i) out -= f[std::size_t(i)].rebase(e.total) * Poly::variable(e.total, e.y(i));
  return out;
}

std::vector<Poly> a_sigma(const EpiData& e, const LinSec& f) {
  if (int(f.size()) != e.n) throw DimensionMismatch("a_sigma: wrong number of components");
  std::vector<Poly> out;
  for (const auto& c : f) out.push_back(-c);
  out.push_back(Poly::constant(e.base, 1));
  return out;
}

LinSec fsigma_to_linsec(const EpiData& e, const Poly& f) {
  require_same_context(e.total, f.context(), "fsigma_to_linsec");
  const std::size_t m = e.base->size();
  std::vector<Poly> coef(std::size_t(e.n + 1), Poly(e.total));
  for (const auto& term : f.terms()) {
    int fibre_degree = 0;
    std::size_t slot = 0;
    for (std::size_t v = m; v < e.total->size(); ++v) {
      if (term.mono[v] > 0) {
        fibre_degree += term.mono[v];
        slot = v - m;
      }
    }
    if (fibre_degree != 1) throw InvalidStructure("fsigma_to_linsec: not fibrewise linear: " + print_poly(f));
    Monomial mono = term.mono;
    mono.set(m + slot, 0);
    coef[slot] += Poly::monomial(e.total, mono, term.coeff);
  }
  if (!(coef.back() == Poly::constant(e.total, 1))) {
    throw InvalidStructure("fsigma_to_linsec: value on the kernel generator is " + print_poly(coef.back()));
  }
  LinSec out;
  for (int i = 0; i < e.n; ++i) out.push_back(-coef[std::size_t(i)].rebase(e.base));
  return out;
}

std::vector<Poly> sigma_defect(const EpiData& e, const LinSec& f) {
  std::vector<Poly> out(std::size_t(e.n), Poly(e.total));
  out.push_back(linsec_to_fsigma(e, f));
  return out;
}

Thm16Chain thm16_chain(const EpiData& e, const LinSec& f) {
  if (int(f.size()) != e.n) throw DimensionMismatch("thm16_chain: wrong number of components");
  const std::size_t n1 = std::size_t(e.n + 1);
  Thm16Chain c;
  c.projector.assign(n1, std::vector<Poly>(n1, Poly(e.base)));
  c.projector[n1 - 1] = a_sigma(e, f);
  c.projector_tensor = c.projector[n1 - 1];
  c.dual_section = a_sigma(e, f);
  c.dual_projector.assign(n1, std::vector<Poly>(n1, Poly(e.base)));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      c.dual_projector[i][j] = Poly::constant(e.base, i == j ? 1 : 0) - c.projector[j][i];
    }
  }
  c.dual_projector_tensor.assign(c.dual_projector.begin(), c.dual_projector.end() - 1);
  c.sigma_bar = f;
  c.lambda_bar.assign(c.projector[n1 - 1].begin(), c.projector[n1 - 1].end() - 1);
  return c;
}

}  // namespace affgebra
