#include "affgebra/algebroid.hpp"

#include "affgebra/errors.hpp"
#include "affgebra/random.hpp"

namespace affgebra {

namespace {

void require_rank(const AlgebroidData& E, const Section& X, const char* where) {
  if (X.rank() != E.rank) {
    throw DimensionMismatch(std::string(where) + ": section rank " + std::to_string(X.rank()) +
                            " != " + std::to_string(E.rank));
  }
}

Poly zero_of(const Ctx& ctx) { return Poly(ctx); }

void require_total(const AlgebroidData& E, const Ctx& total, const char* where) {
  if (int(total->base_count()) != E.base_dim() || int(total->fiber_count()) != E.rank) {
    throw DimensionMismatch(std::string(where) + ": total space does not match the bundle");
  }
  for (std::size_t a = 0; a < E.base->size(); ++a) {
    if (total->name(a) != E.base->name(a)) throw ContextMismatch(std::string(where) + ": base names differ");
  }
}

}  // namespace

Section Section::zero(const Ctx& base, int rank) { return Section{std::vector<Poly>(std::size_t(rank), Poly(base))}; }

Section Section::basis(const Ctx& base, int rank, int i) {
  Section s = zero(base, rank);
  s.f.at(std::size_t(i)) = Poly::constant(base, 1);
  return s;
}

bool Section::is_zero() const {
  for (const auto& p : f) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Section& Section::operator+=(const Section& o) {
  if (o.rank() != rank()) throw DimensionMismatch("section +: rank mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += o.f[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  if (o.rank() != rank()) throw DimensionMismatch("section -: rank mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= o.f[i];
  return *this;
}

Section Section::operator-() const {
  Section out = *this;
  for (auto& p : out.f) p = -p;
  return out;
}

Section operator*(const Poly& h, const Section& s) {
  Section out = s;
  for (auto& p : out.f) p = h * p;
  return out;
}

std::vector<std::string> numbered_names(const std::string& prefix, int first, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

std::vector<std::string> fresh_names(const Ctx& taken, const std::string& prefix, int first, int count) {
  std::string p = prefix;
  for (;;) {
    auto names = numbered_names(p, first, count);
    bool clash = false;
    for (const auto& n : names) clash = clash || taken->index_of(n).has_value();
    if (!clash) return names;
    p += '_';
  }
}

Section random_section(std::mt19937_64& rng, const Ctx& base, int rank, int max_degree, int terms) {
  return Section{random_polys(rng, base, std::size_t(rank), max_degree, terms)};
}

std::string print_section(const Section& s, const std::vector<std::string>& frame) {
  std::string out;
  for (std::size_t i = 0; i < s.f.size(); ++i) {
    if (s.f[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string name = i < frame.size() ? frame[i] : "e" + std::to_string(i + 1);
    out += "(" + print_poly(s.f[i]) + ")*" + name;
  }
  return out.empty() ? "0" : out;
}

AlgebroidData AlgebroidData::zero(const Ctx& base, int rank) {
  AlgebroidData E;
  E.base = base;
  E.rank = rank;
  E.anchor.assign(std::size_t(rank), std::vector<Poly>(base->size(), Poly(base)));
  E.structure.assign(std::size_t(rank), PolyMatrix(std::size_t(rank), std::vector<Poly>(std::size_t(rank), Poly(base))));
  E.frame = numbered_names("e", 1, rank);
  return E;
}

AlgebroidData AlgebroidData::tangent(const Ctx& base) {
  AlgebroidData E = zero(base, int(base->size()));
  for (std::size_t a = 0; a < base->size(); ++a) E.anchor[a][a] = Poly::constant(base, 1);
  return E;
}

void AlgebroidData::set_bracket(int i, int j, const std::vector<Poly>& value) {
  if (int(value.size()) != rank) throw DimensionMismatch("set_bracket: need one component per frame element");
  for (int k = 0; k < rank; ++k) {
    structure.at(std::size_t(i)).at(std::size_t(j))[std::size_t(k)] = value[std::size_t(k)];
    structure.at(std::size_t(j)).at(std::size_t(i))[std::size_t(k)] = -value[std::size_t(k)];
  }
}

void AlgebroidData::set_anchor(int i, const std::vector<Poly>& value) {
  if (value.size() != base->size()) throw DimensionMismatch("set_anchor: need one component per base coordinate");
  anchor.at(std::size_t(i)) = value;
}

void AlgebroidData::validate() const {
  if (!base || base->fiber_count() != 0) throw InvalidStructure("algebroid base context must have no fibre variables");
  if (int(anchor.size()) != rank || int(structure.size()) != rank) throw InvalidStructure("algebroid tables have wrong size");
  for (int i = 0; i < rank; ++i) {
    if (anchor[std::size_t(i)].size() != base->size()) throw InvalidStructure("anchor row has wrong length");
    for (const auto& p : anchor[std::size_t(i)]) {
      if (!same_context(p.context(), base)) throw InvalidStructure("anchor entry in wrong context");
    }
    if (int(structure[std::size_t(i)].size()) != rank) throw InvalidStructure("structure table has wrong size");
    for (int j = 0; j < rank; ++j) {
      const auto& cij = structure[std::size_t(i)][std::size_t(j)];
      const auto& cji = structure[std::size_t(j)][std::size_t(i)];
      if (int(cij.size()) != rank) throw InvalidStructure("structure table has wrong size");
      for (int k = 0; k < rank; ++k) {
        if (!same_context(cij[std::size_t(k)].context(), base)) throw InvalidStructure("structure entry in wrong context");
        if (!(cij[std::size_t(k)] + cji[std::size_t(k)]).is_zero()) {
          throw InvalidStructure("structure functions not skew at " + tuple_string({i, j, k}));
        }
      }
    }
  }
}

Section bracket(const AlgebroidData& E, const Section& X, const Section& Y) {
  require_rank(E, X, "bracket");
  require_rank(E, Y, "bracket");
  const auto n = std::size_t(E.rank);
  Section out = Section::zero(E.base, E.rank);
  for (std::size_t i = 0; i < n; ++i) {
    if (X.f[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (Y.f[j].is_zero()) continue;
      Poly fg = X.f[i] * Y.f[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!E.structure[i][j][k].is_zero()) out.f[k] += fg * E.structure[i][j][k];
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    out.f[k] += anchor_apply(E, X, Y.f[k]);
    out.f[k] -= anchor_apply(E, Y, X.f[k]);
  }
  return out;
}

Multivector anchor_field(const AlgebroidData& E, const Section& X) {
  require_rank(E, X, "anchor_field");
  std::vector<Poly> comps(E.base->size(), zero_of(E.base));
  for (std::size_t i = 0; i < std::size_t(E.rank); ++i) {
    if (X.f[i].is_zero()) continue;
    for (std::size_t a = 0; a < comps.size(); ++a) comps[a] += X.f[i] * E.anchor[i][a];
  }
  return vector_field(E.base, comps);
}

Poly anchor_apply(const AlgebroidData& E, const Section& X, const Poly& h) {
  require_rank(E, X, "anchor_apply");
  Poly out(E.base);
  for (std::size_t a = 0; a < E.base->size(); ++a) {
    Poly dh = h.partial(a);
    if (dh.is_zero()) continue;
    for (std::size_t i = 0; i < std::size_t(E.rank); ++i) {
      if (!X.f[i].is_zero() && !E.anchor[i][a].is_zero()) out += X.f[i] * E.anchor[i][a] * dh;
    }
  }
  return out;
}

Report check_jacobi(const AlgebroidData& E) {
  Report r;
  auto e = [&](int i) { return Section::basis(E.base, E.rank, i); };
  std::string witness;
  for (int i = 0; i < E.rank && witness.empty(); ++i) {
    for (int j = i + 1; j < E.rank && witness.empty(); ++j) {
      for (int k = j + 1; k < E.rank && witness.empty(); ++k) {
        Section jac = bracket(E, e(i), bracket(E, e(j), e(k))) + bracket(E, e(j), bracket(E, e(k), e(i))) +
                      bracket(E, e(k), bracket(E, e(i), e(j)));
        if (!jac.is_zero()) {
          witness = "(" + E.frame[std::size_t(i)] + "," + E.frame[std::size_t(j)] + "," + E.frame[std::size_t(k)] +
                    "):" + print_section(jac, E.frame);
        }
      }
    }
  }
  r.add("jacobi.frame", witness.empty(), witness);
  witness.clear();
  for (int i = 0; i < E.rank && witness.empty(); ++i) {
    for (int j = i + 1; j < E.rank && witness.empty(); ++j) {
      Multivector lhs = anchor_field(E, bracket(E, e(i), e(j)));
      Multivector rhs = sn_bracket(anchor_field(E, e(i)), anchor_field(E, e(j)));
      Multivector diff = lhs - rhs;
      if (!diff.is_zero()) {
        witness = "(" + E.frame[std::size_t(i)] + "," + E.frame[std::size_t(j)] + "):" + print_multivector(diff);
      }
    }
  }
  r.add("jacobi.anchor", witness.empty(), witness);
  return r;
}

QuasiDer QuasiDer::zero(const Ctx& base, int rank) {
  QuasiDer D;
  D.matrix.assign(std::size_t(rank), std::vector<Poly>(std::size_t(rank), Poly(base)));
  D.anchor.assign(base->size(), Poly(base));
  return D;
}

Section qder_apply(const QuasiDer& D, const Section& X) {
  const std::size_t n = D.matrix.size();
  if (std::size_t(X.rank()) != n) throw DimensionMismatch("qder_apply: rank mismatch");
  if (n == 0) return X;
  const Ctx& base = X.f[0].context();
  Section out = Section::zero(base, int(n));
  Multivector hat = qder_anchor_field(D, base);
  for (std::size_t i = 0; i < n; ++i) {
    if (!X.f[i].is_zero()) {
      for (std::size_t j = 0; j < n; ++j) out.f[j] += X.f[i] * D.matrix[i][j];
    }
    out.f[i] += apply_field(hat, X.f[i]);
  }
  return out;
}

Multivector qder_anchor_field(const QuasiDer& D, const Ctx& base) {
  if (D.anchor.size() != base->size()) throw DimensionMismatch("quasi-derivation anchor has wrong length");
  return vector_field(base, D.anchor);
}

QuasiDer inner_qder(const AlgebroidData& E, const Section& X0) {
  QuasiDer D = QuasiDer::zero(E.base, E.rank);
  for (int i = 0; i < E.rank; ++i) D.matrix[std::size_t(i)] = bracket(E, X0, Section::basis(E.base, E.rank, i)).f;
  D.anchor = field_components(anchor_field(E, X0));
  return D;
}

QuasiDer operator+(const QuasiDer& a, const QuasiDer& b) {
  if (a.matrix.size() != b.matrix.size() || a.anchor.size() != b.anchor.size()) {
    throw DimensionMismatch("quasi-derivation sum: shape mismatch");
  }
  QuasiDer out = a;
  for (std::size_t i = 0; i < a.matrix.size(); ++i) {
    for (std::size_t j = 0; j < a.matrix.size(); ++j) out.matrix[i][j] += b.matrix[i][j];
  }
  for (std::size_t k = 0; k < a.anchor.size(); ++k) out.anchor[k] += b.anchor[k];
  return out;
}

QuasiDer operator-(const QuasiDer& a, const QuasiDer& b) {
  QuasiDer neg = b;
  for (auto& row : neg.matrix) {
    for (auto& p : row) p = -p;
  }
  for (auto& p : neg.anchor) p = -p;
  return a + neg;
}

Section cocycle_defect(const AlgebroidData& E, const QuasiDer& D, const Section& X0, const Section& X1) {
  return bracket(E, X0, qder_apply(D, X1)) + bracket(E, qder_apply(D, X0), X1) - qder_apply(D, bracket(E, X0, X1));
}

Report is_cocycle(const QuasiDer& D, const AlgebroidData& E) {
  if (int(D.matrix.size()) != E.rank) throw DimensionMismatch("is_cocycle: rank mismatch");
  Report r;
  auto e = [&](int i) { return Section::basis(E.base, E.rank, i); };
  std::string witness;
  for (int i = 0; i < E.rank && witness.empty(); ++i) {
    for (int j = i + 1; j < E.rank && witness.empty(); ++j) {
      Section c = cocycle_defect(E, D, e(i), e(j));
      if (!c.is_zero()) {
        witness = "(" + E.frame[std::size_t(i)] + "," + E.frame[std::size_t(j)] + "):" + print_section(c, E.frame);
      }
    }
  }
  r.add("cocycle.frame", witness.empty(), witness);
  witness.clear();
  for (int i = 0; i < E.rank && witness.empty(); ++i) {
    for (int j = 0; j < E.rank && witness.empty(); ++j) {
      for (std::size_t a = 0; a < E.base->size() && witness.empty(); ++a) {
        Poly xa = Poly::variable(E.base, a);
        Section c = cocycle_defect(E, D, e(i), xa * e(j)) - xa * cocycle_defect(E, D, e(i), e(j));
        if (!c.is_zero()) {
          witness = "(" + E.frame[std::size_t(i)] + "," + E.base->name(a) + "*" + E.frame[std::size_t(j)] +
                    "):" + print_section(c, E.frame);
        }
      }
    }
  }
  r.add("cocycle.anchor", witness.empty(), witness);
  return r;
}

Ctx total_context(const Ctx& base, const std::vector<std::string>& fiber) {
  if (base->fiber_count() != 0) throw InvalidStructure("total_context: base already has fibre variables");
  return VarContext::make(base->names(), fiber);
}

Poly fiber_linear(const std::vector<Poly>& coeffs, const Ctx& total) {
  if (coeffs.size() != total->fiber_count()) throw DimensionMismatch("fiber_linear: coefficient count mismatch");
  Poly out(total);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out += coeffs[i].rebase(total) * Poly::variable(total, total->base_count() + i);
  }
  return out;
}

std::vector<Poly> lie_covector(const AlgebroidData& E, const Section& X, const std::vector<Poly>& mu) {
  if (int(mu.size()) != E.rank) throw DimensionMismatch("lie_covector: rank mismatch");
  std::vector<Poly> out;
  for (int j = 0; j < E.rank; ++j) {
    Poly v = anchor_apply(E, X, mu[std::size_t(j)]);
    Section b = bracket(E, X, Section::basis(E.base, E.rank, j));
    for (int i = 0; i < E.rank; ++i) v -= mu[std::size_t(i)] * b.f[std::size_t(i)];
    out.push_back(v);
  }
  return out;
}

Multivector complete_lift(const AlgebroidData& E, const Section& X, const Ctx& total) {
  require_rank(E, X, "complete_lift");
  require_total(E, total, "complete_lift");
  const std::size_t m = E.base->size();
  const auto n = std::size_t(E.rank);
  std::vector<Poly> comps(m + n, Poly(total));
  auto base_part = field_components(anchor_field(E, X));
  for (std::size_t a = 0; a < m; ++a) comps[a] = base_part[a].rebase(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly coef = anchor_apply(E, Section::basis(E.base, E.rank, int(j)), X.f[i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (!X.f[k].is_zero()) coef -= X.f[k] * E.structure[k][j][i];
      }
      if (!coef.is_zero()) comps[m + i] += coef.rebase(total) * Poly::variable(total, m + j);
    }
  }
  return vector_field(total, comps);
}

Multivector vertical_lift(const Section& X, const Ctx& total) {
  if (std::size_t(X.rank()) != total->fiber_count()) throw DimensionMismatch("vertical_lift: rank mismatch");
  std::vector<Poly> comps(total->size(), Poly(total));
  for (std::size_t i = 0; i < X.f.size(); ++i) comps[total->base_count() + i] = X.f[i].rebase(total);
  return vector_field(total, comps);
}

Report complete_lift_selftest(const AlgebroidData& E, const Section& X, const Ctx& total) {
  Report r;
  Multivector Xc = complete_lift(E, X, total);
  std::string witness;
  for (int i = 0; i < E.rank && witness.empty(); ++i) {
    std::vector<Poly> mu(std::size_t(E.rank), Poly(E.base));
    mu[std::size_t(i)] = Poly::constant(E.base, 1);
    Poly lhs = apply_field(Xc, fiber_linear(mu, total));
    Poly rhs = fiber_linear(lie_covector(E, X, mu), total);
    if (!(lhs == rhs)) witness = "fibre " + std::to_string(i) + ":" + print_poly(lhs - rhs);
  }
  r.add("lift.fibre", witness.empty(), witness);
  witness.clear();
  for (std::size_t a = 0; a < E.base->size() && witness.empty(); ++a) {
    Poly lhs = apply_field(Xc, Poly::variable(total, a));
    Poly rhs = anchor_apply(E, X, Poly::variable(E.base, a)).rebase(total);
    if (!(lhs == rhs)) witness = E.base->name(a) + ":" + print_poly(lhs - rhs);
  }
  r.add("lift.base", witness.empty(), witness);
  return r;
}

Multivector dual_linear_poisson(const AlgebroidData& E, const Ctx& total) {
  require_total(E, total, "dual_linear_poisson");
  const std::size_t m = E.base->size();
  const auto n = std::size_t(E.rank);
  Multivector L = mv_zero(total, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Poly> c(n, Poly(E.base));
      for (std::size_t k = 0; k < n; ++k) c[k] = E.structure[i][j][k];
      Poly v = fiber_linear(c, total);
      if (!v.is_zero()) L.add({int(m + i), int(m + j)}, v);
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (!E.anchor[i][a].is_zero()) L.add({int(m + i), int(a)}, E.anchor[i][a].rebase(total));
    }
  }
  return L;
}

Multivector linear_field_from_qder(const QuasiDer& D, const Ctx& total) {
  const std::size_t m = total->base_count();
  const std::size_t n = total->fiber_count();
  if (D.matrix.size() != n || D.anchor.size() != m) throw DimensionMismatch("linear_field_from_qder: shape mismatch");
  std::vector<Poly> comps(m + n, Poly(total));
  for (std::size_t a = 0; a < m; ++a) comps[a] = D.anchor[a].rebase(total);
  for (std::size_t i = 0; i < n; ++i) comps[m + i] = fiber_linear(D.matrix[i], total);
  return vector_field(total, comps);
}

QuasiDer qder_from_linear_field(const Multivector& field, const Ctx& base, int rank) {
  const Ctx& total = field.context();
  const std::size_t m = total->base_count();
  if (int(total->fiber_count()) != rank || m != base->size()) {
    throw DimensionMismatch("qder_from_linear_field: shape mismatch");
  }
  auto to_base = [&](const Poly& p) {
    for (std::size_t v = m; v < total->size(); ++v) {
      if (p.degree_in(v) > 0) throw InvalidStructure("field is not linear in the fibre coordinates");
    }
    return p.rebase(base);
  };
  QuasiDer D = QuasiDer::zero(base, rank);
  auto comps = field_components(field);
  for (std::size_t a = 0; a < m; ++a) D.anchor[a] = to_base(comps[a]);
  for (std::size_t i = 0; i < std::size_t(rank); ++i) {
    Poly rebuilt(total);
    for (std::size_t j = 0; j < std::size_t(rank); ++j) {
      Poly coef = comps[m + i].partial(m + j);
      D.matrix[i][j] = to_base(coef);
      rebuilt += coef * Poly::variable(total, m + j);
    }
    if (!(rebuilt == comps[m + i])) throw InvalidStructure("field is not linear in the fibre coordinates");
  }
  return D;
}

}  // namespace affgebra
