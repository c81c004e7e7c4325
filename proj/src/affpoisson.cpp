#include "affgebra/affpoisson.hpp"

#include "affgebra/errors.hpp"
#include "affgebra/random.hpp"

namespace affgebra {

namespace {

// Coefficients c_i of p = sum c_i * fibre_i; throws unless p is fibrewise linear.
std::vector<Poly> linear_coeffs(const Poly& p, const Ctx& base) {
  const Ctx& total = p.context();
  const std::size_t m = total->base_count();
  std::vector<Poly> out(total->fiber_count(), Poly(total));
  for (const auto& term : p.terms()) {
    int degree = 0;
    std::size_t slot = 0;
    for (std::size_t v = m; v < total->size(); ++v) {
      if (term.mono[v] > 0) {
        degree += term.mono[v];
        slot = v - m;
      }
    }
    if (degree != 1) throw InvalidStructure("not a fibrewise linear function: " + print_poly(p));
    Monomial mono = term.mono;
    mono.set(m + slot, 0);
    out[slot] += Poly::monomial(total, mono, term.coeff);
  }
  for (auto& c : out) c = c.rebase(base);
  return out;
}

Poly base_only(const Poly& p, const Ctx& base) {
  const Ctx& total = p.context();
  for (std::size_t v = total->base_count(); v < total->size(); ++v) {
    if (p.degree_in(v) > 0) throw InvalidStructure("expected a function on the base: " + print_poly(p));
  }
  return p.rebase(base);
}

std::vector<std::string> default_dual_names(const Ctx& base, int n) { return fresh_names(base, "xi", 1, n); }

Multivector model_field(const AffDerPair& a, const Ctx& total, const Poly& s_part) {
  const std::size_t m = total->base_count();
  std::vector<Poly> comps;
  for (const auto& c : field_components(a.X)) comps.push_back(c.rebase(total));
  if (comps.size() != m || total->fiber_count() != 1) throw DimensionMismatch("model field: shape mismatch");
  comps.push_back(s_part - a.g.rebase(total));
  return vector_field(total, comps);
}

AffDerPair from_model(const Multivector& field, const Ctx& base, bool shifted) {
  const Ctx& total = field.context();
  const std::size_t m = total->base_count();
  if (m != base->size() || total->fiber_count() != 1) throw DimensionMismatch("model field: shape mismatch");
  auto comps = field_components(field);
  std::vector<Poly> xs;
  for (std::size_t a = 0; a < m; ++a) xs.push_back(base_only(comps[a], base));
  Poly s = comps[m];
  if (shifted) s -= Poly::variable(total, m);
  return {vector_field(base, xs), base_only(-s, base)};
}

Poly affine_apply(const Multivector& D, const Poly& d0, const Poly& f) { return apply_field(D, f) + d0 * f; }

}  // namespace

Poly affpoisson_bracket(const AffPoissonData& P, const Poly& f, const Poly& g) {
  require_same_context(f.context(), g.context(), "affpoisson_bracket");
  require_same_context(P.lambda.context(), f.context(), "affpoisson_bracket");
  return apply_field(P.D, g - f) + bivector_apply(P.lambda, f, g);
}

Poly affpoisson_mixed(const AffPoissonData& P, const Poly& f, const Poly& X) {
  return apply_field(P.D, X) + bivector_apply(P.lambda, f, X);
}

std::vector<Poly> jacobi_test_set(const Ctx& ctx) {
  std::vector<Poly> out{Poly(ctx), Poly::constant(ctx, 1)};
  for (std::size_t i = 0; i < ctx->size(); ++i) out.push_back(Poly::variable(ctx, i));
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    for (std::size_t j = i; j < ctx->size(); ++j) out.push_back(Poly::variable(ctx, i) * Poly::variable(ctx, j));
  }
  return out;
}

std::string affine_jacobi_witness(const Ctx& ctx, const AffBracketFn& bracket, const AffBracketFn& mixed) {
  const auto S = jacobi_test_set(ctx);
  const std::size_t N = S.size();
  std::vector<std::vector<Poly>> B(N, std::vector<Poly>(N, Poly(ctx)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) B[i][j] = bracket(S[i], S[j]);
  }
  // the cyclic sum is invariant under rotation, so the first slot can hold the smallest index
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      for (std::size_t k = i; k < N; ++k) {
        Poly J = mixed(S[i], B[j][k]) + mixed(S[j], B[k][i]) + mixed(S[k], B[i][j]);
        if (!J.is_zero()) {
          return "(" + print_poly(S[i]) + ", " + print_poly(S[j]) + ", " + print_poly(S[k]) + "): " + print_poly(J);
        }
      }
    }
  }
  return {};
}

Report check_affpoisson(const AffPoissonData& P) {
  Report r;
  Multivector ll = sn_bracket(P.lambda, P.lambda);
  r.add("affpoisson.sn_lambda", ll.is_zero(), print_multivector(ll));
  Multivector dl = sn_bracket(P.D, P.lambda);
  r.add("affpoisson.sn_d_lambda", dl.is_zero(), print_multivector(dl));
  std::string w = affine_jacobi_witness(
      P.lambda.context(), [&](const Poly& f, const Poly& g) { return affpoisson_bracket(P, f, g); },
      [&](const Poly& f, const Poly& X) { return affpoisson_mixed(P, f, X); });
  r.add("affpoisson.jacobi", w.empty(), w);
  return r;
}

Poly affjacobi_bracket(const AffJacobiData& J, const Poly& f, const Poly& g) {
  require_same_context(f.context(), g.context(), "affjacobi_bracket");
  require_same_context(J.lambda.context(), f.context(), "affjacobi_bracket");
  return affine_apply(J.D, J.d0, g - f) + bivector_apply(J.lambda, f, g) + f * apply_field(J.R, g) -
         g * apply_field(J.R, f);
}

Poly affjacobi_mixed(const AffJacobiData& J, const Poly& f, const Poly& X) {
  return affine_apply(J.D, J.d0, X) + bivector_apply(J.lambda, f, X) + f * apply_field(J.R, X) -
         X * apply_field(J.R, f);
}

Report check_affjacobi(const AffJacobiData& J) {
  Report r;
  std::string w = affine_jacobi_witness(
      J.lambda.context(), [&](const Poly& f, const Poly& g) { return affjacobi_bracket(J, f, g); },
      [&](const Poly& f, const Poly& X) { return affjacobi_mixed(J, f, X); });
  r.add("affjacobi.jacobi", w.empty(), w);
  return r;
}

AffDerPair ex1_bracket(const AffDerPair& a, const AffDerPair& b) {
  require_same_context(a.X.context(), b.X.context(), "ex1_bracket");
  return {sn_bracket(a.X, b.X), apply_field(a.X, b.g) - apply_field(b.X, a.g)};
}

AffDerPair ex2_bracket(const AffDerPair& a, const AffDerPair& b) {
  AffDerPair out = ex1_bracket(a, b);
  out.g += a.g - b.g;
  return out;
}

Multivector ex1_model_field(const AffDerPair& a, const Ctx& total) { return model_field(a, total, Poly(total)); }

Multivector ex2_model_field(const AffDerPair& a, const Ctx& total) {
  return model_field(a, total, Poly::variable(total, total->base_count()));
}

AffDerPair ex1_from_model(const Multivector& field, const Ctx& base) { return from_model(field, base, false); }

AffDerPair ex2_from_model(const Multivector& field, const Ctx& base) { return from_model(field, base, true); }

LinearAffPoisson from_affgebroid(const AffgebroidData& A, std::vector<std::string> dual_names) {
  A.V.validate();
  if (dual_names.empty()) dual_names = default_dual_names(A.base(), A.rank());
  if (int(dual_names.size()) != A.rank()) throw DimensionMismatch("from_affgebroid: wrong number of dual names");
  Ctx total = total_context(A.base(), dual_names);
  return {total, {dual_linear_poisson(A.V, total), linear_field_from_qder(A.D, total)}};
}

AffgebroidData to_affgebroid(const LinearAffPoisson& L, const Ctx& base) {
  const Ctx& total = L.total;
  const std::size_t m = total->base_count();
  const int n = int(total->fiber_count());
  if (m != base->size()) throw DimensionMismatch("to_affgebroid: base mismatch");
  auto B = [&](const Poly& f, const Poly& g) { return affpoisson_bracket(L.P, f, g); };
  auto lam = [&](const Poly& f, const Poly& g) { return B(f, g) - B(Poly(total), g - f); };
  const Poly zero(total);
  auto xi = [&](int i) { return Poly::variable(total, m + std::size_t(i)); };
  AffgebroidData A{AlgebroidData::zero(base, n), QuasiDer::zero(base, n)};
  for (std::size_t a = 0; a < m; ++a) A.D.anchor[a] = base_only(B(zero, Poly::variable(total, a)), base);
  for (int j = 0; j < n; ++j) A.D.matrix[std::size_t(j)] = linear_coeffs(B(zero, xi(j)), base);
  for (int i = 0; i < n; ++i) {
    std::vector<Poly> rho;
    for (std::size_t a = 0; a < m; ++a) rho.push_back(base_only(lam(xi(i), Poly::variable(total, a)), base));
    A.V.set_anchor(i, rho);
    for (int j = i + 1; j < n; ++j) A.V.set_bracket(i, j, linear_coeffs(lam(xi(i), xi(j)), base));
  }
  return A;
}

Report check_linear_sections(const AffgebroidData& A, std::uint64_t seed, int samples) {
  LinearAffPoisson L = from_affgebroid(A);
  Report r;
  Rng rng(seed);
  std::string w;
  for (int s = 0; s < samples && w.empty(); ++s) {
    Section X = random_section(rng, A.base(), A.rank());
    Section Y = random_section(rng, A.base(), A.rank());
    Poly lhs = affpoisson_bracket(L.P, fiber_linear(X.f, L.total), fiber_linear(Y.f, L.total));
    Poly rhs = fiber_linear(aff_bracket(A, {X}, {Y}).f, L.total);
    if (!(lhs == rhs)) w = "sample " + std::to_string(s) + ":" + print_poly(lhs - rhs);
  }
  r.add("linear_sections.bracket", w.empty(), w);
  w.clear();
  try {
    AffgebroidData back = to_affgebroid(L, A.base());
    if (!(back.D == A.D)) {
      w = "quasi-derivation differs";
    } else if (back.V.anchor != A.V.anchor) {
      w = "anchor differs";
    } else if (back.V.structure != A.V.structure) {
      w = "structure functions differ";
    }
  } catch (const InvalidStructure& e) {
    w = e.what();
  }
  r.add("linear_sections.readback", w.empty(), w);
  return r;
}

Report check_reductions(const AffgebroidData& A, std::uint64_t seed, int samples) {
  const Ctx& base = A.base();
  const int n = A.rank();
  HullAlgebroid hull = build_hull(A);
  std::vector<std::string> xi = default_dual_names(base, n);
  Ctx taken = VarContext::make(base->names(), xi);
  std::vector<std::string> hull_names{"eta"};
  while (taken->index_of(hull_names[0])) hull_names[0] += "_";
  hull_names.insert(hull_names.end(), xi.begin(), xi.end());
  Ctx hctx = total_context(base, hull_names);
  Multivector lambda0 = dual_linear_poisson(hull.H, hctx);
  LinearAffPoisson L = from_affgebroid(A, xi);

  Report r;
  Rng rng(seed);
  std::string w;
  for (int s = 0; s < samples && w.empty(); ++s) {
    Poly f = random_poly(rng, L.total, 2, 3);
    Poly g = random_poly(rng, L.total, 2, 3);
    Poly lhs = bivector_apply(lambda0, f.rebase(hctx), g.rebase(hctx));
    Poly rhs = bivector_apply(L.P.lambda, f, g).rebase(hctx);
    if (!(lhs == rhs)) w = "sample " + std::to_string(s) + ":" + print_poly(lhs - rhs);
  }
  r.add("reduction.linear", w.empty(), w);

  EpiData e;
  e.base = base;
  e.n = n;
  std::vector<std::string> epi_names = xi;
  epi_names.push_back(hull_names[0]);
  e.total = total_context(base, epi_names);
  w.clear();
  for (int s = 0; s < samples && w.empty(); ++s) {
    LinSec f1 = random_section(rng, base, n).f;
    LinSec f2 = random_section(rng, base, n).f;
    std::vector<Poly> u1, u2;
    for (const auto& c : f1) u1.push_back(-c);
    for (const auto& c : f2) u2.push_back(-c);
    Poly lhs = affpoisson_bracket(L.P, fiber_linear(u1, L.total), fiber_linear(u2, L.total)).rebase(hctx);
    Poly rhs = bivector_apply(lambda0, linsec_to_fsigma(e, f1).rebase(hctx), linsec_to_fsigma(e, f2).rebase(hctx));
    if (!(lhs == rhs)) w = "sample " + std::to_string(s) + ":" + print_poly(lhs - rhs);
  }
  r.add("reduction.affine", w.empty(), w);
  return r;
}

AffgebroidData mechanics_affgebroid(int k) {
  if (k < 1) throw DimensionMismatch("mechanics: need at least one spatial coordinate");
  std::vector<std::string> names{"t"};
  auto qs = k == 1 ? std::vector<std::string>{"q"} : numbered_names("q", 1, k);
  names.insert(names.end(), qs.begin(), qs.end());
  Ctx base = VarContext::make(names);
  AffgebroidData A{AlgebroidData::zero(base, k), QuasiDer::zero(base, k)};
  for (int i = 0; i < k; ++i) {
    std::vector<Poly> rho(base->size(), Poly(base));
    rho[std::size_t(i + 1)] = Poly::constant(base, 1);
    A.V.set_anchor(i, rho);
  }
  A.D.anchor[0] = Poly::constant(base, 1);
  return A;
}

Ctx mechanics_phase_context(int k) {
  AffgebroidData A = mechanics_affgebroid(k);
  return total_context(A.base(), k == 1 ? std::vector<std::string>{"p"} : numbered_names("p", 1, k));
}

MechanicsDemo mechanics_demo(int k, const Poly& H) {
  AffgebroidData A = mechanics_affgebroid(k);
  Ctx phase = mechanics_phase_context(k);
  LinearAffPoisson L = from_affgebroid(A, {phase->names().begin() + long(phase->base_count()), phase->names().end()});
  MechanicsDemo demo{A, L, mv_zero(phase, 1), {}, {}};
  require_same_context(demo.L.total, H.context(), "mechanics_demo");
  std::vector<Poly> comps;
  for (std::size_t v = 0; v < phase->size(); ++v) {
    comps.push_back(affpoisson_mixed(demo.L.P, H, Poly::variable(phase, v)));
    demo.lines.push_back("d" + phase->name(v) + "/ds = " + print_poly(comps.back()));
  }
  demo.field = vector_field(phase, comps);
  demo.report.add("mech.time_component", comps[0] == Poly::constant(phase, 1), print_poly(comps[0]));
  demo.report.append(check_thm13(demo.A, Poly::variable(demo.A.base(), std::size_t(0))));
  return demo;
}

}  // namespace affgebra
