#include "affgebra/affgebroid.hpp"

#include <algorithm>

#include "affgebra/calculus.hpp"
#include "affgebra/errors.hpp"

namespace affgebra {

namespace {

std::string hull_frame_name(const AlgebroidData& H, int i) {
  if (i == 0) return H.frame[0];
  return H.frame[0] + "+" + H.frame[std::size_t(i)];
}

Section hull_frame_aff(const AlgebroidData& H, int i) {
  Section s = Section::basis(H.base, H.rank, 0);
  if (i > 0) s.f[std::size_t(i)] = Poly::constant(H.base, 1);
  return s;
}

// First pair of frame affine sections whose bracket leaves the model bundle.
std::string closure_witness(const AlgebroidData& H) {
  for (int i = 0; i < H.rank; ++i) {
    for (int j = i + 1; j < H.rank; ++j) {
      Section b = bracket(H, hull_frame_aff(H, i), hull_frame_aff(H, j));
      if (!b.f[0].is_zero()) {
        return "(" + hull_frame_name(H, i) + "," + hull_frame_name(H, j) + "):" + print_poly(b.f[0]);
      }
    }
  }
  return {};
}

Multivector restrict_to_level_set(const Multivector& field, const Ctx& affine_total) {
  const Ctx& hctx = field.context();
  const std::size_t m = affine_total->base_count();
  auto comps = field_components(field);
  for (auto& c : comps) c = c.substitute(m, Rational(1));
  if (!comps[m].is_zero()) {
    throw InvalidStructure("lift is not tangent to the affine bundle: " + hctx->name(m) + " component " +
                           print_poly(comps[m]));
  }
  std::vector<Poly> out;
  for (std::size_t v = 0; v < comps.size(); ++v) {
    if (v != m) out.push_back(comps[v].rebase(affine_total));
  }
  return vector_field(affine_total, out);
}

}  // namespace

AffSection reference_section(const AffgebroidData& A) { return {Section::zero(A.base(), A.rank())}; }

AffSection frame_aff_section(const AffgebroidData& A, int i) {
  if (i == 0) return reference_section(A);
  return {Section::basis(A.base(), A.rank(), i - 1)};
}

Section aff_bracket(const AffgebroidData& A, const AffSection& a, const AffSection& b) {
  return qder_apply(A.D, b.vec) - qder_apply(A.D, a.vec) + bracket(A.V, a.vec, b.vec);
}

Section aff_bracket_mixed(const AffgebroidData& A, const AffSection& a, const Section& X) {
  return qder_apply(A.D, X) + bracket(A.V, a.vec, X);
}

Multivector aff_anchor(const AffgebroidData& A, const AffSection& a) {
  return qder_anchor_field(A.D, A.base()) + anchor_field(A.V, a.vec);
}

Report check_affgebroid(const AffgebroidData& A, std::uint64_t seed, int samples) {
  Report r;
  r.append(check_jacobi(A.V));
  r.append(is_cocycle(A.D, A.V));
  Rng rng(seed);
  std::string witness;
  for (int s = 0; s < samples && witness.empty(); ++s) {
    AffSection a{random_section(rng, A.base(), A.rank())};
    AffSection b{random_section(rng, A.base(), A.rank())};
    AffSection c{random_section(rng, A.base(), A.rank())};
    Section jac = aff_bracket_mixed(A, a, aff_bracket(A, b, c)) + aff_bracket_mixed(A, b, aff_bracket(A, c, a)) +
                  aff_bracket_mixed(A, c, aff_bracket(A, a, b));
    if (!jac.is_zero()) witness = "sample " + std::to_string(s) + ":" + print_section(jac, A.V.frame);
  }
  r.add("affgebroid.affine_jacobi", witness.empty(), witness);
  return r;
}

std::pair<AffgebroidData, Section> change_reference(const AffgebroidData& A, const Section& X0) {
  AffgebroidData out = A;
  out.D = A.D + inner_qder(A.V, X0);
  return {out, X0};
}

HullAlgebroid build_hull(const AffgebroidData& A) {
  const int n = A.rank();
  AlgebroidData H = AlgebroidData::zero(A.base(), n + 1);
  H.frame.assign(1, "a0");
  while (std::find(A.V.frame.begin(), A.V.frame.end(), H.frame[0]) != A.V.frame.end()) H.frame[0] += "_";
  H.frame.insert(H.frame.end(), A.V.frame.begin(), A.V.frame.end());
  H.anchor[0] = A.D.anchor;
  for (int i = 0; i < n; ++i) {
    H.anchor[std::size_t(i + 1)] = A.V.anchor[std::size_t(i)];
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        H.structure[std::size_t(i + 1)][std::size_t(j + 1)][std::size_t(k + 1)] =
            A.V.structure[std::size_t(i)][std::size_t(j)][std::size_t(k)];
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Poly> value(std::size_t(n + 1), Poly(A.base()));
    for (int k = 0; k < n; ++k) value[std::size_t(k + 1)] = A.D.matrix[std::size_t(j)][std::size_t(k)];
    H.set_bracket(0, j + 1, value);
  }
  return {H};
}

Section hull_section(const Section& X, const Poly& f) {
  Section out;
  out.f.push_back(f);
  out.f.insert(out.f.end(), X.f.begin(), X.f.end());
  return out;
}

Section hull_section(const AffSection& a) {
  if (a.vec.f.empty()) throw DimensionMismatch("hull_section: rank-0 affine section needs a context");
  return hull_section(a.vec, Poly::constant(a.vec.f[0].context(), 1));
}

RestrictResult restrict_hull(const HullAlgebroid& hull) {
  const AlgebroidData& H = hull.H;
  if (H.rank < 1) throw DimensionMismatch("restrict_hull: hull has rank 0");
  RestrictResult res;
  res.witness = closure_witness(H);
  if (!res.witness.empty()) return res;
  const int n = H.rank - 1;
  AffgebroidData A{AlgebroidData::zero(H.base, n), QuasiDer::zero(H.base, n)};
  A.V.frame.assign(H.frame.begin() + 1, H.frame.end());
  A.D.anchor = H.anchor[0];
  for (int i = 0; i < n; ++i) {
    A.V.anchor[std::size_t(i)] = H.anchor[std::size_t(i + 1)];
    for (int j = 0; j < n; ++j) {
      A.D.matrix[std::size_t(i)][std::size_t(j)] = H.structure[0][std::size_t(i + 1)][std::size_t(j + 1)];
      for (int k = 0; k < n; ++k) {
        A.V.structure[std::size_t(i)][std::size_t(j)][std::size_t(k)] =
            H.structure[std::size_t(i + 1)][std::size_t(j + 1)][std::size_t(k + 1)];
      }
    }
  }
  res.data = std::move(A);
  return res;
}

Report check_thm11(const HullAlgebroid& hull) {
  const AlgebroidData& H = hull.H;
  const std::size_t m = H.base->size();
  Report r;

  std::string w = closure_witness(H);
  r.add("hull.closure", w.empty(), w);

  AlgForm dphi = alg_d(H, phi_form(hull));
  r.add("hull.dphi", dphi.is_zero(), print_alg_form(dphi, H.frame));

  Ctx dual = total_context(H.base, fresh_names(H.base, "xi", 0, H.rank));
  Multivector lambda = dual_linear_poisson(H, dual);
  Section phi = Section::basis(H.base, H.rank, 0);
  Multivector lie = sn_bracket(vertical_lift(phi, dual), lambda);
  r.add("hull.phi_poisson", lie.is_zero(), print_multivector(lie));

  Ctx total = total_context(H.base, fresh_names(H.base, "y", 0, H.rank));
  w.clear();
  for (int i = 0; i < H.rank && w.empty(); ++i) {
    Multivector Xc = complete_lift(H, hull_frame_aff(H, i), total);
    Poly normal = Xc.get({int(m)}).substitute(m, Rational(1));
    if (!normal.is_zero()) w = hull_frame_name(H, i) + ":" + print_poly(normal);
  }
  r.add("hull.tangent", w.empty(), w);
  return r;
}

Ctx affine_total_context(const AffgebroidData& A) {
  return total_context(A.base(), fresh_names(A.base(), "y", 1, A.rank()));
}

Ctx hull_total_context(const Ctx& affine_total) {
  std::vector<std::string> base(affine_total->names().begin(),
                                affine_total->names().begin() + long(affine_total->base_count()));
  std::vector<std::string> fiber = fresh_names(affine_total, "y", 0, 1);
  fiber.insert(fiber.end(), affine_total->names().begin() + long(affine_total->base_count()),
               affine_total->names().end());
  return VarContext::make(base, fiber);
}

Multivector aff_complete_lift(const AffgebroidData& A, const AffSection& a, const Ctx& affine_total) {
  HullAlgebroid hull = build_hull(A);
  Ctx hctx = hull_total_context(affine_total);
  return restrict_to_level_set(complete_lift(hull.H, hull_section(a.vec, Poly::constant(A.base(), 1)), hctx),
                               affine_total);
}

Multivector aff_complete_lift(const AffgebroidData& A, const Section& X, const Ctx& affine_total) {
  HullAlgebroid hull = build_hull(A);
  Ctx hctx = hull_total_context(affine_total);
  return restrict_to_level_set(complete_lift(hull.H, hull_section(X, Poly(A.base())), hctx), affine_total);
}

Multivector aff_vertical_lift(const Section& X, const Ctx& affine_total) { return vertical_lift(X, affine_total); }

Report check_thm13(const AffgebroidData& A, const Poly& t, const std::optional<std::vector<Poly>>& covector) {
  require_same_context(A.base(), t.context(), "check_thm13");
  if (covector) {
    bool is_phi = int(covector->size()) == A.rank() + 1;
    for (std::size_t i = 0; is_phi && i < covector->size(); ++i) {
      is_phi = (*covector)[i] == Poly::constant(A.base(), i == 0 ? 1 : 0);
    }
    if (!is_phi) throw InvalidStructure("supplied covector is not the unit covector of the affine bundle");
  }
  Report r;
  std::string w;
  for (int i = 0; i <= A.rank() && w.empty(); ++i) {
    Poly v = apply_field(aff_anchor(A, frame_aff_section(A, i)), t);
    if (!(v == Poly::constant(A.base(), 1))) {
      std::string name = i == 0 ? "a0" : "a0+" + A.V.frame[std::size_t(i - 1)];
      w = name + ":" + print_poly(v);
    }
  }
  r.add("anchor.time_unit", w.empty(), w);
  return r;
}

}  // namespace affgebra
