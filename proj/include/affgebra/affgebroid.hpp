#pragma once

// Lie affgebroids stored relative to a reference section alpha_0: the model
// algebroid V and the quasi-derivation D = [alpha_0, .].

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affgebra/algebroid.hpp"
#include "affgebra/random.hpp"
#include "affgebra/report.hpp"

namespace affgebra {

struct AffgebroidData {
  AlgebroidData V;
  QuasiDer D;

  const Ctx& base() const { return V.base; }
  int rank() const { return V.rank; }
};

// alpha_0 + vec
struct AffSection {
  Section vec;
};

AffSection reference_section(const AffgebroidData& A);
// alpha_0 (i = 0) or alpha_0 + e_i (1 <= i <= rank).
AffSection frame_aff_section(const AffgebroidData& A, int i);

Section aff_bracket(const AffgebroidData& A, const AffSection& a, const AffSection& b);
// [a, X] = D(X) + [vec(a), X]
Section aff_bracket_mixed(const AffgebroidData& A, const AffSection& a, const Section& X);
// gamma(alpha_0 + X) = D-hat + rho(X)
Multivector aff_anchor(const AffgebroidData& A, const AffSection& a);

// Jacobi and cocycle checks plus a randomized affine Jacobi cross-check.
Report check_affgebroid(const AffgebroidData& A, std::uint64_t seed = 1, int samples = 4);

// Same bracket seen from alpha_0 + X0: D' = D + ad_{X0}. The second member is the shift X0.
std::pair<AffgebroidData, Section> change_reference(const AffgebroidData& A, const Section& X0);

// Algebroid of rank n+1 on the frame (alpha_0, e_1, .., e_n); frame index 0 carries phi = 1.
struct HullAlgebroid {
  AlgebroidData H;
  int model_rank() const { return H.rank - 1; }
};

HullAlgebroid build_hull(const AffgebroidData& A);
// Hull section f*alpha_0 + X.
Section hull_section(const Section& X, const Poly& f);
Section hull_section(const AffSection& a);

struct RestrictResult {
  std::optional<AffgebroidData> data;
  std::string witness;  // offending frame pair on refusal
};
RestrictResult restrict_hull(const HullAlgebroid& hull);

// Four conditions on the hull, each computed on its own: bracket closure,
// d phi = 0, the phi-vertical field preserving the Poisson tensor, and
// tangency of complete lifts to the level set.
Report check_thm11(const HullAlgebroid& hull);

// Coordinates on the affine bundle: base then one fibre coordinate per e_i.
Ctx affine_total_context(const AffgebroidData& A);
// Hull total space: base, then y^0 (the phi coordinate), then the fibre of `affine_total`.
Ctx hull_total_context(const Ctx& affine_total);

// Complete lift of an affine section (or of a model section) restricted to phi = 1.
// Throws InvalidStructure when the lift is not tangent to the level set.
Multivector aff_complete_lift(const AffgebroidData& A, const AffSection& a, const Ctx& affine_total);
Multivector aff_complete_lift(const AffgebroidData& A, const Section& X, const Ctx& affine_total);
Multivector aff_vertical_lift(const Section& X, const Ctx& affine_total);

// gamma(a)(t) = 1 for the frame affine sections. When a covector is given it must be phi.
Report check_thm13(const AffgebroidData& A, const Poly& t,
                   const std::optional<std::vector<Poly>>& covector = std::nullopt);

// Cochains that are quasi-derivations in each argument. values[I] = mu(e_I) for
// increasing I; anchors[J] = components of mu-hat_{(e_J)} for increasing J of size degree-1.
struct QderCochain {
  int degree = 0;
  std::map<IndexTuple, Section> values;
  std::map<IndexTuple, std::vector<Poly>> anchors;

  static QderCochain from_section(const Section& X0);
  static QderCochain from_qder(const QuasiDer& D);

  Section value(const AlgebroidData& E, IndexTuple I) const;
  std::vector<Poly> anchor(const AlgebroidData& E, IndexTuple J) const;
  bool is_zero() const;
};

// mu(X_1, .., X_n) on arbitrary sections.
Section cochain_eval(const AlgebroidData& E, const QderCochain& mu, const std::vector<Section>& args);
// Chevalley coboundary with the adjoint action; throws ExtractionError when the
// anchors of the result are not well defined.
QderCochain chevalley_d(const AlgebroidData& E, const QderCochain& mu);
Report d_squared_zero_qder(const AlgebroidData& E, const QderCochain& mu);

}  // namespace affgebra
