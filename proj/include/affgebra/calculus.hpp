#pragma once

// Exterior calculus of an algebroid: forms on the frame, the Cartan
// differential, and the affine-form view through the hull.

#include <map>
#include <string>
#include <vector>

#include "affgebra/affgebroid.hpp"
#include "affgebra/algebroid.hpp"
#include "affgebra/report.hpp"
#include "affgebra/skew.hpp"

namespace affgebra {

struct AlgFormTag {};
// Components on increasing tuples of frame indices; for a hull index 0 is alpha_0.
using AlgForm = SkewTensor<AlgFormTag>;

AlgForm alg_form_zero(const AlgebroidData& E, int degree);
AlgForm alg_form_scalar(const AlgebroidData& E, const Poly& f);
// Dual frame covector e^{*i}.
AlgForm frame_covector(const AlgebroidData& E, int i);
AlgForm phi_form(const HullAlgebroid& hull);

// `{e1,e2}: poly; ...` using frame names; "0" for the zero form.
std::string print_alg_form(const AlgForm& mu, const std::vector<std::string>& frame);

inline AlgForm wedge_alg(const AlgForm& a, const AlgForm& b) { return wedge(a, b); }

// mu(X_1, .., X_k) with determinant normalization: (a ^ b)(X, Y) = a(X)b(Y) - a(Y)b(X).
Poly alg_form_eval(const AlgForm& mu, const std::vector<Section>& args);
AlgForm alg_d(const AlgebroidData& E, const AlgForm& mu);
inline AlgForm alg_d(const HullAlgebroid& hull, const AlgForm& mu) { return alg_d(hull.H, mu); }

// d^2 on base coordinates and on every dual frame covector, and d phi.
Report d_squared_report(const HullAlgebroid& hull);

// Evaluation on affine sections via the hull sections (vec, 1).
Poly aff_form_eval(const AlgForm& mu, const std::vector<AffSection>& args);
// The unique hull form with prescribed values on the sections alpha_0, alpha_0 + e_1, ..
// indexed by increasing tuples over 0..n.
AlgForm aff_form_extend(const Ctx& base, int model_rank, int degree, const std::map<IndexTuple, Poly>& values);
AlgForm aff_d(const AffgebroidData& A, const AlgForm& mu);
// Right-hand side of the affine Cartan formula using only the affine bracket,
// the affine anchor and evaluations on affine sections.
Poly aff_d_literal(const AffgebroidData& A, const AlgForm& mu, const std::vector<AffSection>& args);

// Drops components with index 0 and shifts the remaining indices down by one.
AlgForm reduce_mod_phi(const AlgForm& mu);

}  // namespace affgebra
