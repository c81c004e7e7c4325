#pragma once

// Brackets on sections of a one-dimensional vectorially trivial affine bundle,
// written through a fixed trivialization so that sections are functions.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affgebra/affgebroid.hpp"
#include "affgebra/algebroid.hpp"
#include "affgebra/duality.hpp"
#include "affgebra/geometry.hpp"
#include "affgebra/report.hpp"

namespace affgebra {

// {f, g} = D(g - f) + lambda(df, dg)
struct AffPoissonData {
  Multivector lambda;  // degree 2
  Multivector D;       // degree 1
};

// {f, g} = D(g - f) + d0 (g - f) + lambda(df, dg) + f R(g) - g R(f)
struct AffJacobiData {
  Multivector lambda;
  Multivector R;
  Multivector D;
  Poly d0;
};

Poly affpoisson_bracket(const AffPoissonData& P, const Poly& f, const Poly& g);
// D(X) + lambda(df, dX): the bracket's dependence on a shift X of its second argument.
Poly affpoisson_mixed(const AffPoissonData& P, const Poly& f, const Poly& X);
Report check_affpoisson(const AffPoissonData& P);

Poly affjacobi_bracket(const AffJacobiData& J, const Poly& f, const Poly& g);
Poly affjacobi_mixed(const AffJacobiData& J, const Poly& f, const Poly& X);
Report check_affjacobi(const AffJacobiData& J);

using AffBracketFn = std::function<Poly(const Poly&, const Poly&)>;
// {0} and every monomial of degree <= 2 in ctx.
std::vector<Poly> jacobi_test_set(const Ctx& ctx);
// Cyclic sum mixed(f, {g, h}) over the test set; empty string when it vanishes.
std::string affine_jacobi_witness(const Ctx& ctx, const AffBracketFn& bracket, const AffBracketFn& mixed);

// (X, g) stands for an affine derivation of functions on Z = M x R.
struct AffDerPair {
  Multivector X;
  Poly g;
};

AffDerPair ex1_bracket(const AffDerPair& a, const AffDerPair& b);
AffDerPair ex2_bracket(const AffDerPair& a, const AffDerPair& b);
// Invariant fields on `total` = base + one fibre coordinate s:
// X - g d/ds and X + (s - g) d/ds respectively.
Multivector ex1_model_field(const AffDerPair& a, const Ctx& total);
Multivector ex2_model_field(const AffDerPair& a, const Ctx& total);
// Inverse readings of the two fields; throw InvalidStructure off the model.
AffDerPair ex1_from_model(const Multivector& field, const Ctx& base);
AffDerPair ex2_from_model(const Multivector& field, const Ctx& base);

// Aff-Poisson structure on the dual of the model bundle; linear functions
// sum X^i xi_i stand for sections X.
struct LinearAffPoisson {
  Ctx total;  // base, then xi_1..xi_n
  AffPoissonData P;
};

// `dual_names` defaults to fresh xi1..xin.
LinearAffPoisson from_affgebroid(const AffgebroidData& A, std::vector<std::string> dual_names = {});
// Reads the model algebroid and the quasi-derivation back from the bracket alone.
AffgebroidData to_affgebroid(const LinearAffPoisson& L, const Ctx& base);
// {iota_X, iota_Y} = iota_{[a0 + X, a0 + Y]} on random pairs.
Report check_linear_sections(const AffgebroidData& A, std::uint64_t seed = 1, int samples = 20);

// Pullback of functions of the model dual along the quotient of the vector dual,
// and the pullback of sections of that quotient as unit functionals.
Report check_reductions(const AffgebroidData& A, std::uint64_t seed = 1, int samples = 10);

// Phase space of a particle: base (t, q..), fibre momenta p...
struct MechanicsDemo {
  AffgebroidData A;
  LinearAffPoisson L;
  Multivector field;  // X_sigma on (t, q, p)
  Report report;
  std::vector<std::string> lines;  // `d<coord>/ds = <poly>`
};

AffgebroidData mechanics_affgebroid(int k);
Ctx mechanics_phase_context(int k);
// H over mechanics_phase_context(k).
MechanicsDemo mechanics_demo(int k, const Poly& H);

}  // namespace affgebra
