#pragma once

// Multivector fields and differential forms on a coordinate patch whose
// coordinates are the variables of a VarContext.

#include <string>
#include <vector>

#include "affgebra/poly.hpp"
#include "affgebra/skew.hpp"

namespace affgebra {

struct MultivectorTag {};
struct DiffFormTag {};

// Tuple indices are variable indices of the context. Degree -1 is allowed and
// always zero; it stands in for the missing lower part of a degree-0 pair.
using Multivector = SkewTensor<MultivectorTag>;
using DiffForm = SkewTensor<DiffFormTag>;

Multivector mv_zero(const Ctx& ctx, int degree);
Multivector mv_scalar(const Poly& f);
Multivector coord_field(const Ctx& ctx, std::size_t var);
// Vector field with the given component per variable; missing trailing components are zero.
Multivector vector_field(const Ctx& ctx, const std::vector<Poly>& components);
std::vector<Poly> field_components(const Multivector& X);

DiffForm form_zero(const Ctx& ctx, int degree);
DiffForm form_scalar(const Poly& f);
DiffForm coord_differential(const Ctx& ctx, std::size_t var);

inline Multivector wedge_mv(const Multivector& P, const Multivector& Q) { return wedge(P, Q); }
inline DiffForm wedge_form(const DiffForm& a, const DiffForm& b) { return wedge(a, b); }

// Schouten-Nijenhuis bracket; Lie bracket on vector fields, [X, f] = X(f).
Multivector sn_bracket(const Multivector& P, const Multivector& Q);

// X(f) for a vector field X.
Poly apply_field(const Multivector& X, const Poly& f);

DiffForm exterior_d(const DiffForm& mu);
DiffForm differential(const Poly& f);
DiffForm interior(const Multivector& X, const DiffForm& mu);
DiffForm lie_derivative(const Multivector& X, const DiffForm& mu);
Multivector lie_derivative(const Multivector& X, const Multivector& P);

// Full contraction sum_I P^I mu_I of equal degrees.
Poly pair(const Multivector& P, const DiffForm& mu);
// Lambda(df, dg) for a bivector.
Poly bivector_apply(const Multivector& lambda, const Poly& f, const Poly& g);

// Moves coefficients and indices into `target`, matching variables by name.
Multivector rebase(const Multivector& P, const Ctx& target);
DiffForm rebase(const DiffForm& mu, const Ctx& target);

// `{a,b}: poly; ...` with variable names; "0" for the zero object.
std::string print_multivector(const Multivector& P);
std::string print_form(const DiffForm& mu);

// (X_n, X_{n-1}); for n = 0 the lower part has degree -1.
struct GerstPair {
  Multivector top;
  Multivector low;

  GerstPair(Multivector top_part, Multivector low_part);
  int degree() const { return top.degree(); }
  bool operator==(const GerstPair&) const = default;
};

GerstPair gerst_zero(const Ctx& ctx, int degree);
GerstPair gerst_wedge(const GerstPair& A, const GerstPair& B);
GerstPair gerst_sn(const GerstPair& A, const GerstPair& B);
GerstPair operator+(const GerstPair& A, const GerstPair& B);
GerstPair operator-(const GerstPair& A, const GerstPair& B);
GerstPair operator*(const Rational& r, const GerstPair& A);

// <X_n, df_1 ^ ... ^ df_n> + sum_i (-1)^i <X_{n-1}, df_1 ^ .. (omit i) .. ^ df_n>.
Poly gerst_eval(const GerstPair& A, const std::vector<Poly>& fs);

}  // namespace affgebra
