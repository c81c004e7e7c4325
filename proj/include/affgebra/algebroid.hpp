#pragma once

// Lie algebroids on a trivialized bundle over a coordinate patch, given by
// anchor and structure functions in a fixed frame.

#include <random>
#include <string>
#include <vector>

#include "affgebra/geometry.hpp"
#include "affgebra/poly.hpp"
#include "affgebra/report.hpp"

namespace affgebra {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Frame section coefficients f^i, all in the base context.
struct Section {
  std::vector<Poly> f;

  static Section zero(const Ctx& base, int rank);
  static Section basis(const Ctx& base, int rank, int i);

  int rank() const { return int(f.size()); }
  bool is_zero() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  Section operator-() const;
  friend Section operator*(const Poly& h, const Section& s);
  bool operator==(const Section&) const = default;
};

struct AlgebroidData {
  Ctx base;
  int rank = 0;
  PolyMatrix anchor;                  // anchor[i][a]
  std::vector<PolyMatrix> structure;  // structure[i][j][k], skew in (i, j)
  std::vector<std::string> frame;     // names used in reports

  static AlgebroidData zero(const Ctx& base, int rank);
  // Tangent algebroid of the base: e_a -> d/dx^a, zero structure functions.
  static AlgebroidData tangent(const Ctx& base);

  int base_dim() const { return int(base->size()); }
  // Sets [e_i, e_j] = sum_k value[k] e_k and the skew partner.
  void set_bracket(int i, int j, const std::vector<Poly>& value);
  void set_anchor(int i, const std::vector<Poly>& value);
  // Shape, context and skewness; throws InvalidStructure.
  void validate() const;
};

std::string print_section(const Section& s, const std::vector<std::string>& frame);

// Default frame names prefix<first>, prefix<first+1>, ...
std::vector<std::string> numbered_names(const std::string& prefix, int first, int count);
// Same, with '_' appended until no name collides with a variable of `taken`.
std::vector<std::string> fresh_names(const Ctx& taken, const std::string& prefix, int first, int count);

Section random_section(std::mt19937_64& rng, const Ctx& base, int rank, int max_degree = 2, int terms = 2);

Section bracket(const AlgebroidData& E, const Section& X, const Section& Y);
Multivector anchor_field(const AlgebroidData& E, const Section& X);
Poly anchor_apply(const AlgebroidData& E, const Section& X, const Poly& h);
Report check_jacobi(const AlgebroidData& E);

// D(e_i) = matrix[i][j] e_j, anchor = components of D-hat on the base.
struct QuasiDer {
  PolyMatrix matrix;
  std::vector<Poly> anchor;

  static QuasiDer zero(const Ctx& base, int rank);
  bool operator==(const QuasiDer&) const = default;
};

Section qder_apply(const QuasiDer& D, const Section& X);
Multivector qder_anchor_field(const QuasiDer& D, const Ctx& base);
// ad_{X0} = [X0, .].
QuasiDer inner_qder(const AlgebroidData& E, const Section& X0);
QuasiDer operator+(const QuasiDer& a, const QuasiDer& b);
QuasiDer operator-(const QuasiDer& a, const QuasiDer& b);
// [X0, D X1] + [D X0, X1] - D [X0, X1]
Section cocycle_defect(const AlgebroidData& E, const QuasiDer& D, const Section& X0, const Section& X1);
Report is_cocycle(const QuasiDer& D, const AlgebroidData& E);

// Base variables followed by one fibre coordinate per frame element.
Ctx total_context(const Ctx& base, const std::vector<std::string>& fiber);
// sum_i coeffs[i] * fibre coordinate i on `total`.
Poly fiber_linear(const std::vector<Poly>& coeffs, const Ctx& total);

// Covector section mu (components mu_i on the frame) transported by X.
std::vector<Poly> lie_covector(const AlgebroidData& E, const Section& X, const std::vector<Poly>& mu);

Multivector complete_lift(const AlgebroidData& E, const Section& X, const Ctx& total);
Multivector vertical_lift(const Section& X, const Ctx& total);
// X^c on linear fibre functions and on base coordinates.
Report complete_lift_selftest(const AlgebroidData& E, const Section& X, const Ctx& total);

// Linear Poisson bivector on the dual bundle; `total` carries the dual fibre coordinates.
Multivector dual_linear_poisson(const AlgebroidData& E, const Ctx& total);
Multivector linear_field_from_qder(const QuasiDer& D, const Ctx& total);
// Inverse of linear_field_from_qder; throws InvalidStructure on a non-linear field.
QuasiDer qder_from_linear_field(const Multivector& field, const Ctx& base, int rank);

}  // namespace affgebra
