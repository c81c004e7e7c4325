#pragma once

// Exact multivariate polynomials over the rationals.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace affgebra {

using Rational = mpq_class;

std::string to_string(const Rational& r);

inline constexpr std::size_t kMaxVars = 16;

// Ordered variable names: base coordinates first, then fibre coordinates.
class VarContext {
 public:
  VarContext(std::vector<std::string> base, std::vector<std::string> fiber);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> base,
                                                std::vector<std::string> fiber = {});

  std::size_t size() const { return names_.size(); }
  std::size_t base_count() const { return base_count_; }
  std::size_t fiber_count() const { return names_.size() - base_count_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  bool operator==(const VarContext& other) const {
    return base_count_ == other.base_count_ && names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t base_count_;
};

using Ctx = std::shared_ptr<const VarContext>;

bool same_context(const Ctx& a, const Ctx& b);
void require_same_context(const Ctx& a, const Ctx& b, const char* where);

// Exponent vector. Slot 0 caches the total degree so that the defaulted
// lexicographic comparison is the graded-lex order.
class Monomial {
 public:
  Monomial() = default;

  std::uint16_t operator[](std::size_t var) const { return e_[var + 1]; }
  unsigned degree() const { return e_[0]; }
  void set(std::size_t var, std::uint16_t power);
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars + 1> e_{};
};

class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  explicit Poly(Ctx ctx);  // zero
  static Poly constant(Ctx ctx, const Rational& value);
  static Poly variable(Ctx ctx, std::size_t index);
  static Poly variable(Ctx ctx, std::string_view name);
  static Poly monomial(Ctx ctx, const Monomial& mono, const Rational& coeff);

  const Ctx& context() const { return ctx_; }
  // Terms sorted in descending graded-lex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& r);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }

  bool operator==(const Poly& other) const;

  Poly pow(unsigned e) const;
  Poly partial(std::size_t var) const;
  Poly partial(std::string_view name) const;
  Rational eval(std::span<const Rational> point) const;
  // Replaces variable `var` by `value` (same context).
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly substitute(std::size_t var, const Rational& value) const;
  // Re-expresses the polynomial in `target`, matching variables by name.
  Poly rebase(const Ctx& target) const;

  std::string str() const;

 private:
  static Poly from_unsorted(Ctx ctx, std::vector<Term> terms);

  Ctx ctx_;
  std::vector<Term> terms_;
};

// Canonical text form: graded-lex descending, reduced fractions, explicit * and ^.
std::string print_poly(const Poly& p);

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' NAT)?
//   base   := RATIONAL | IDENT | '(' expr ')'
// Throws ParseError (with offset) or UnknownVariable.
Poly parse_poly(std::string_view text, const Ctx& ctx);

}  // namespace affgebra
