#include "affgebra/poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "affgebra/errors.hpp"

namespace affgebra {

std::string to_string(const Rational& r) { return r.get_str(); }

VarContext::VarContext(std::vector<std::string> base, std::vector<std::string> fiber)
    : base_count_(base.size()) {
  names_ = std::move(base);
  names_.insert(names_.end(), fiber.begin(), fiber.end());
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (" + std::to_string(names_.size()) +
                                " > " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> base,
                                                   std::vector<std::string> fiber) {
  return std::make_shared<const VarContext>(std::move(base), std::move(fiber));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarContext::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool same_context(const Ctx& a, const Ctx& b) { return a == b || (a && b && *a == *b); }

void require_same_context(const Ctx& a, const Ctx& b, const char* where) {
  if (!same_context(a, b)) throw ContextMismatch(std::string(where) + ": context mismatch");
}

void Monomial::set(std::size_t var, std::uint16_t power) {
  e_[0] = static_cast<std::uint16_t>(e_[0] - e_[var + 1] + power);
  e_[var + 1] = power;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i <= kMaxVars; ++i) {
    unsigned s = unsigned(e_[i]) + other.e_[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    out.e_[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

Poly::Poly(Ctx ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("Poly requires a variable context");
}

Poly Poly::constant(Ctx ctx, const Rational& value) {
  Poly p(std::move(ctx));
  if (value != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

Poly Poly::variable(Ctx ctx, std::size_t index) {
  if (index >= ctx->size()) throw UnknownVariable("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ctx), m, 1);
}

Poly Poly::variable(Ctx ctx, std::string_view name) {
  std::size_t i = ctx->require_index(name);
  return variable(std::move(ctx), i);
}

Poly Poly::monomial(Ctx ctx, const Monomial& mono, const Rational& coeff) {
  Poly p(std::move(ctx));
  if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

Poly Poly::from_unsorted(Ctx ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly out(std::move(ctx));
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
  return 0;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.degree()); }

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, int(t.mono[var]));
  return d;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <class Combine>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    Combine sign_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, sign_b(b[j].coeff)});
      ++j;
    } else {
      Rational c = a[i].coeff + sign_b(b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same_context(ctx_, other.ctx_, "poly add");
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return c; });
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_context(ctx_, other.ctx_, "poly sub");
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) -> Rational { return -c; });
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_context(a.ctx_, b.ctx_, "poly mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Poly::from_unsorted(a.ctx_, std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= r;
  }
  return *this;
}

bool Poly::operator==(const Poly& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ctx_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::partial(std::size_t var) const {
  if (var >= ctx_->size()) throw UnknownVariable("partial: variable index out of range");
  Poly out(ctx_);
  // Lowering one exponent preserves the relative graded-lex order.
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, static_cast<std::uint16_t>(e - 1));
    out.terms_.push_back({m, t.coeff * e});
  }
  return out;
}

Poly Poly::partial(std::string_view name) const { return partial(ctx_->require_index(name)); }

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != ctx_->size()) {
    throw DimensionMismatch("eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(ctx_->size()));
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  require_same_context(ctx_, value.ctx_, "substitute");
  std::vector<Poly> powers{constant(ctx_, 1)};
  Poly out(ctx_);
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial m = t.mono;
    m.set(var, 0);
    out += monomial(ctx_, m, t.coeff) * powers[e];
  }
  return out;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  return substitute(var, constant(ctx_, value));
}

Poly Poly::rebase(const Ctx& target) const {
  if (same_context(ctx_, target)) {
    Poly out = *this;
    out.ctx_ = target;
    return out;
  }
  std::vector<std::size_t> map(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    auto j = target->index_of(ctx_->name(i));
    if (!j) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[i] != 0; });
      if (used) throw ContextMismatch("rebase: variable '" + ctx_->name(i) + "' missing in target context");
      map[i] = kMaxVars;
      continue;
    }
    map[i] = *j;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_unsorted(target, std::move(terms));
}

std::string Poly::str() const { return print_poly(*this); }

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < p.context()->size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.context()->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

}  // namespace affgebra
