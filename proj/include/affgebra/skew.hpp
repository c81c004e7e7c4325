#pragma once

// Sparse skew-symmetric arrays of polynomials, stored on strictly increasing
// index tuples. Shared storage for multivector fields, coordinate forms and
// algebroid forms; the tag keeps the three kinds from mixing.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "affgebra/errors.hpp"
#include "affgebra/poly.hpp"

namespace affgebra {

using IndexTuple = std::vector<int>;

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
inline int normalize_tuple(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::string tuple_string(const IndexTuple& t);

// All strictly increasing k-tuples drawn from {0, ..., dim-1}.
std::vector<IndexTuple> increasing_tuples(int dim, int k);

template <class Tag>
class SkewTensor {
 public:
  SkewTensor(Ctx ctx, int dim, int degree) : ctx_(std::move(ctx)), dim_(dim), degree_(degree) {}

  // Degree-0 object holding a single scalar.
  static SkewTensor scalar(const Poly& value, int dim) {
    SkewTensor t(value.context(), dim, 0);
    t.add({}, value);
    return t;
  }

  const Ctx& context() const { return ctx_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<IndexTuple, Poly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Poly get(IndexTuple t) const {
    check_arity(t);
    int s = normalize_tuple(t);
    if (s == 0) return Poly(ctx_);
    auto it = comps_.find(t);
    if (it == comps_.end()) return Poly(ctx_);
    return s > 0 ? it->second : -it->second;
  }

  void add(IndexTuple t, const Poly& value) {
    check_arity(t);
    require_same_context(ctx_, value.context(), "skew add");
    for (int i : t) {
      if (i < 0 || i >= dim_) throw DimensionMismatch("index out of range in " + tuple_string(t));
    }
    int s = normalize_tuple(t);
    if (s == 0 || value.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(t, ctx_);
    if (s > 0) {
      it->second += value;
    } else {
      it->second -= value;
    }
    if (it->second.is_zero()) comps_.erase(it);
  }

  SkewTensor& operator+=(const SkewTensor& o) {
    require_compatible(o, "skew +");
    for (const auto& [t, v] : o.comps_) add(t, v);
    return *this;
  }
  SkewTensor& operator-=(const SkewTensor& o) {
    require_compatible(o, "skew -");
    for (const auto& [t, v] : o.comps_) add(t, -v);
    return *this;
  }
  friend SkewTensor operator+(SkewTensor a, const SkewTensor& b) { return a += b; }
  friend SkewTensor operator-(SkewTensor a, const SkewTensor& b) { return a -= b; }
  SkewTensor operator-() const {
    SkewTensor out = *this;
    for (auto& [t, v] : out.comps_) v = -v;
    return out;
  }
  friend SkewTensor operator*(const Poly& f, const SkewTensor& a) {
    SkewTensor out(a.ctx_, a.dim_, a.degree_);
    for (const auto& [t, v] : a.comps_) out.add(t, f * v);
    return out;
  }
  friend SkewTensor operator*(const Rational& r, const SkewTensor& a) {
    return Poly::constant(a.ctx_, r) * a;
  }

  bool operator==(const SkewTensor& o) const {
    return same_context(ctx_, o.ctx_) && dim_ == o.dim_ && degree_ == o.degree_ && comps_ == o.comps_;
  }

  // Applies `f` to every coefficient, keeping the index structure.
  template <class F>
  SkewTensor map_coefficients(const Ctx& target, F&& f) const {
    SkewTensor out(target, dim_, degree_);
    for (const auto& [t, v] : comps_) out.add(t, f(v));
    return out;
  }

  void require_compatible(const SkewTensor& o, const char* where) const {
    require_same_context(ctx_, o.ctx_, where);
    if (dim_ != o.dim_ || degree_ != o.degree_) {
      throw DimensionMismatch(std::string(where) + ": degree or dimension mismatch");
    }
  }

 private:
  void check_arity(const IndexTuple& t) const {
    if (int(t.size()) != degree_) throw DimensionMismatch("tuple arity does not match degree");
  }

  Ctx ctx_;
  int dim_;
  int degree_;
  std::map<IndexTuple, Poly> comps_;
};

// Alternating product; degree overflow yields the zero tensor of the summed degree.
template <class Tag>
SkewTensor<Tag> wedge(const SkewTensor<Tag>& a, const SkewTensor<Tag>& b) {
  require_same_context(a.context(), b.context(), "wedge");
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: dimension mismatch");
  SkewTensor<Tag> out(a.context(), a.dim(), a.degree() + b.degree());
  if (a.degree() < 0 || b.degree() < 0) return out;
  for (const auto& [s, u] : a.components()) {
    for (const auto& [t, v] : b.components()) {
      IndexTuple joined = s;
      joined.insert(joined.end(), t.begin(), t.end());
      out.add(joined, u * v);
    }
  }
  return out;
}

}  // namespace affgebra
