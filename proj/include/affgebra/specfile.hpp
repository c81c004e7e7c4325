#pragma once

// Line-oriented bundle specification files.
//
//   base.dim: 2
//   base.coords: x y
//   bundle.rank: 1
//   bundle.frame: e1
//   anchor.e1: 1, 0
//   struct.e1.e2: <poly>, ..        components along the frame
//   qder.matrix.e1: <poly>, ..      D(e1) along the frame
//   qder.anchor: <poly>, ..
//   poisson.lambda.x.y: <poly>
//   poisson.d: <poly>, ..
//   form.<k>.<a0,e1,..>: <poly>     hull forms; index a0 is the reference slot
//   section.<label>: <poly>, ..
//   time: <poly>
//   mech.dim: <nat>
//   mech.H: <poly>                  over t, q.., p..

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affgebra/affgebroid.hpp"
#include "affgebra/affpoisson.hpp"
#include "affgebra/calculus.hpp"

namespace affgebra {

class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A form entry is resolved against a hull frame only when a command needs it.
struct FormEntry {
  int degree = 0;
  std::vector<std::string> slots;
  Poly value;
  std::size_t line = 0, column = 0;
};

struct SpecFile {
  Ctx base;
  std::optional<AlgebroidData> bundle;
  std::optional<QuasiDer> qder;
  std::optional<AffPoissonData> poisson;
  std::vector<std::pair<std::string, Section>> sections;
  std::vector<FormEntry> forms;
  std::optional<Poly> time;
  std::optional<int> mech_dim;
  std::optional<Poly> mech_H;

  bool has_affgebroid() const { return bundle && qder; }
  AffgebroidData affgebroid() const;  // throws std::runtime_error when a block is missing
  // Forms grouped by degree, as hull forms over `frame`.
  std::map<int, AlgForm> resolve_forms(const Ctx& base, const std::vector<std::string>& frame) const;
};

SpecFile parse_spec(const std::string& text);
SpecFile load_spec(const std::string& path);

}  // namespace affgebra
