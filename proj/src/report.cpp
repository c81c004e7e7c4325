#include "affgebra/report.hpp"

#include <algorithm>

namespace affgebra {

void Report::add(std::string id, bool pass, std::string witness) {
  order_.push_back({false, checks_.size()});
  checks_.push_back({std::move(id), pass, pass ? std::string{} : std::move(witness)});
}

void Report::note(std::string line) {
  order_.push_back({true, notes_.size()});
  notes_.push_back(std::move(line));
}

void Report::append(const Report& other) {
  for (const auto& line : other.order_) {
    if (line.is_note) {
      note(other.notes_[line.index]);
    } else {
      const auto& c = other.checks_[line.index];
      add(c.id, c.pass, c.witness);
    }
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::string Report::render() const {
  std::string out;
  for (const auto& line : order_) {
    if (line.is_note) {
      out += "# " + notes_[line.index] + "\n";
      continue;
    }
    const auto& c = checks_[line.index];
    out += "CHECK " + c.id + ": " + (c.pass ? "PASS" : "FAIL");
    if (!c.pass && !c.witness.empty()) out += " witness=" + c.witness;
    out += "\n";
  }
  return out;
}

}  // namespace affgebra
