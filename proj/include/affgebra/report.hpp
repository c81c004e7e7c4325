#pragma once

#include <string>
#include <vector>

namespace affgebra {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;  // empty on PASS
};

// Ordered list of verification outcomes plus free-form comment lines.
// Rendered as `CHECK <id>: PASS` / `CHECK <id>: FAIL witness=<...>`.
class Report {
 public:
  void add(std::string id, bool pass, std::string witness = {});
  void pass(std::string id) { add(std::move(id), true); }
  void fail(std::string id, std::string witness) { add(std::move(id), false, std::move(witness)); }
  void note(std::string line);
  void append(const Report& other);

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  // First failing check, or nullptr.
  const CheckResult* first_failure() const;
  std::string render() const;

 private:
  struct Line {
    bool is_note;
    std::size_t index;
  };
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
  std::vector<Line> order_;
};

}  // namespace affgebra
