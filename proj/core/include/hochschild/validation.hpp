#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hochschild {

/// One failed axiom together with the basis indices (or table coordinates) witnessing it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Collects every violation found by a validator; an empty report means valid.
class ValidationReport {
 public:
  void add(std::string axiom, std::vector<std::size_t> witness, std::string detail = {}) {
    violations_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }
  void append(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations_) violations_.push_back({prefix + v.axiom, v.witness, v.detail});
  }

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  bool contains(const std::string& axiom) const {
    for (const auto& v : violations_) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace hochschild
