#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cohomcat {

/// One failing instance of an equation: the index tuple and the two side values mod N.
struct Violation {
  std::string equation;
  std::vector<std::uint32_t> indices;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct EquationTally {
  std::string equation;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

/// Outcome of checking a collection of equation families. Families are kept in the order
/// they were first registered; violations in the order they were found.
class Report {
 public:
  /// Registers a family so it is listed even when it has no instances.
  void declare(const std::string& equation);
  void record(const std::string& equation, std::vector<std::uint32_t> indices, std::int64_t lhs,
              std::int64_t rhs);
  void merge(const Report& other);

  bool valid() const { return violations_.empty(); }
  bool passed(const std::string& equation) const;
  std::size_t failures(const std::string& equation) const;
  const std::vector<EquationTally>& equations() const { return tallies_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  EquationTally& tally(const std::string& equation);

  std::vector<EquationTally> tallies_;
  std::vector<Violation> violations_;
};

}  // namespace cohomcat
