#include "cohomcat/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohomcat {

EquationTally& Report::tally(const std::string& equation) {
  auto it = std::find_if(tallies_.begin(), tallies_.end(), [&](const auto& t) { return t.equation == equation; });
  if (it != tallies_.end()) return *it;
  tallies_.push_back({equation, 0, 0});
  return tallies_.back();
}

void Report::declare(const std::string& equation) { tally(equation); }

void Report::record(const std::string& equation, std::vector<std::uint32_t> indices, std::int64_t lhs,
                    std::int64_t rhs) {
  EquationTally& t = tally(equation);
  ++t.checked;
  if (lhs == rhs) return;
  ++t.failed;
  violations_.push_back({equation, std::move(indices), lhs, rhs});
}

void Report::merge(const Report& other) {
  for (const auto& t : other.tallies_) {
    EquationTally& mine = tally(t.equation);
    mine.checked += t.checked;
    mine.failed += t.failed;
  }
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool Report::passed(const std::string& equation) const { return failures(equation) == 0; }

std::size_t Report::failures(const std::string& equation) const {
  for (const auto& t : tallies_)
    if (t.equation == equation) return t.failed;
  throw std::out_of_range("report has no equation named '" + equation + "'");
}

}  // namespace cohomcat
