#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homcat/linmap.hpp"

namespace homcat {

inline constexpr std::size_t kDefaultViolationCap = 16;

struct Violation {
  std::string axiom_id;
  std::vector<std::size_t> index;  // basis multi-index of the input tensor
  Vec lhs;
  Vec rhs;
};

struct AxiomStatus {
  std::string id;
  bool pass = true;
};

// Outcome of an exhaustive axiom scan. Axioms keep the order in which they were
// first evaluated; violations within one axiom follow the lexicographic order
// of the basis multi-index. pass() is true exactly when no violation was kept:
// a failing axiom always keeps at least one unless the cap is already full, in
// which case earlier violations are present anyway.
class CheckReport {
 public:
  explicit CheckReport(std::size_t cap = kDefaultViolationCap) : cap_(cap ? cap : 1) {}

  bool pass() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<AxiomStatus>& axioms() const { return axioms_; }
  std::size_t cap() const { return cap_; }

  // nullopt when the axiom was never evaluated.
  std::optional<bool> status(std::string_view id) const;
  bool passed(std::string_view id) const { return status(id).value_or(false); }
  bool failed(std::string_view id) const { return !status(id).value_or(true); }
  const Violation* first_violation(std::string_view id) const;

  // Column-by-column comparison of two maps with the same shape. Column j is the
  // input basis tensor unflatten(j, input_dims), prefixed by `prefix`.
  bool expect_equal(std::string_view id, const LinMap& lhs, const LinMap& rhs,
                    std::span<const std::size_t> input_dims,
                    std::span<const std::size_t> prefix = {});
  // Marks the axiom as evaluated without recording anything.
  void touch(std::string_view id);
  void add_violation(Violation v);
  // Appends another report's axioms and violations (respecting this cap).
  void absorb(const CheckReport& other);

 private:
  AxiomStatus& slot(std::string_view id);

  std::size_t cap_;
  std::vector<AxiomStatus> axioms_;
  std::vector<Violation> violations_;
};

}  // namespace homcat
