#include "homcat/report.hpp"

#include "homcat/error.hpp"

namespace homcat {

std::optional<bool> CheckReport::status(std::string_view id) const {
  for (const auto& a : axioms_)
    if (a.id == id) return a.pass;
  return std::nullopt;
}

const Violation* CheckReport::first_violation(std::string_view id) const {
  for (const auto& v : violations_)
    if (v.axiom_id == id) return &v;
  return nullptr;
}

AxiomStatus& CheckReport::slot(std::string_view id) {
  for (auto& a : axioms_)
    if (a.id == id) return a;
  axioms_.push_back({std::string(id), true});
  return axioms_.back();
}

void CheckReport::touch(std::string_view id) { slot(id); }

void CheckReport::add_violation(Violation v) {
  slot(v.axiom_id).pass = false;
  if (violations_.size() < cap_) violations_.push_back(std::move(v));
}

bool CheckReport::expect_equal(std::string_view id, const LinMap& lhs, const LinMap& rhs,
                               std::span<const std::size_t> input_dims,
                               std::span<const std::size_t> prefix) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionMismatch(std::string(id) + ": sides have different shapes");
  std::size_t n = 1;
  for (auto d : input_dims) n *= d;
  if (n != lhs.cols()) throw DimensionMismatch(std::string(id) + ": input dims do not match");
  slot(id);
  bool ok = true;
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    bool same = true;
    for (std::size_t i = 0; i < lhs.rows() && same; ++i) same = lhs(i, j) == rhs(i, j);
    if (same) continue;
    ok = false;
    std::vector<std::size_t> idx(prefix.begin(), prefix.end());
    auto tail = unflatten(j, input_dims);
    idx.insert(idx.end(), tail.begin(), tail.end());
    add_violation({std::string(id), std::move(idx), lhs.col(j), rhs.col(j)});
    if (violations_.size() >= cap_) {
      // Status is already settled; the remaining columns cannot be stored.
      break;
    }
  }
  return ok;
}

void CheckReport::absorb(const CheckReport& other) {
  for (const auto& a : other.axioms_) {
    auto& s = slot(a.id);
    s.pass = s.pass && a.pass;
  }
  for (const auto& v : other.violations_)
    if (violations_.size() < cap_) violations_.push_back(v);
}

}  // namespace homcat
