#pragma once

#include <optional>
#include <vector>

#include "ras/algebra.hpp"
#include "ras/approx.hpp"

namespace ras {

/// A product x*y that did not land in the required upper approximation.
struct ClosureFailure {
  Index x;
  Index y;
  Cell result;  // nullopt when the entry is INDET
};

struct ClosureCondition {
  bool holds = true;
  std::vector<ClosureFailure> failures;  // lexicographic (x, y) order
};

struct AssociativityCondition {
  bool holds = true;
  std::size_t true_count = 0;
  std::size_t false_count = 0;
  std::size_t indeterminate_count = 0;
  std::optional<Witness> false_witness;
  std::optional<Witness> indeterminate_witness;
};

struct RoughStructVerdict {
  ClosureCondition condition1;
  /// Absent for sub-semigroup checks, which only require closure.
  std::optional<AssociativityCondition> condition2;
  bool overall = false;
  SubsetU upper_used;
};

/// Products of elements of upper(A) are read from `table`, then from
/// `ambient` when supplied; anything else is unresolvable and counts as
/// indeterminate for condition 2. Throws UniverseMismatch.
RoughStructVerdict check_rough_anti_semigroup(const ApproxSpace& space, const OpTable& table,
                                              const OpTable* ambient = nullptr);

/// HH ⊆ upper(H). Throws EmptySubset, NotInCarrier, UniverseMismatch.
RoughStructVerdict check_rough_anti_subsemigroup(const ApproxSpace& space, const OpTable& table,
                                                 const SubsetU& h);

struct SetRelation {
  bool holds = true;
  SubsetU lhs;
  SubsetU rhs;
  std::optional<Index> witness;
};

struct IntersectionReport {
  SubsetU intersection;  // A ∩ B
  SubsetU upper_a;
  SubsetU upper_b;
  SubsetU upper_intersection;
  /// (i) upper(A∩B) ⊆ upper(A) ∩ upper(B)
  SetRelation always;
  /// (ii) upper(A) ∩ upper(B) ⊆ upper(A∩B)
  SetRelation claimed;
  /// (iii) both directions
  SetRelation equality;
};

IntersectionReport check_intersection_relations(const ApproxSpace& space, const SubsetU& a,
                                                const SubsetU& b);

}  // namespace ras
