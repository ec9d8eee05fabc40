#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ras/universe.hpp"

namespace ras {

/// Validated total cover of a universe by pairwise disjoint nonempty blocks.
class Partition {
 public:
  /// Throws EmptyBlock, Overlap, Incomplete or UniverseMismatch.
  Partition(UniversePtr universe, std::vector<SubsetU> blocks);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<SubsetU>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  UniversePtr universe_;
  std::vector<SubsetU> blocks_;
};

/// Renders `{1 2 3}{4}` with blocks ordered by their smallest element.
std::string format_partition(const Partition& p);

/// Block assignment per element, e.g. restricted-growth strings.
Partition partition_from_assignment(const UniversePtr& universe, const std::vector<std::size_t>& block_of);

struct ApproxResult {
  SubsetU lower;
  SubsetU upper;
  SubsetU boundary;
  bool is_rough = false;
};

/// The pair (U, ~) given by a partition; immutable.
class ApproxSpace {
 public:
  explicit ApproxSpace(Partition partition);

  const UniversePtr& universe() const noexcept { return partition_.universe(); }
  const Partition& partition() const noexcept { return partition_; }
  std::size_t class_of(Index x) const { return class_of_.at(x); }
  bool equivalent(Index x, Index y) const { return class_of(x) == class_of(y); }

  /// Block containing x. Throws UnknownElement.
  const SubsetU& equivalence_class(Index x) const;
  const SubsetU& equivalence_class(std::string_view label) const;

  /// Throws UniverseMismatch.
  ApproxResult approximate(const SubsetU& x) const;
  SubsetU lower(const SubsetU& x) const;
  SubsetU upper(const SubsetU& x) const;

  friend bool operator==(const ApproxSpace& a, const ApproxSpace& b) {
    return a.partition_ == b.partition_;
  }

 private:
  void require_universe(const SubsetU& x) const;

  Partition partition_;
  std::vector<std::size_t> class_of_;
};

/// Throws the same errors as Partition.
ApproxSpace make_space(const UniversePtr& universe, std::vector<SubsetU> blocks);

/// Every element in its own block.
ApproxSpace identity_space(const UniversePtr& universe);

/// One block holding the whole universe.
ApproxSpace total_space(const UniversePtr& universe);

enum class ApproxLaw { L1, L2, L3, L4, L5, L6, L7, L8, L9 };
inline constexpr std::array<ApproxLaw, 9> kAllApproxLaws = {
    ApproxLaw::L1, ApproxLaw::L2, ApproxLaw::L3, ApproxLaw::L4, ApproxLaw::L5,
    ApproxLaw::L6, ApproxLaw::L7, ApproxLaw::L8, ApproxLaw::L9};

std::string to_string(ApproxLaw law);
std::optional<ApproxLaw> parse_approx_law(std::string_view s);

struct ApproxLawVerdict {
  ApproxLaw law;
  bool holds = true;
  /// An element on which the two sides disagree.
  std::optional<Index> witness;
};

struct LawReport {
  std::array<ApproxLawVerdict, 9> verdicts;

  bool all_hold() const;
  const ApproxLawVerdict& operator[](ApproxLaw law) const {
    return verdicts[static_cast<std::size_t>(law)];
  }
};

ApproxLawVerdict check_approx_law(const ApproxSpace& space, ApproxLaw law, const SubsetU& x,
                                  const SubsetU& y);
LawReport check_approx_laws(const ApproxSpace& space, const SubsetU& x, const SubsetU& y);

}  // namespace ras
