#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ras {

/// Position of an element inside its universe.
using Index = std::size_t;

/// Ordered finite set of distinct labels. Always handled through
/// `UniversePtr` so subsets can share it.
class Universe {
 public:
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }

  /// Throws UnknownElement.
  Index index(std::string_view label) const;
  bool contains(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  friend std::shared_ptr<const Universe> make_universe(std::vector<std::string> labels);
  explicit Universe(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> lookup_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Throws EmptyUniverse or DuplicateLabel.
UniversePtr make_universe(std::vector<std::string> labels);

/// Universe labelled "1".."n".
UniversePtr make_numbered_universe(std::size_t n);

/// True when both pointers denote the same universe (identity or equal labels).
bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// Membership vector over a universe. Equality is extensional.
class SubsetU {
 public:
  using Bits = boost::dynamic_bitset<>;

  SubsetU() = default;
  explicit SubsetU(UniversePtr universe);
  SubsetU(UniversePtr universe, Bits bits);

  static SubsetU empty(const UniversePtr& u) { return SubsetU(u); }
  static SubsetU full(const UniversePtr& u);
  static SubsetU from_indices(const UniversePtr& u, std::span<const Index> indices);
  static SubsetU from_indices(const UniversePtr& u, std::initializer_list<Index> indices);
  /// Throws UnknownElement for labels outside the universe.
  static SubsetU from_labels(const UniversePtr& u, std::span<const std::string> labels);
  static SubsetU from_labels(const UniversePtr& u, std::initializer_list<std::string_view> labels);
  /// Bit i of `mask` selects element i. Universe must have at most 64 elements.
  static SubsetU from_mask(const UniversePtr& u, unsigned long long mask);

  const UniversePtr& universe() const noexcept { return universe_; }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(Index i) const { return i < bits_.size() && bits_.test(i); }
  bool empty() const noexcept { return bits_.none(); }
  std::size_t count() const noexcept { return bits_.count(); }
  std::vector<Index> indices() const;
  std::vector<std::string> labels() const;

  /// Smallest member, or npos when empty.
  Index first() const { return bits_.find_first(); }
  Index next(Index i) const { return bits_.find_next(i); }
  static constexpr Index npos = Bits::npos;

  SubsetU& insert(Index i);
  SubsetU& erase(Index i);

  // All binary operations throw UniverseMismatch across universes.
  bool is_subset_of(const SubsetU& other) const;
  bool intersects(const SubsetU& other) const;
  SubsetU operator|(const SubsetU& other) const;
  SubsetU operator&(const SubsetU& other) const;
  SubsetU operator-(const SubsetU& other) const;
  SubsetU complement() const;

  /// First element that is in *this but not in `other`, or npos.
  Index first_not_in(const SubsetU& other) const;

  friend bool operator==(const SubsetU& a, const SubsetU& b);

 private:
  void require_same(const SubsetU& other) const;

  UniversePtr universe_;
  Bits bits_;
};

/// Renders `{1 2 3}` using universe labels.
std::string format_set(const SubsetU& s);

}  // namespace ras
