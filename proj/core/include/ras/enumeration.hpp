#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ras/algebra.hpp"
#include "ras/approx.hpp"
#include "ras/morphisms.hpp"

namespace ras {

inline constexpr std::size_t kMaxUniverseSize = 6;
inline constexpr std::size_t kMaxTableCarrier = 4;

/// Restricted-growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
using Rgs = std::vector<std::size_t>;

/// Set partitions of an n-element set in restricted-growth-string order.
class PartitionStream {
 public:
  /// Throws SizeOutOfRange unless 1 <= n <= kMaxUniverseSize.
  explicit PartitionStream(std::size_t n);

  /// Advances to the next partition; false once exhausted.
  bool next();
  const Rgs& current() const { return rgs_; }

 private:
  std::size_t n_;
  Rgs rgs_;
  std::vector<std::size_t> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Rgs> enum_partitions(std::size_t n);
ApproxSpace space_from_rgs(const UniversePtr& universe, const Rgs& rgs);
/// All approximation spaces on `universe`, canonical order.
std::vector<ApproxSpace> enum_spaces(const UniversePtr& universe);

/// All (|U| + allow_indet)^(|S|^2) tables on a carrier, row-major
/// lexicographic, INDET sorting after every element. Random access by ordinal.
class TableStream {
 public:
  /// Throws EmptyCarrier, SizeOutOfRange (carrier above kMaxTableCarrier).
  TableStream(SubsetU carrier, bool allow_indet);

  std::uint64_t count() const noexcept { return count_; }
  OpTable at(std::uint64_t ordinal) const;
  std::optional<OpTable> next();

 private:
  SubsetU carrier_;
  bool allow_indet_;
  std::size_t cells_;
  std::size_t radix_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

/// All maps domain -> codomain (values restricted to the codomain set),
/// graphs in domain order, first domain element most significant.
class MappingStream {
 public:
  /// Throws EmptySet.
  MappingStream(SubsetU domain, SubsetU codomain, bool surjective_only);

  std::optional<Mapping> next();

 private:
  SubsetU domain_;
  SubsetU codomain_;
  std::vector<Index> values_;
  std::vector<std::size_t> digits_;
  bool surjective_only_;
  bool done_ = false;
};

std::vector<Mapping> enum_mappings(const SubsetU& domain, const SubsetU& codomain,
                                   bool surjective_only);

enum class Structural {
  RoughAntiSemigroup,  // both rough anti-semigroup conditions (no ambient table)
  RoughCarrier,        // carrier has a nonempty boundary
  ExactCarrier,
  Congruence,          // requires carrier = universe
  Semigroup,
  Group,
  AntiGroup,
  AG4,
  StrictAG4,
};

std::string to_string(Structural s);
std::optional<Structural> parse_structural(std::string_view s);

struct SearchSpec {
  std::size_t universe_size = 3;
  std::size_t carrier_size = 2;
  bool allow_indet = false;
  std::vector<std::pair<Law, Status>> law_constraints;
  std::vector<Structural> structural_constraints;
  std::size_t limit = 10;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;

  /// Throws InvalidSearchSpec.
  void validate() const;
};

struct SearchMatch {
  std::uint64_t ordinal;
  ApproxSpace space;
  OpTable table;
};

struct SearchResult {
  std::vector<SearchMatch> matches;
  std::uint64_t space_size = 0;
  /// Candidates up to and including the last one that had to be looked at.
  std::uint64_t examined = 0;
  bool limit_reached = false;
  bool budget_exhausted = false;
};

/// Universe "1".."n", carrier the first `carrier_size` elements. Spaces
/// range over all partitions only when a structural constraint needs one;
/// otherwise the identity partition is used.
SearchResult search(const SearchSpec& spec);

/// Relations the counterexample miner knows about.
enum class Relation {
  L1, L2, L3, L4, L5, L6, L7, L8, L9,
  IntersectionAlways,   // P31-i
  IntersectionClaimed,  // P31-ii
  ProductUpperSub,      // P22-a, no congruence hypothesis
  ProductUpperSup,      // P22-b
  ProductLowerSub,      // P22-c
  ProductLowerSup,      // P22-d
};

std::string to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view s);

struct Counterexample {
  Relation relation;
  ApproxSpace space;
  std::optional<OpTable> table;
  SubsetU x;
  SubsetU y;
  std::optional<Index> witness;
};

struct CounterexampleResult {
  std::optional<Counterexample> found;
  std::uint64_t examined = 0;
  /// True when every candidate within the bounds was looked at.
  bool complete = true;
};

/// Sweeps n = 1..bounds.universe_size over partitions (then total tables
/// with carrier = universe for the product relations) and subset pairs in
/// mask order; returns the first failure. Respects bounds.budget.
CounterexampleResult find_counterexample(Relation relation, const SearchSpec& bounds);

struct SweepLine {
  std::string id;
  std::string description;
  bool theorem = true;  // false for claims expected to be refutable
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_failure;
  std::size_t max_n = 0;
};

/// Every partition of n = 1..max_n and every ordered subset pair.
SweepLine sweep_approx_law(ApproxLaw law, std::size_t max_n, unsigned jobs = 1);
/// Relations (i) and (ii) over the same domain.
std::vector<SweepLine> sweep_intersection(std::size_t max_n, unsigned jobs = 1);
/// Total tables with carrier = universe, n <= min(max_n, 3); lines for the
/// congruent subset (a theorem for (a)) and for all tables.
std::vector<SweepLine> sweep_product_laws(std::size_t max_n, unsigned jobs = 1);
/// All total tables with carrier = universe, n <= min(max_n, 3), all
/// endomap pairs.
SweepLine sweep_composition(CompositionProp prop, std::size_t max_n, unsigned jobs = 1);

/// Splits [0, count) into contiguous chunks processed by up to `jobs`
/// threads; results come back in chunk order.
template <class Result, class Fn>
std::vector<Result> run_chunks(std::uint64_t count, unsigned jobs, Fn&& fn);

}  // namespace ras

#include "ras/detail/run_chunks.hpp"
