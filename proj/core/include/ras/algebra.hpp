#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ras/approx.hpp"
#include "ras/universe.hpp"

namespace ras {

/// A table cell: an element of the universe, or nullopt for INDET.
using Cell = std::optional<Index>;

/// Partial outer binary operation: defined on carrier x carrier, valued in
/// the whole universe (or INDET). Results outside the carrier are legal.
class OpTable {
 public:
  const UniversePtr& universe() const noexcept { return universe_; }
  const SubsetU& carrier() const noexcept { return carrier_; }
  /// Carrier members in ascending index order; rows and columns follow it.
  const std::vector<Index>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool in_carrier(Index x) const { return carrier_.contains(x); }
  /// Row/column of x, or nullopt when x is outside the carrier.
  std::optional<std::size_t> position(Index x) const;

  /// x * y. Throws NotInCarrier.
  Cell at(Index x, Index y) const;
  /// x * y, or nullopt when either argument is outside the carrier.
  Cell lookup(Index x, Index y) const;
  Cell cell(std::size_t row, std::size_t col) const { return cells_[row * elements_.size() + col]; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.carrier_ == b.carrier_ && a.cells_ == b.cells_;
  }

 private:
  friend OpTable make_table_from_cells(const SubsetU& carrier, std::vector<Cell> cells);

  UniversePtr universe_;
  SubsetU carrier_;
  std::vector<Index> elements_;
  std::vector<std::size_t> position_;  // npos outside the carrier
  std::vector<Cell> cells_;            // row-major
};

struct TableEntry {
  Index x;
  Index y;
  Cell value;
};

/// Entries keyed by (x, y). Throws EmptyCarrier, MissingEntry, ExtraEntry,
/// UnknownResultLabel.
OpTable make_table(const SubsetU& carrier, std::span<const TableEntry> entries);

/// Rows and cells positional in carrier order; "?" denotes INDET.
OpTable make_table(const SubsetU& carrier, const std::vector<std::vector<std::string>>& rows);

/// Row-major cells in carrier order.
OpTable make_table_from_cells(const SubsetU& carrier, std::vector<Cell> cells);

enum class Law { C1, C2, C3, C4, C5, C6, C7, C8, C9, C10 };
inline constexpr std::array<Law, 10> kAllLaws = {Law::C1, Law::C2, Law::C3, Law::C4, Law::C5,
                                                 Law::C6, Law::C7, Law::C8, Law::C9, Law::C10};
std::string to_string(Law law);
std::optional<Law> parse_law(std::string_view s);

enum class Truth { True, False, Indeterminate };
enum class Status { AllTrue, AllFalse, Mixed };
std::string to_string(Truth t);
std::string to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

/// Instance tuple, element indices. Empty for the global laws C8/C9.
using Witness = std::vector<Index>;

struct LawVerdict {
  Law law = Law::C1;
  Status status = Status::AllTrue;
  std::size_t true_count = 0;
  std::size_t false_count = 0;
  std::size_t indeterminate_count = 0;
  // Lexicographically first instance of each non-empty bucket.
  std::optional<Witness> true_witness;
  std::optional<Witness> false_witness;
  std::optional<Witness> indeterminate_witness;

  std::size_t total() const { return true_count + false_count + indeterminate_count; }
  /// An anti-law "holds" when it is true on every instance.
  bool holds() const { return status == Status::AllTrue; }
};

/// Truth of one instance of `law`. Instance arity: C1/C5/C6/C10 pairs,
/// C2/C7 triples, C3/C4 single elements, C8/C9 empty.
Truth evaluate_instance(const OpTable& table, Law law, std::span<const Index> instance);
LawVerdict evaluate_law(const OpTable& table, Law law);

/// {e in carrier : x*e = e*x = x}. Throws NotInCarrier.
SubsetU local_neutrals(const OpTable& table, Index x);

/// Union of local_neutrals over the carrier.
SubsetU neutral_pool(const OpTable& table);

struct Classification {
  std::array<LawVerdict, 10> verdicts;
  bool is_semigroup = false;
  bool is_group = false;
  bool is_commutative_group = false;
  bool is_anti_group = false;
  bool is_anti_abelian = false;
  bool is_ag4 = false;
  bool is_strict_ag4 = false;

  const LawVerdict& operator[](Law law) const { return verdicts[static_cast<std::size_t>(law)]; }
};

Classification classify(const OpTable& table);

struct CancellationWitness {
  enum class Side { Left, Right };
  Side side;
  Index g;
  Index x;
  Index y;

  friend bool operator==(const CancellationWitness&, const CancellationWitness&) = default;
};

/// Left failures g*x = g*y, then right failures x*g = y*g, x != y, both
/// groups in lexicographic (g, x, y) order.
std::vector<CancellationWitness> cancellation_failures(const OpTable& table);

enum class ProductMode { Outer, Restricted };

/// {h*k : h in a, k in b, h*k not INDET}; Restricted also clips to the
/// carrier. Throws NotInCarrier.
SubsetU set_product(const OpTable& table, const SubsetU& a, const SubsetU& b,
                    ProductMode mode = ProductMode::Outer);

struct CongruenceVerdict {
  bool holds = true;
  /// (x, x', y, y') with x~x', y~y' but x*y not ~ x'*y'.
  std::optional<std::array<Index, 4>> witness;
  std::size_t checked = 0;
  std::size_t indeterminate = 0;
};

/// Throws CarrierNotFull, UniverseMismatch.
CongruenceVerdict is_congruence(const ApproxSpace& space, const OpTable& table);

struct ProductRelation {
  char id = 'a';
  bool holds = true;
  SubsetU lhs;
  SubsetU rhs;
  /// Element of lhs missing from rhs (or rhs from lhs for the reverse relations).
  std::optional<Index> witness;
};

struct ProductLawReport {
  CongruenceVerdict congruence;
  /// (a) up(X)up(Y) ⊆ up(XY)   (b) up(X)up(Y) ⊇ up(XY)
  /// (c) lo(X)lo(Y) ⊆ lo(XY)   (d) lo(X)lo(Y) ⊇ lo(XY)
  std::array<ProductRelation, 4> relations;
};

/// The four relations alone, without the congruence scan.
std::array<ProductRelation, 4> product_relations(const ApproxSpace& space, const OpTable& table,
                                                 const SubsetU& x, const SubsetU& y);

/// Throws CarrierNotFull, EmptySubset, UniverseMismatch.
ProductLawReport check_product_approx_laws(const ApproxSpace& space, const OpTable& table,
                                           const SubsetU& x, const SubsetU& y);

}  // namespace ras
