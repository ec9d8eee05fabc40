#include "ras/enumeration.hpp"

#include <algorithm>
#include <sstream>

#include "ras/error.hpp"
#include "ras/rough_structures.hpp"

namespace ras {

// ---------------------------------------------------------------- partitions

PartitionStream::PartitionStream(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxUniverseSize) {
    throw Error(ErrorCode::SizeOutOfRange,
                "partition size must be within 1.." + std::to_string(kMaxUniverseSize));
  }
  rgs_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // Rightmost position that can still grow: rgs[i] <= max(rgs[0..i)).
  for (std::size_t i = n_; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<Rgs> enum_partitions(std::size_t n) {
  std::vector<Rgs> out;
  PartitionStream stream(n);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

ApproxSpace space_from_rgs(const UniversePtr& universe, const Rgs& rgs) {
  return ApproxSpace(partition_from_assignment(universe, rgs));
}

std::vector<ApproxSpace> enum_spaces(const UniversePtr& universe) {
  std::vector<ApproxSpace> out;
  PartitionStream stream(universe->size());
  while (stream.next()) out.push_back(space_from_rgs(universe, stream.current()));
  return out;
}

// -------------------------------------------------------------------- tables

TableStream::TableStream(SubsetU carrier, bool allow_indet)
    : carrier_(std::move(carrier)), allow_indet_(allow_indet) {
  if (!carrier_.universe() || carrier_.empty()) {
    throw Error(ErrorCode::EmptyCarrier, "table enumeration needs a nonempty carrier");
  }
  if (carrier_.count() > kMaxTableCarrier) {
    throw Error(ErrorCode::SizeOutOfRange,
                "table enumeration is capped at carriers of " + std::to_string(kMaxTableCarrier));
  }
  cells_ = carrier_.count() * carrier_.count();
  radix_ = carrier_.universe()->size() + (allow_indet_ ? 1 : 0);
  count_ = 1;
  for (std::size_t i = 0; i < cells_; ++i) count_ *= radix_;
}

OpTable TableStream::at(std::uint64_t ordinal) const {
  const std::size_t n = carrier_.universe()->size();
  std::vector<Cell> cells(cells_);
  for (std::size_t i = cells_; i-- > 0;) {
    const std::size_t digit = ordinal % radix_;
    ordinal /= radix_;
    cells[i] = digit < n ? Cell{digit} : Cell{};
  }
  return make_table_from_cells(carrier_, std::move(cells));
}

std::optional<OpTable> TableStream::next() {
  if (cursor_ >= count_) return std::nullopt;
  return at(cursor_++);
}

// ------------------------------------------------------------------ mappings

MappingStream::MappingStream(SubsetU domain, SubsetU codomain, bool surjective_only)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), surjective_only_(surjective_only) {
  if (!domain_.universe() || !codomain_.universe() || domain_.empty() || codomain_.empty()) {
    throw Error(ErrorCode::EmptySet, "mapping enumeration needs nonempty domain and codomain");
  }
  values_ = codomain_.indices();
  digits_.assign(domain_.count(), 0);
}

std::optional<Mapping> MappingStream::next() {
  while (!done_) {
    std::vector<Index> graph;
    graph.reserve(digits_.size());
    for (auto d : digits_) graph.push_back(values_[d]);
    // Advance the odometer, last domain element least significant.
    std::size_t i = digits_.size();
    while (i-- > 0) {
      if (++digits_[i] < values_.size()) break;
      digits_[i] = 0;
      if (i == 0) done_ = true;
    }
    Mapping m = make_mapping_from_values(domain_, codomain_, graph);
    if (!surjective_only_ || m.surjective()) return m;
  }
  return std::nullopt;
}

std::vector<Mapping> enum_mappings(const SubsetU& domain, const SubsetU& codomain,
                                   bool surjective_only) {
  std::vector<Mapping> out;
  MappingStream stream(domain, codomain, surjective_only);
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

// -------------------------------------------------------------------- search

std::string to_string(Structural s) {
  switch (s) {
    case Structural::RoughAntiSemigroup: return "rough-anti-semigroup";
    case Structural::RoughCarrier: return "rough-carrier";
    case Structural::ExactCarrier: return "exact-carrier";
    case Structural::Congruence: return "congruence";
    case Structural::Semigroup: return "semigroup";
    case Structural::Group: return "group";
    case Structural::AntiGroup: return "anti-group";
    case Structural::AG4: return "ag4";
    case Structural::StrictAG4: return "strict-ag4";
  }
  return "?";
}

std::optional<Structural> parse_structural(std::string_view s) {
  for (auto c : {Structural::RoughAntiSemigroup, Structural::RoughCarrier, Structural::ExactCarrier,
                 Structural::Congruence, Structural::Semigroup, Structural::Group,
                 Structural::AntiGroup, Structural::AG4, Structural::StrictAG4}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

void SearchSpec::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidSearchSpec, why); };
  if (universe_size < 1 || universe_size > kMaxUniverseSize) {
    fail("universe size must be within 1.." + std::to_string(kMaxUniverseSize));
  }
  if (carrier_size < 1 || carrier_size > universe_size) {
    fail("carrier size must be within 1..universe size");
  }
  if (carrier_size > kMaxTableCarrier) {
    fail("carrier size is capped at " + std::to_string(kMaxTableCarrier));
  }
  if (limit < 1) fail("limit must be at least 1");
  if (budget < 1) fail("budget must be at least 1");
  if (carrier_size != universe_size &&
      std::find(structural_constraints.begin(), structural_constraints.end(),
                Structural::Congruence) != structural_constraints.end()) {
    fail("the congruence constraint needs carrier size = universe size");
  }
}

namespace {

bool needs_space(const SearchSpec& spec) {
  for (auto s : spec.structural_constraints) {
    switch (s) {
      case Structural::RoughAntiSemigroup:
      case Structural::RoughCarrier:
      case Structural::ExactCarrier:
      case Structural::Congruence:
        return true;
      default:
        break;
    }
  }
  return false;
}

bool accepts(const SearchSpec& spec, const ApproxSpace& space, const OpTable& table) {
  for (const auto& [law, status] : spec.law_constraints) {
    if (evaluate_law(table, law).status != status) return false;
  }
  std::optional<Classification> cls;
  auto classification = [&]() -> const Classification& {
    if (!cls) cls = classify(table);
    return *cls;
  };
  for (auto s : spec.structural_constraints) {
    bool ok = true;
    switch (s) {
      case Structural::RoughAntiSemigroup:
        ok = check_rough_anti_semigroup(space, table).overall;
        break;
      case Structural::RoughCarrier:
        ok = space.approximate(table.carrier()).is_rough;
        break;
      case Structural::ExactCarrier:
        ok = !space.approximate(table.carrier()).is_rough;
        break;
      case Structural::Congruence:
        ok = is_congruence(space, table).holds;
        break;
      case Structural::Semigroup: ok = classification().is_semigroup; break;
      case Structural::Group: ok = classification().is_group; break;
      case Structural::AntiGroup: ok = classification().is_anti_group; break;
      case Structural::AG4: ok = classification().is_ag4; break;
      case Structural::StrictAG4: ok = classification().is_strict_ag4; break;
    }
    if (!ok) return false;
  }
  return true;
}

SubsetU first_elements(const UniversePtr& u, std::size_t k) {
  SubsetU s(u);
  for (Index i = 0; i < k; ++i) s.insert(i);
  return s;
}

}  // namespace

SearchResult search(const SearchSpec& spec) {
  spec.validate();
  const auto universe = make_numbered_universe(spec.universe_size);
  const SubsetU carrier = first_elements(universe, spec.carrier_size);
  const std::vector<ApproxSpace> spaces =
      needs_space(spec) ? enum_spaces(universe) : std::vector<ApproxSpace>{identity_space(universe)};
  const TableStream tables(carrier, spec.allow_indet);

  SearchResult result;
  result.space_size = spaces.size() * tables.count();
  const std::uint64_t scan_end = std::min<std::uint64_t>(result.space_size, spec.budget);

  auto chunks = run_chunks<std::vector<SearchMatch>>(
      scan_end, spec.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<SearchMatch> found;
        for (std::uint64_t ord = lo; ord < hi && found.size() < spec.limit; ++ord) {
          const ApproxSpace& space = spaces[ord / tables.count()];
          OpTable table = tables.at(ord % tables.count());
          if (accepts(spec, space, table)) found.push_back({ord, space, std::move(table)});
        }
        return found;
      });

  for (auto& chunk : chunks) {
    for (auto& m : chunk) {
      if (result.matches.size() == spec.limit) break;
      result.matches.push_back(std::move(m));
    }
  }
  result.limit_reached = result.matches.size() == spec.limit;
  result.examined = result.limit_reached ? result.matches.back().ordinal + 1 : scan_end;
  result.budget_exhausted = !result.limit_reached && scan_end < result.space_size;
  return result;
}

// ------------------------------------------------------------ counterexamples

std::string to_string(Relation r) {
  switch (r) {
    case Relation::L1: return "L1";
    case Relation::L2: return "L2";
    case Relation::L3: return "L3";
    case Relation::L4: return "L4";
    case Relation::L5: return "L5";
    case Relation::L6: return "L6";
    case Relation::L7: return "L7";
    case Relation::L8: return "L8";
    case Relation::L9: return "L9";
    case Relation::IntersectionAlways: return "P31-i";
    case Relation::IntersectionClaimed: return "P31-ii";
    case Relation::ProductUpperSub: return "P22-a";
    case Relation::ProductUpperSup: return "P22-b";
    case Relation::ProductLowerSub: return "P22-c";
    case Relation::ProductLowerSup: return "P22-d";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Relation::ProductLowerSup); ++i) {
    auto r = static_cast<Relation>(i);
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

namespace {

bool is_product_relation(Relation r) {
  return r == Relation::ProductUpperSub || r == Relation::ProductUpperSup ||
         r == Relation::ProductLowerSub || r == Relation::ProductLowerSup;
}

// Holds? plus a witness element when it does not.
std::pair<bool, std::optional<Index>> evaluate_relation(Relation r, const ApproxSpace& space,
                                                        const OpTable* table, const SubsetU& x,
                                                        const SubsetU& y) {
  if (r <= Relation::L9) {
    auto v = check_approx_law(space, static_cast<ApproxLaw>(static_cast<int>(r)), x, y);
    return {v.holds, v.witness};
  }
  if (r == Relation::IntersectionAlways || r == Relation::IntersectionClaimed) {
    auto rep = check_intersection_relations(space, x, y);
    const auto& rel = r == Relation::IntersectionAlways ? rep.always : rep.claimed;
    return {rel.holds, rel.witness};
  }
  const auto rels = product_relations(space, *table, x, y);
  const auto& rel = rels[static_cast<std::size_t>(r) - static_cast<std::size_t>(Relation::ProductUpperSub)];
  return {rel.holds, rel.witness};
}

}  // namespace

CounterexampleResult find_counterexample(Relation relation, const SearchSpec& bounds) {
  if (bounds.universe_size < 1 || bounds.universe_size > kMaxUniverseSize) {
    throw Error(ErrorCode::InvalidSearchSpec, "universe bound must be within 1..6");
  }
  const bool product = is_product_relation(relation);
  CounterexampleResult result;
  for (std::size_t n = 1; n <= bounds.universe_size; ++n) {
    const auto u = make_numbered_universe(n);
    if (product && n > kMaxTableCarrier) break;
    const std::uint64_t masks = 1ULL << n;
    const std::uint64_t first_mask = product ? 1 : 0;
    std::optional<TableStream> tables;
    if (product) tables.emplace(SubsetU::full(u), false);
    const std::uint64_t table_count = product ? tables->count() : 1;
    for (const auto& space : enum_spaces(u)) {
      for (std::uint64_t t = 0; t < table_count; ++t) {
        std::optional<OpTable> table;
        if (product) table = tables->at(t);
        for (std::uint64_t xm = first_mask; xm < masks; ++xm) {
          const SubsetU x = SubsetU::from_mask(u, xm);
          for (std::uint64_t ym = first_mask; ym < masks; ++ym) {
            if (result.examined >= bounds.budget) {
              result.complete = false;
              return result;
            }
            ++result.examined;
            const SubsetU y = SubsetU::from_mask(u, ym);
            auto [holds, witness] =
                evaluate_relation(relation, space, table ? &*table : nullptr, x, y);
            if (!holds) {
              result.found = Counterexample{relation, space, table, x, y, witness};
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

// -------------------------------------------------------------------- sweeps

namespace {

struct Tallied {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_failure;

  void fail(const std::string& where) {
    if (failures++ == 0) first_failure = where;
  }
  void merge(const Tallied& o) {
    instances += o.instances;
    if (o.failures > 0 && failures == 0) first_failure = o.first_failure;
    failures += o.failures;
  }
};

struct SpaceItem {
  UniversePtr universe;
  Rgs rgs;
};

std::vector<SpaceItem> all_space_items(std::size_t max_n) {
  std::vector<SpaceItem> items;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto u = make_numbered_universe(n);
    for (auto& rgs : enum_partitions(n)) items.push_back({u, std::move(rgs)});
  }
  return items;
}

std::string describe(const ApproxSpace& space, const SubsetU& x, const SubsetU& y,
                     std::optional<Index> witness) {
  std::ostringstream os;
  os << "n=" << space.universe()->size() << " partition " << format_partition(space.partition())
     << " X=" << format_set(x) << " Y=" << format_set(y);
  if (witness) os << " witness " << space.universe()->label(*witness);
  return os.str();
}

std::string format_table(const OpTable& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    if (i) os << ' ';
    const auto& c = t.cells()[i];
    os << (c ? t.universe()->label(*c) : std::string("?"));
  }
  os << ']';
  return os.str();
}

std::vector<Tallied> sweep_spaces(const std::vector<Relation>& relations, std::size_t max_n,
                                  unsigned jobs) {
  if (max_n < 1 || max_n > kMaxUniverseSize) {
    throw Error(ErrorCode::SizeOutOfRange, "sweep size must be within 1..6");
  }
  const auto items = all_space_items(max_n);
  auto chunks = run_chunks<std::vector<Tallied>>(
      items.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Tallied> t(relations.size());
        for (std::uint64_t i = lo; i < hi; ++i) {
          const auto& u = items[i].universe;
          const ApproxSpace space = space_from_rgs(u, items[i].rgs);
          const std::uint64_t masks = 1ULL << u->size();
          for (std::uint64_t xm = 0; xm < masks; ++xm) {
            const SubsetU x = SubsetU::from_mask(u, xm);
            for (std::uint64_t ym = 0; ym < masks; ++ym) {
              const SubsetU y = SubsetU::from_mask(u, ym);
              for (std::size_t r = 0; r < relations.size(); ++r) {
                ++t[r].instances;
                auto [holds, w] = evaluate_relation(relations[r], space, nullptr, x, y);
                if (!holds) t[r].fail(describe(space, x, y, w));
              }
            }
          }
        }
        return t;
      });
  std::vector<Tallied> total(relations.size());
  for (const auto& c : chunks) {
    for (std::size_t r = 0; r < relations.size(); ++r) total[r].merge(c[r]);
  }
  return total;
}

SweepLine to_line(std::string id, std::string description, bool theorem, const Tallied& t,
                  std::size_t max_n) {
  return SweepLine{std::move(id), std::move(description), theorem, t.instances,
                   t.failures,    t.first_failure,        max_n};
}

}  // namespace

SweepLine sweep_approx_law(ApproxLaw law, std::size_t max_n, unsigned jobs) {
  static const char* const kDescriptions[] = {
      "lower(X) <= X <= upper(X)",
      "approximations of {} and U are themselves",
      "lower(X | Y) >= lower(X) | lower(Y)",
      "lower(X & Y) = lower(X) & lower(Y)",
      "upper(X | Y) = upper(X) | upper(Y)",
      "upper(X & Y) <= upper(X) & upper(Y)",
      "lower(X') = upper(X)' and upper(X') = lower(X)'",
      "lower(lower(X)) = lower(X) = upper(lower(X))",
      "upper(upper(X)) = upper(X) = lower(upper(X))",
  };
  const auto rel = static_cast<Relation>(static_cast<int>(law));
  auto t = sweep_spaces({rel}, max_n, jobs);
  return to_line(to_string(law), kDescriptions[static_cast<int>(law)], true, t[0], max_n);
}

std::vector<SweepLine> sweep_intersection(std::size_t max_n, unsigned jobs) {
  auto t = sweep_spaces({Relation::IntersectionAlways, Relation::IntersectionClaimed}, max_n, jobs);
  return {to_line("P31-i", "upper(A & B) <= upper(A) & upper(B)", true, t[0], max_n),
          to_line("P31-ii", "upper(A) & upper(B) <= upper(A & B)", false, t[1], max_n)};
}

namespace {

struct TableItem {
  UniversePtr universe;
  std::uint64_t ordinal;
};

std::vector<TableItem> all_full_tables(std::size_t max_n) {
  std::vector<TableItem> items;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto u = make_numbered_universe(n);
    TableStream tables(SubsetU::full(u), false);
    for (std::uint64_t t = 0; t < tables.count(); ++t) items.push_back({u, t});
  }
  return items;
}

constexpr std::size_t kProductSweepCap = 3;

}  // namespace

std::vector<SweepLine> sweep_product_laws(std::size_t max_n, unsigned jobs) {
  const std::size_t cap = std::min(max_n, kProductSweepCap);
  if (cap < 1) throw Error(ErrorCode::SizeOutOfRange, "sweep size must be at least 1");
  const auto items = all_full_tables(cap);
  // Index r for all tables, 4 + r for congruent ones.
  auto chunks = run_chunks<std::vector<Tallied>>(
      items.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Tallied> t(8);
        std::optional<UniversePtr> cached_u;
        std::vector<ApproxSpace> spaces;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const auto& u = items[i].universe;
          if (!cached_u || *cached_u != u) {
            cached_u = u;
            spaces = enum_spaces(u);
          }
          const OpTable table = TableStream(SubsetU::full(u), false).at(items[i].ordinal);
          const std::uint64_t masks = 1ULL << u->size();
          for (const auto& space : spaces) {
            const bool congruent = is_congruence(space, table).holds;
            for (std::uint64_t xm = 1; xm < masks; ++xm) {
              const SubsetU x = SubsetU::from_mask(u, xm);
              for (std::uint64_t ym = 1; ym < masks; ++ym) {
                const SubsetU y = SubsetU::from_mask(u, ym);
                const auto rels = product_relations(space, table, x, y);
                for (std::size_t r = 0; r < 4; ++r) {
                  for (std::size_t slot : {r, r + 4}) {
                    if (slot >= 4 && !congruent) continue;
                    ++t[slot].instances;
                    if (!rels[r].holds) {
                      t[slot].fail(describe(space, x, y, rels[r].witness) + " table " +
                                   format_table(table));
                    }
                  }
                }
              }
            }
          }
        }
        return t;
      });
  std::vector<Tallied> total(8);
  for (const auto& c : chunks) {
    for (std::size_t r = 0; r < 8; ++r) total[r].merge(c[r]);
  }
  static const char* const kRel[] = {"upper(X)*upper(Y) <= upper(XY)", "upper(X)*upper(Y) >= upper(XY)",
                                     "lower(X)*lower(Y) <= lower(XY)", "lower(X)*lower(Y) >= lower(XY)"};
  static const char kId[] = {'a', 'b', 'c', 'd'};
  std::vector<SweepLine> lines;
  for (std::size_t r = 0; r < 4; ++r) {
    lines.push_back(to_line(std::string("P22-") + kId[r] + "|congruence",
                            std::string(kRel[r]) + " on congruent spaces", r == 0, total[r + 4], cap));
  }
  for (std::size_t r = 0; r < 4; ++r) {
    lines.push_back(to_line(std::string("P22-") + kId[r], std::string(kRel[r]) + " on all spaces",
                            false, total[r], cap));
  }
  return lines;
}

SweepLine sweep_composition(CompositionProp prop, std::size_t max_n, unsigned jobs) {
  const std::size_t cap = std::min(max_n, kProductSweepCap);
  if (cap < 1) throw Error(ErrorCode::SizeOutOfRange, "sweep size must be at least 1");
  const auto items = all_full_tables(cap);
  const MorphismKind inner_kind =
      prop == CompositionProp::AntiAfterHom ? MorphismKind::Hom : MorphismKind::AntiHom;
  auto chunks = run_chunks<Tallied>(items.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    Tallied t;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto& u = items[i].universe;
      const SubsetU full = SubsetU::full(u);
      const OpTable table = TableStream(full, false).at(items[i].ordinal);
      std::vector<Mapping> outers;
      std::vector<Mapping> inners;
      for (auto& m : enum_mappings(full, full, false)) {
        const bool anti = check_hom(m, table, table, MorphismKind::AntiHom).overall;
        const bool inner = check_hom(m, table, table, inner_kind).overall;
        if (anti) outers.push_back(m);
        if (inner) inners.push_back(std::move(m));
      }
      std::vector<CompositionCandidate> candidates;
      for (const auto& o : outers) {
        for (const auto& in : inners) candidates.push_back({o, in});
      }
      const auto report = verify_composition_props(table, prop, candidates);
      t.instances += report.qualifying;
      for (const auto& ce : report.counterexamples) {
        const auto& c = candidates[ce.candidate];
        std::ostringstream os;
        os << "table " << format_table(table) << " outer";
        for (Index v : c.outer.values()) os << ' ' << u->label(v);
        os << " inner";
        for (Index v : c.inner.values()) os << ' ' << u->label(v);
        t.fail(os.str());
      }
    }
    return t;
  });
  Tallied total;
  for (const auto& c : chunks) total.merge(c);
  if (prop == CompositionProp::AntiAfterHom) {
    return to_line("P41", "anti-hom o hom is an anti-hom", true, total, cap);
  }
  return to_line("P42", "anti-hom o anti-hom is a hom", true, total, cap);
}

}  // namespace ras
