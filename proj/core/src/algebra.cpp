#include "ras/algebra.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "ras/error.hpp"

namespace ras {

namespace {

constexpr std::size_t kNoPos = std::numeric_limits<std::size_t>::max();

bool is_anti(Law law) { return law == Law::C6 || law == Law::C7 || law == Law::C10; }

Law classical_of(Law anti) {
  switch (anti) {
    case Law::C6: return Law::C1;
    case Law::C7: return Law::C2;
    case Law::C10: return Law::C5;
    default: return anti;
  }
}

Truth negate(Truth t) {
  switch (t) {
    case Truth::True: return Truth::False;
    case Truth::False: return Truth::True;
    case Truth::Indeterminate: return Truth::Indeterminate;
  }
  return t;
}

std::size_t checked_position(const OpTable& table, Index x) {
  auto p = table.position(x);
  if (!p) {
    throw Error(ErrorCode::NotInCarrier,
                "element " + (x < table.universe()->size() ? table.universe()->label(x)
                                                            : std::to_string(x)) +
                    " is not in the table's carrier");
  }
  return *p;
}

// x*y where both sides are known carrier members, by position.
Cell product_at(const OpTable& t, std::size_t px, std::size_t py) { return t.cell(px, py); }

bool is_local_neutral(const OpTable& t, std::size_t px, std::size_t pe) {
  const Index x = t.elements()[px];
  return t.cell(px, pe) == x && t.cell(pe, px) == x;
}

Truth eval_closure(const OpTable& t, std::size_t px, std::size_t py) {
  Cell c = product_at(t, px, py);
  if (!c) return Truth::Indeterminate;
  return t.in_carrier(*c) ? Truth::True : Truth::False;
}

// Composite x*y that stays usable as a left/right operand: defined and in carrier.
std::optional<std::size_t> inner(const OpTable& t, std::size_t px, std::size_t py) {
  Cell c = product_at(t, px, py);
  if (!c) return std::nullopt;
  return t.position(*c);
}

Truth eval_assoc(const OpTable& t, std::size_t px, std::size_t py, std::size_t pz) {
  Cell left;
  Cell right;
  if (auto xy = inner(t, px, py)) left = product_at(t, *xy, pz);
  if (auto yz = inner(t, py, pz)) right = product_at(t, px, *yz);
  if (!left || !right) return Truth::Indeterminate;
  return *left == *right ? Truth::True : Truth::False;
}

Truth eval_neutral(const OpTable& t, std::size_t px) {
  for (std::size_t pe = 0; pe < t.order(); ++pe) {
    if (is_local_neutral(t, px, pe)) return Truth::True;
  }
  return Truth::False;
}

Truth eval_inverse(const OpTable& t, std::size_t px) {
  for (std::size_t pe = 0; pe < t.order(); ++pe) {
    if (!is_local_neutral(t, px, pe)) continue;
    const Index e = t.elements()[pe];
    for (std::size_t pu = 0; pu < t.order(); ++pu) {
      if (t.cell(px, pu) == e && t.cell(pu, px) == e) return Truth::True;
    }
  }
  return Truth::False;
}

Truth eval_commute(const OpTable& t, std::size_t px, std::size_t py) {
  Cell a = product_at(t, px, py);
  Cell b = product_at(t, py, px);
  if (!a || !b) return Truth::Indeterminate;
  return *a == *b ? Truth::True : Truth::False;
}

std::optional<std::size_t> global_neutral(const OpTable& t) {
  for (std::size_t pe = 0; pe < t.order(); ++pe) {
    bool all = true;
    for (std::size_t px = 0; px < t.order() && all; ++px) all = is_local_neutral(t, px, pe);
    if (all) return pe;
  }
  return std::nullopt;
}

class Tally {
 public:
  explicit Tally(Law law) { v_.law = law; }

  void add(Truth t, Witness w) {
    switch (t) {
      case Truth::True:
        if (v_.true_count++ == 0) v_.true_witness = std::move(w);
        break;
      case Truth::False:
        if (v_.false_count++ == 0) v_.false_witness = std::move(w);
        break;
      case Truth::Indeterminate:
        if (v_.indeterminate_count++ == 0) v_.indeterminate_witness = std::move(w);
        break;
    }
  }

  LawVerdict finish() {
    const bool has_t = v_.true_count > 0;
    const bool has_f = v_.false_count > 0;
    const bool has_i = v_.indeterminate_count > 0;
    if (!has_t && !has_f && !has_i) {
      // Empty quantifier domain: classical laws hold vacuously, anti-laws mirror them.
      v_.status = is_anti(v_.law) ? Status::AllFalse : Status::AllTrue;
    } else if (!has_f && !has_i) {
      v_.status = Status::AllTrue;
    } else if (!has_t && !has_i) {
      v_.status = Status::AllFalse;
    } else {
      v_.status = Status::Mixed;
    }
    return v_;
  }

 private:
  LawVerdict v_;
};

}  // namespace

std::optional<std::size_t> OpTable::position(Index x) const {
  if (x >= position_.size() || position_[x] == kNoPos) return std::nullopt;
  return position_[x];
}

Cell OpTable::at(Index x, Index y) const {
  return cell(checked_position(*this, x), checked_position(*this, y));
}

Cell OpTable::lookup(Index x, Index y) const {
  auto px = position(x);
  auto py = position(y);
  if (!px || !py) return std::nullopt;
  return cell(*px, *py);
}

OpTable make_table_from_cells(const SubsetU& carrier, std::vector<Cell> cells) {
  if (!carrier.universe()) throw Error(ErrorCode::EmptyCarrier, "carrier has no universe");
  if (carrier.empty()) throw Error(ErrorCode::EmptyCarrier, "a table needs a nonempty carrier");
  OpTable t;
  t.universe_ = carrier.universe();
  t.carrier_ = carrier;
  t.elements_ = carrier.indices();
  t.position_.assign(t.universe_->size(), kNoPos);
  for (std::size_t p = 0; p < t.elements_.size(); ++p) t.position_[t.elements_[p]] = p;
  const std::size_t need = t.elements_.size() * t.elements_.size();
  if (cells.size() < need) {
    throw Error(ErrorCode::MissingEntry, "table has " + std::to_string(cells.size()) +
                                             " cells, expected " + std::to_string(need));
  }
  if (cells.size() > need) {
    throw Error(ErrorCode::ExtraEntry, "table has " + std::to_string(cells.size()) +
                                           " cells, expected " + std::to_string(need));
  }
  for (const auto& c : cells) {
    if (c && *c >= t.universe_->size()) {
      throw Error(ErrorCode::UnknownResultLabel,
                  "result index " + std::to_string(*c) + " is outside the universe");
    }
  }
  t.cells_ = std::move(cells);
  return t;
}

OpTable make_table(const SubsetU& carrier, std::span<const TableEntry> entries) {
  if (!carrier.universe() || carrier.empty()) {
    throw Error(ErrorCode::EmptyCarrier, "a table needs a nonempty carrier");
  }
  const auto& u = *carrier.universe();
  std::map<std::pair<Index, Index>, Cell> seen;
  for (const auto& e : entries) {
    if (!carrier.contains(e.x) || !carrier.contains(e.y)) {
      throw Error(ErrorCode::ExtraEntry, "entry outside carrier x carrier");
    }
    if (!seen.emplace(std::pair{e.x, e.y}, e.value).second) {
      throw Error(ErrorCode::ExtraEntry,
                  "entry (" + u.label(e.x) + ", " + u.label(e.y) + ") given twice");
    }
  }
  const auto elems = carrier.indices();
  std::vector<Cell> cells;
  cells.reserve(elems.size() * elems.size());
  for (Index x : elems) {
    for (Index y : elems) {
      auto it = seen.find({x, y});
      if (it == seen.end()) {
        throw Error(ErrorCode::MissingEntry, "no entry for (" + u.label(x) + ", " + u.label(y) + ")");
      }
      cells.push_back(it->second);
    }
  }
  return make_table_from_cells(carrier, std::move(cells));
}

OpTable make_table(const SubsetU& carrier, const std::vector<std::vector<std::string>>& rows) {
  if (!carrier.universe() || carrier.empty()) {
    throw Error(ErrorCode::EmptyCarrier, "a table needs a nonempty carrier");
  }
  const auto& u = *carrier.universe();
  const std::size_t k = carrier.count();
  if (rows.size() < k) throw Error(ErrorCode::MissingEntry, "too few rows");
  if (rows.size() > k) throw Error(ErrorCode::ExtraEntry, "too many rows");
  std::vector<Cell> cells;
  cells.reserve(k * k);
  for (const auto& row : rows) {
    if (row.size() < k) throw Error(ErrorCode::MissingEntry, "row has too few cells");
    if (row.size() > k) throw Error(ErrorCode::ExtraEntry, "row has too many cells");
    for (const auto& label : row) {
      if (label == "?") {
        cells.emplace_back(std::nullopt);
      } else if (u.contains(label)) {
        cells.emplace_back(u.index(label));
      } else {
        throw Error(ErrorCode::UnknownResultLabel, "'" + label + "' is not in the universe");
      }
    }
  }
  return make_table_from_cells(carrier, std::move(cells));
}

std::string to_string(Law law) { return "C" + std::to_string(static_cast<int>(law) + 1); }

std::optional<Law> parse_law(std::string_view s) {
  for (auto law : kAllLaws) {
    if (to_string(law) == s) return law;
  }
  return std::nullopt;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::AllTrue: return "AllTrue";
    case Status::AllFalse: return "AllFalse";
    case Status::Mixed: return "Mixed";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view s) {
  for (auto st : {Status::AllTrue, Status::AllFalse, Status::Mixed}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

Truth evaluate_instance(const OpTable& table, Law law, std::span<const Index> instance) {
  auto arity_error = [&] {
    return std::invalid_argument("wrong instance arity for " + to_string(law));
  };
  std::vector<std::size_t> pos;
  for (Index i : instance) pos.push_back(checked_position(table, i));

  if (is_anti(law)) return negate(evaluate_instance(table, classical_of(law), instance));
  switch (law) {
    case Law::C1:
      if (pos.size() != 2) throw arity_error();
      return eval_closure(table, pos[0], pos[1]);
    case Law::C2:
      if (pos.size() != 3) throw arity_error();
      return eval_assoc(table, pos[0], pos[1], pos[2]);
    case Law::C3:
      if (pos.size() != 1) throw arity_error();
      return eval_neutral(table, pos[0]);
    case Law::C4:
      if (pos.size() != 1) throw arity_error();
      return eval_inverse(table, pos[0]);
    case Law::C5:
      if (pos.size() != 2 || pos[0] == pos[1]) throw arity_error();
      return eval_commute(table, pos[0], pos[1]);
    case Law::C8:
      if (!pos.empty()) throw arity_error();
      return global_neutral(table) ? Truth::False : Truth::True;
    case Law::C9:
      if (!pos.empty()) throw arity_error();
      return evaluate_law(table, Law::C4).status == Status::AllFalse ? Truth::True : Truth::False;
    default:
      break;
  }
  return Truth::Indeterminate;
}

LawVerdict evaluate_law(const OpTable& table, Law law) {
  const auto& el = table.elements();
  const std::size_t k = table.order();
  Tally tally(law);
  const bool anti = is_anti(law);
  auto add = [&](Truth t, Witness w) { tally.add(anti ? negate(t) : t, std::move(w)); };

  switch (classical_of(law)) {
    case Law::C1:
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) add(eval_closure(table, a, b), {el[a], el[b]});
      break;
    case Law::C2:
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          for (std::size_t c = 0; c < k; ++c)
            add(eval_assoc(table, a, b, c), {el[a], el[b], el[c]});
      break;
    case Law::C3:
      for (std::size_t a = 0; a < k; ++a) add(eval_neutral(table, a), {el[a]});
      break;
    case Law::C4:
      for (std::size_t a = 0; a < k; ++a) add(eval_inverse(table, a), {el[a]});
      break;
    case Law::C5:
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) add(eval_commute(table, a, b), {el[a], el[b]});
      break;
    case Law::C8: {
      auto e = global_neutral(table);
      add(e ? Truth::False : Truth::True, e ? Witness{el[*e]} : Witness{});
      break;
    }
    case Law::C9: {
      auto c4 = evaluate_law(table, Law::C4);
      if (c4.status == Status::AllFalse) {
        add(Truth::True, {});
      } else {
        add(Truth::False, c4.true_witness.value_or(Witness{}));
      }
      break;
    }
    default:
      break;
  }
  return tally.finish();
}

SubsetU local_neutrals(const OpTable& table, Index x) {
  const std::size_t px = checked_position(table, x);
  SubsetU out(table.universe());
  for (std::size_t pe = 0; pe < table.order(); ++pe) {
    if (is_local_neutral(table, px, pe)) out.insert(table.elements()[pe]);
  }
  return out;
}

SubsetU neutral_pool(const OpTable& table) {
  SubsetU out(table.universe());
  for (Index x : table.elements()) out = out | local_neutrals(table, x);
  return out;
}

Classification classify(const OpTable& table) {
  Classification c;
  for (std::size_t i = 0; i < kAllLaws.size(); ++i) c.verdicts[i] = evaluate_law(table, kAllLaws[i]);
  auto all_true = [&](Law l) { return c[l].status == Status::AllTrue; };
  auto mixed = [&](Law l) { return c[l].status == Status::Mixed; };
  c.is_semigroup = all_true(Law::C1) && all_true(Law::C2);
  c.is_group = c.is_semigroup && all_true(Law::C3) && all_true(Law::C4);
  c.is_commutative_group = c.is_group && all_true(Law::C5);
  c.is_anti_group = c[Law::C6].holds() || c[Law::C7].holds() || c[Law::C8].holds() ||
                    c[Law::C9].holds();
  c.is_anti_abelian = c.is_anti_group && c[Law::C10].holds();
  c.is_ag4 = c[Law::C4].status == Status::AllFalse;
  c.is_strict_ag4 =
      c.is_ag4 && mixed(Law::C1) && mixed(Law::C2) && mixed(Law::C3) && mixed(Law::C5);
  return c;
}

std::vector<CancellationWitness> cancellation_failures(const OpTable& table) {
  using Side = CancellationWitness::Side;
  const auto& el = table.elements();
  const std::size_t k = table.order();
  std::vector<CancellationWitness> out;
  for (Side side : {Side::Left, Side::Right}) {
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (x == y) continue;
          Cell a = side == Side::Left ? table.cell(g, x) : table.cell(x, g);
          Cell b = side == Side::Left ? table.cell(g, y) : table.cell(y, g);
          if (a && b && *a == *b) out.push_back({side, el[g], el[x], el[y]});
        }
      }
    }
  }
  return out;
}

SubsetU set_product(const OpTable& table, const SubsetU& a, const SubsetU& b, ProductMode mode) {
  if (!a.is_subset_of(table.carrier()) || !b.is_subset_of(table.carrier())) {
    throw Error(ErrorCode::NotInCarrier, "product operands must lie in the carrier");
  }
  SubsetU out(table.universe());
  for (Index h = a.first(); h != SubsetU::npos; h = a.next(h)) {
    const std::size_t ph = *table.position(h);
    for (Index k = b.first(); k != SubsetU::npos; k = b.next(k)) {
      if (Cell c = table.cell(ph, *table.position(k))) out.insert(*c);
    }
  }
  if (mode == ProductMode::Restricted) out = out & table.carrier();
  return out;
}

namespace {

void require_full(const ApproxSpace& space, const OpTable& table) {
  if (!same_universe(space.universe(), table.universe())) {
    throw Error(ErrorCode::UniverseMismatch, "space and table use different universes");
  }
  if (table.order() != table.universe()->size()) {
    throw Error(ErrorCode::CarrierNotFull, "the table's carrier must be the whole universe");
  }
}

}  // namespace

CongruenceVerdict is_congruence(const ApproxSpace& space, const OpTable& table) {
  require_full(space, table);
  CongruenceVerdict v;
  const std::size_t n = table.order();
  // Carrier is the whole universe, so positions equal indices.
  for (Index x = 0; x < n; ++x) {
    for (Index x2 = 0; x2 < n; ++x2) {
      if (!space.equivalent(x, x2)) continue;
      for (Index y = 0; y < n; ++y) {
        for (Index y2 = 0; y2 < n; ++y2) {
          if (!space.equivalent(y, y2)) continue;
          Cell a = table.cell(x, y);
          Cell b = table.cell(x2, y2);
          if (!a || !b) {
            ++v.indeterminate;
            continue;
          }
          ++v.checked;
          if (!space.equivalent(*a, *b) && v.holds) {
            v.holds = false;
            v.witness = std::array<Index, 4>{x, x2, y, y2};
          }
        }
      }
    }
  }
  return v;
}

std::array<ProductRelation, 4> product_relations(const ApproxSpace& space, const OpTable& table,
                                                 const SubsetU& x, const SubsetU& y) {
  const SubsetU xy = set_product(table, x, y);
  const SubsetU up = set_product(table, space.upper(x), space.upper(y));
  const SubsetU up_xy = space.upper(xy);
  const SubsetU lo = set_product(table, space.lower(x), space.lower(y));
  const SubsetU lo_xy = space.lower(xy);

  auto contained = [](char id, const SubsetU& small, const SubsetU& big, bool forward) {
    const SubsetU& lhs = forward ? small : big;
    const SubsetU& rhs = forward ? big : small;
    Index w = small.first_not_in(big);
    ProductRelation r{id, w == SubsetU::npos, lhs, rhs, std::nullopt};
    if (!r.holds) r.witness = w;
    return r;
  };
  return {contained('a', up, up_xy, true), contained('b', up_xy, up, false),
          contained('c', lo, lo_xy, true), contained('d', lo_xy, lo, false)};
}

ProductLawReport check_product_approx_laws(const ApproxSpace& space, const OpTable& table,
                                           const SubsetU& x, const SubsetU& y) {
  require_full(space, table);
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::EmptySubset, "product laws are stated for nonempty subsets");
  }
  ProductLawReport r;
  r.congruence = is_congruence(space, table);
  r.relations = product_relations(space, table, x, y);
  return r;
}

}  // namespace ras
