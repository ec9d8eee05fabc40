#include "ras/rough_structures.hpp"

#include "ras/error.hpp"

namespace ras {

namespace {

void require_universe(const ApproxSpace& space, const UniversePtr& u) {
  if (!same_universe(space.universe(), u)) {
    throw Error(ErrorCode::UniverseMismatch, "operand is not over the space's universe");
  }
}

ClosureCondition check_closure(const OpTable& table, const SubsetU& h, const SubsetU& target) {
  ClosureCondition c;
  for (Index x = h.first(); x != SubsetU::npos; x = h.next(x)) {
    for (Index y = h.first(); y != SubsetU::npos; y = h.next(y)) {
      Cell r = table.at(x, y);
      if (!r || !target.contains(*r)) {
        c.holds = false;
        c.failures.push_back({x, y, r});
      }
    }
  }
  return c;
}

}  // namespace

RoughStructVerdict check_rough_anti_semigroup(const ApproxSpace& space, const OpTable& table,
                                              const OpTable* ambient) {
  require_universe(space, table.universe());
  if (ambient) require_universe(space, ambient->universe());

  RoughStructVerdict v;
  const SubsetU& a = table.carrier();
  v.upper_used = space.upper(a);
  v.condition1 = check_closure(table, a, v.upper_used);

  auto product = [&](Index x, Index y) -> Cell {
    if (table.in_carrier(x) && table.in_carrier(y)) return table.at(x, y);
    if (ambient && ambient->in_carrier(x) && ambient->in_carrier(y)) return ambient->at(x, y);
    return std::nullopt;
  };

  AssociativityCondition assoc;
  const auto up = v.upper_used.indices();
  for (Index x : up) {
    for (Index y : up) {
      for (Index z : up) {
        Cell left;
        Cell right;
        if (Cell xy = product(x, y)) left = product(*xy, z);
        if (Cell yz = product(y, z)) right = product(x, *yz);
        if (!left || !right) {
          if (assoc.indeterminate_count++ == 0) assoc.indeterminate_witness = Witness{x, y, z};
        } else if (*left == *right) {
          ++assoc.true_count;
        } else if (assoc.false_count++ == 0) {
          assoc.false_witness = Witness{x, y, z};
        }
      }
    }
  }
  assoc.holds = assoc.false_count == 0;
  v.condition2 = assoc;
  v.overall = v.condition1.holds && assoc.holds;
  return v;
}

RoughStructVerdict check_rough_anti_subsemigroup(const ApproxSpace& space, const OpTable& table,
                                                 const SubsetU& h) {
  require_universe(space, table.universe());
  require_universe(space, h.universe());
  if (h.empty()) throw Error(ErrorCode::EmptySubset, "H must be nonempty");
  if (!h.is_subset_of(table.carrier())) {
    throw Error(ErrorCode::NotInCarrier, "H must lie inside the table's carrier");
  }
  RoughStructVerdict v;
  v.upper_used = space.upper(h);
  v.condition1 = check_closure(table, h, v.upper_used);
  v.overall = v.condition1.holds;
  return v;
}

namespace {

SetRelation contained(const SubsetU& small, const SubsetU& big) {
  Index w = small.first_not_in(big);
  SetRelation r{w == SubsetU::npos, small, big, std::nullopt};
  if (!r.holds) r.witness = w;
  return r;
}

}  // namespace

IntersectionReport check_intersection_relations(const ApproxSpace& space, const SubsetU& a,
                                                const SubsetU& b) {
  require_universe(space, a.universe());
  require_universe(space, b.universe());
  IntersectionReport r;
  r.intersection = a & b;
  r.upper_a = space.upper(a);
  r.upper_b = space.upper(b);
  r.upper_intersection = space.upper(r.intersection);
  const SubsetU cap = r.upper_a & r.upper_b;
  r.always = contained(r.upper_intersection, cap);
  r.claimed = contained(cap, r.upper_intersection);
  r.equality = SetRelation{r.always.holds && r.claimed.holds, r.upper_intersection, cap,
                           r.always.witness ? r.always.witness : r.claimed.witness};
  return r;
}

}  // namespace ras
