#include <random>

#include "doctest.h"
#include "ras/algebra.hpp"
#include "ras/error.hpp"
#include "ras/scenario.hpp"
#include "support.hpp"

using namespace ras;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::UnknownName;
}

std::vector<int> ints(const std::optional<Witness>& w) {
  if (!w) return {-1};
  return {w->begin(), w->end()};
}

std::vector<int> first_or_none(const std::vector<std::vector<int>>& v) {
  return v.empty() ? std::vector<int>{-1} : v.front();
}

// Labels are "1".."6", so index = label - 1.
std::vector<Index> at(std::initializer_list<int> labels) {
  std::vector<Index> v;
  for (int l : labels) v.push_back(static_cast<Index>(l - 1));
  return v;
}

void check_against_oracle(const OpTable& table) {
  const auto g = support::to_table(table);
  for (auto law : kAllLaws) {
    const auto v = evaluate_law(table, law);
    const auto o = oracle::evaluate(g, static_cast<int>(law) + 1);
    INFO(to_string(law));
    CHECK(v.true_count == static_cast<std::size_t>(o.t));
    CHECK(v.false_count == static_cast<std::size_t>(o.f));
    CHECK(v.indeterminate_count == static_cast<std::size_t>(o.i));
    const bool anti = law == Law::C6 || law == Law::C7 || law == Law::C10;
    CHECK(to_string(v.status) == o.status(anti));
    if (law == Law::C8 || law == Law::C9) continue;
    CHECK(ints(v.true_witness) == first_or_none(o.true_inst));
    CHECK(ints(v.false_witness) == first_or_none(o.false_inst));
    CHECK(ints(v.indeterminate_witness) == first_or_none(o.indet_inst));
  }
  // The global laws name the element that refutes them.
  const auto c8 = evaluate_law(table, Law::C8);
  if (c8.false_witness) {
    const int e = static_cast<int>(c8.false_witness->at(0));
    for (int x : g.carrier) CHECK((g.mul(x, e) == x && g.mul(e, x) == x));
  }
  const auto c9 = evaluate_law(table, Law::C9);
  if (c9.false_witness) CHECK(oracle::c4(g, static_cast<int>(c9.false_witness->at(0))) == oracle::T::True);
}

OpTable random_table(std::mt19937& rng, bool indet) {
  const int n = 1 + static_cast<int>(rng() % 5);
  auto u = make_numbered_universe(n);
  std::vector<Index> carrier;
  for (int i = 0; i < n; ++i) {
    if (rng() % 3 != 0) carrier.push_back(i);
  }
  if (carrier.empty()) carrier.push_back(rng() % n);
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < carrier.size() * carrier.size(); ++i) {
    if (indet && rng() % 6 == 0) {
      cells.push_back(std::nullopt);
    } else {
      cells.push_back(static_cast<Index>(rng() % n));
    }
  }
  return make_table_from_cells(SubsetU::from_indices(u, carrier), cells);
}

const OpTable& ex31_table() {
  static const Scenario s = support::example31();
  return s.table("C");
}

OpTable trivial_group() {
  auto u = make_universe({"a"});
  return make_table(SubsetU::full(u), {{"a"}});
}

}  // namespace

TEST_CASE("table construction") {
  const auto& c = ex31_table();
  CHECK(c.order() == 4);
  CHECK(c.at(0, 0) == Index{3});          // 1*1 = 4, outside the carrier
  CHECK(c.at(2, 2) == Index{5});          // 3*3 = 6, outside the carrier
  CHECK_FALSE(c.in_carrier(3));
  CHECK(c.lookup(3, 0) == std::nullopt);  // 4 is not a row
  CHECK(code_of([&] { c.at(3, 0); }) == ErrorCode::NotInCarrier);
  CHECK(trivial_group().at(0, 0) == Index{0});

  auto u = make_numbered_universe(2);
  const std::vector<TableEntry> three = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(code_of([&] { make_table(SubsetU::full(u), three); }) == ErrorCode::MissingEntry);
  const std::vector<TableEntry> extra = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  CHECK(code_of([&] { make_table(SubsetU::full(u), extra); }) == ErrorCode::ExtraEntry);
  CHECK(code_of([&] { make_table(SubsetU::empty(u), std::vector<TableEntry>{}); }) == ErrorCode::EmptyCarrier);
  CHECK(code_of([&] { make_table(SubsetU::full(u), {{"1", "9"}, {"2", "1"}}); }) ==
        ErrorCode::UnknownResultLabel);
}

TEST_CASE("laws on the worked anti-group table") {
  const auto& c = ex31_table();
  check_against_oracle(c);

  const auto c2 = evaluate_law(c, Law::C2);
  CHECK(c2.status == Status::Mixed);
  CHECK(c2.true_count == 10);
  CHECK(c2.false_count == 26);
  CHECK(c2.indeterminate_count == 28);
  CHECK(evaluate_instance(c, Law::C2, at({1, 3, 5})) == Truth::True);
  CHECK(evaluate_instance(c, Law::C2, at({2, 3, 5})) == Truth::False);
  CHECK(evaluate_instance(c, Law::C2, at({1, 1, 1})) == Truth::Indeterminate);
  CHECK(evaluate_law(c, Law::C4).status == Status::AllFalse);
  CHECK(evaluate_law(c, Law::C1).true_count == 12);
  CHECK_THROWS_AS(evaluate_instance(c, Law::C2, at({1, 2})), std::invalid_argument);
}

TEST_CASE("trivial group table") {
  const auto t = trivial_group();
  const auto c = classify(t);
  for (auto law : {Law::C1, Law::C2, Law::C3, Law::C4, Law::C5}) CHECK(c[law].status == Status::AllTrue);
  for (auto law : {Law::C6, Law::C7, Law::C10}) CHECK(c[law].status == Status::AllFalse);
  CHECK(c.is_group);
  CHECK_FALSE(c.is_ag4);
  CHECK(format_set(local_neutrals(t, 0)) == "{a}");
}

TEST_CASE("local neutrals") {
  const auto& c = ex31_table();
  CHECK(format_set(local_neutrals(c, 0)) == "{2}");
  CHECK(local_neutrals(c, 4).empty());
  CHECK(format_set(neutral_pool(c)) == "{2}");
  CHECK(code_of([&] { local_neutrals(c, 3); }) == ErrorCode::NotInCarrier);
}

TEST_CASE("classification flags") {
  const auto c = classify(ex31_table());
  CHECK(c.is_ag4);
  CHECK(c.is_strict_ag4);
  CHECK(c.is_anti_group);
  CHECK_FALSE(c.is_group);
  for (auto law : {Law::C1, Law::C3, Law::C5}) CHECK(c[law].status == Status::Mixed);

  const Scenario s = support::example32();
  check_against_oracle(s.table("B"));
  const auto b = classify(s.table("B"));
  CHECK(b.is_ag4);
  CHECK(b[Law::C3].status == Status::AllFalse);
}

TEST_CASE("random tables agree with the brute-force evaluator") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) check_against_oracle(random_table(rng, i % 2 == 0));
}

TEST_CASE("anti-laws mirror their classical counterparts") {
  std::mt19937 rng(11);
  const std::pair<Law, Law> mirrors[] = {{Law::C1, Law::C6}, {Law::C2, Law::C7}, {Law::C5, Law::C10}};
  for (int i = 0; i < 200; ++i) {
    const auto t = random_table(rng, true);
    for (auto [law, anti] : mirrors) {
      const auto a = evaluate_law(t, law);
      const auto b = evaluate_law(t, anti);
      CHECK(a.true_count == b.false_count);
      CHECK(a.false_count == b.true_count);
      CHECK(a.indeterminate_count == b.indeterminate_count);
      if (a.status == Status::AllTrue) CHECK(b.status == Status::AllFalse);
      if (a.status == Status::AllFalse) CHECK(b.status == Status::AllTrue);
    }
    const auto c4 = evaluate_law(t, Law::C4);
    CHECK(evaluate_law(t, Law::C9).holds() == (c4.status == Status::AllFalse));
  }
}

TEST_CASE("empty domains: classical laws hold, anti-laws do not") {
  const auto t = trivial_group();  // no unordered pairs for C5/C10
  CHECK(evaluate_law(t, Law::C5).total() == 0);
  CHECK(evaluate_law(t, Law::C5).status == Status::AllTrue);
  CHECK(evaluate_law(t, Law::C10).status == Status::AllFalse);
}

TEST_CASE("cancellation failures") {
  using W = CancellationWitness;
  const auto& c = ex31_table();
  const auto got = cancellation_failures(c);
  // Right failures x*g = y*g on the worked anti-group table; no left failures exist.
  const std::vector<std::array<int, 3>> right = {{1, 2, 5}, {1, 5, 2}, {2, 1, 3}, {2, 3, 1},
                                                 {3, 1, 5}, {3, 5, 1}, {5, 1, 3}, {5, 3, 1}};
  REQUIRE(got.size() == right.size());
  for (std::size_t i = 0; i < right.size(); ++i) {
    CHECK(got[i].side == W::Side::Right);
    CHECK(got[i] == W{W::Side::Right, at({right[i][0]})[0], at({right[i][1]})[0], at({right[i][2]})[0]});
  }
  // Recheck each entry and the absence of others by brute force.
  const auto g = support::to_table(c);
  std::size_t left = 0, rights = 0;
  for (int a : g.carrier)
    for (int x : g.carrier)
      for (int y : g.carrier) {
        if (x == y) continue;
        if (g.mul(a, x) == g.mul(a, y)) ++left;
        if (g.mul(x, a) == g.mul(y, a)) ++rights;
      }
  CHECK(left == 0);
  CHECK(rights == right.size());

  const Scenario z = support::z4();
  CHECK(cancellation_failures(z.table("Add")).empty());

  auto u = make_universe({"a", "b"});
  const auto constant = make_table(SubsetU::full(u), {{"a", "a"}, {"a", "a"}});
  CHECK(cancellation_failures(constant).size() == 8);
}

TEST_CASE("set products") {
  const auto& c = ex31_table();
  const auto& u = c.universe();
  auto s = [&](std::initializer_list<std::string_view> l) { return SubsetU::from_labels(u, l); };
  CHECK(format_set(set_product(c, s({"1"}), s({"2"}))) == "{1}");
  CHECK(format_set(set_product(c, s({"1"}), s({"1"}))) == "{4}");
  CHECK(set_product(c, s({"1"}), s({"1"}), ProductMode::Restricted).empty());
  CHECK(set_product(c, s({}), s({"1"})).empty());
  CHECK(set_product(c, s({}), s({"1"}), ProductMode::Restricted).empty());
  CHECK(code_of([&] { set_product(c, s({"4"}), s({"1"})); }) == ErrorCode::NotInCarrier);

  // Monotone in both arguments.
  std::mt19937 rng(3);
  const auto g = support::to_table(c);
  for (int i = 0; i < 200; ++i) {
    const auto a = s({}) | SubsetU::from_mask(u, rng() & 0b10111);
    const auto b = SubsetU::from_mask(u, rng() & 0b10111);
    const auto a2 = a | SubsetU::from_mask(u, rng() & 0b10111);
    CHECK(set_product(c, a, b).is_subset_of(set_product(c, a2, b)));
    CHECK(support::to_set(set_product(c, a, b)) == oracle::product(g, support::to_set(a), support::to_set(b)));
  }
}

TEST_CASE("congruence") {
  const Scenario z = support::z4();
  const auto& add = z.table("Add");
  CHECK(is_congruence(z.space("Cosets"), add).holds);
  const auto skew = is_congruence(z.space("Skew"), add);
  REQUIRE_FALSE(skew.holds);
  REQUIRE(skew.witness);
  const auto& sp = z.space("Skew");
  const auto [x, x2, y, y2] = *skew.witness;
  CHECK(sp.equivalent(x, x2));
  CHECK(sp.equivalent(y, y2));
  CHECK_FALSE(sp.equivalent(*add.at(x, y), *add.at(x2, y2)));
  CHECK(is_congruence(identity_space(add.universe()), add).holds);
  const Scenario e = support::example31();
  CHECK(code_of([&] { is_congruence(e.space("P"), e.table("C")); }) == ErrorCode::CarrierNotFull);

  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto u = make_numbered_universe(n);
    std::vector<Cell> cells;
    for (int k = 0; k < n * n; ++k) cells.push_back(static_cast<Index>(rng() % n));
    CHECK(is_congruence(identity_space(u), make_table_from_cells(SubsetU::full(u), cells)).holds);
  }
}

TEST_CASE("product relations on Z4 with coset congruence") {
  const Scenario z = support::z4();
  const auto& add = z.table("Add");
  const auto& space = z.space("Cosets");
  const auto r = check_product_approx_laws(space, add, z.set("X"), z.set("Y"));
  CHECK(r.congruence.holds);
  CHECK(r.relations[0].holds);
  CHECK(r.relations[1].holds);
  CHECK(r.relations[2].holds);
  CHECK(format_set(r.relations[0].lhs) == "{1 3}");
  CHECK(format_set(r.relations[0].rhs) == "{1 3}");
  CHECK(r.relations[2].lhs.empty());

  const auto& u = add.universe();
  const auto all = product_relations(space, add, SubsetU::full(u), SubsetU::full(u));
  CHECK(all[0].holds);
  CHECK(all[1].holds);

  const auto g = support::to_table(add);
  const auto blocks = support::to_blocks(space);
  for (std::uint64_t xm = 1; xm < 16; ++xm) {
    for (std::uint64_t ym = 1; ym < 16; ++ym) {
      const auto ox = oracle::from_mask(xm, 4), oy = oracle::from_mask(ym, 4);
      const auto ux = oracle::upper(blocks, ox, 4), uy = oracle::upper(blocks, oy, 4);
      const auto lx = oracle::lower(blocks, ox, 4), ly = oracle::lower(blocks, oy, 4);
      const auto xy = oracle::product(g, ox, oy);
      const bool a = oracle::subset(oracle::product(g, ux, uy), oracle::upper(blocks, xy, 4));
      const bool b = oracle::subset(oracle::upper(blocks, xy, 4), oracle::product(g, ux, uy));
      const bool c = oracle::subset(oracle::product(g, lx, ly), oracle::lower(blocks, xy, 4));
      CHECK(a);
      CHECK(b);
      CHECK(c);
      const auto rel = product_relations(space, add, SubsetU::from_mask(u, xm), SubsetU::from_mask(u, ym));
      CHECK(rel[0].holds == a);
      CHECK(rel[1].holds == b);
      CHECK(rel[2].holds == c);
    }
  }
  CHECK(code_of([&] { check_product_approx_laws(space, add, SubsetU::empty(u), z.set("Y")); }) ==
        ErrorCode::EmptySubset);
}

TEST_CASE("string forms round-trip") {
  for (auto law : kAllLaws) CHECK(parse_law(to_string(law)) == law);
  for (auto s : {Status::AllTrue, Status::AllFalse, Status::Mixed}) CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_law("C11").has_value());
}
