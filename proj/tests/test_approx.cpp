#include <random>

#include "doctest.h"
#include "ras/approx.hpp"
#include "ras/error.hpp"
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

ApproxSpace ex31_space(const UniversePtr& u) {
  return make_space(u, {SubsetU::from_labels(u, {"1", "2", "3"}), SubsetU::from_labels(u, {"4"}),
                        SubsetU::from_labels(u, {"5"}), SubsetU::from_labels(u, {"6"})});
}

}  // namespace

TEST_CASE("universe construction") {
  auto u = make_universe({"1", "2", "3", "4", "5", "6"});
  CHECK(u->size() == 6);
  CHECK(u->index("4") == 3);
  CHECK(make_universe({"a"})->size() == 1);
  CHECK(code_of([] { make_universe({"1", "1", "2"}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { make_universe({}); }) == ErrorCode::EmptyUniverse);
  CHECK(code_of([&] { u->index("7"); }) == ErrorCode::UnknownElement);
}

TEST_CASE("subset operations stay inside one universe") {
  auto u = make_numbered_universe(4);
  auto v = make_numbered_universe(5);
  auto a = SubsetU::from_labels(u, {"1", "2"});
  auto b = SubsetU::from_labels(u, {"2", "3"});
  CHECK(format_set(a | b) == "{1 2 3}");
  CHECK(format_set(a & b) == "{2}");
  CHECK(format_set(a - b) == "{1}");
  CHECK(format_set(a.complement()) == "{3 4}");
  CHECK(SubsetU::from_mask(u, 0b0101) == SubsetU::from_labels(u, {"1", "3"}));
  CHECK(code_of([&] { (void)(a | SubsetU::full(v)); }) == ErrorCode::UniverseMismatch);
  // Equal labels mean the same universe even through different pointers.
  CHECK(a == SubsetU::from_labels(make_numbered_universe(4), {"1", "2"}));
}

TEST_CASE("partition validation") {
  auto u = make_numbered_universe(6);
  CHECK_NOTHROW(ex31_space(u));
  auto literal = [&] {
    make_space(u, {SubsetU::from_labels(u, {"1", "2", "3"}), SubsetU::from_labels(u, {"4"}),
                   SubsetU::from_labels(u, {"5"})});
  };
  CHECK(code_of(literal) == ErrorCode::Incomplete);
  CHECK(code_of([&] {
          make_space(u, {SubsetU::from_labels(u, {"1", "2", "3", "4"}), SubsetU::from_labels(u, {"4", "5", "6"})});
        }) == ErrorCode::Overlap);
  CHECK(code_of([&] { make_space(u, {SubsetU::full(u), SubsetU::empty(u)}); }) == ErrorCode::EmptyBlock);
  auto a = make_universe({"a"});
  CHECK(make_space(a, {SubsetU::full(a)}).partition().size() == 1);
}

TEST_CASE("equivalence classes") {
  auto u = make_numbered_universe(6);
  auto s = ex31_space(u);
  CHECK(format_set(s.equivalence_class("2")) == "{1 2 3}");
  CHECK(format_set(s.equivalence_class("4")) == "{4}");
  CHECK(code_of([&] { s.equivalence_class("9"); }) == ErrorCode::UnknownElement);
  auto id = identity_space(u);
  for (Index i = 0; i < 6; ++i) CHECK(id.equivalence_class(i).count() == 1);
  CHECK(format_partition(s.partition()) == "{1 2 3}{4}{5}{6}");
}

TEST_CASE("approximations of the worked examples") {
  auto u = make_numbered_universe(6);
  auto s = ex31_space(u);
  auto a = s.approximate(SubsetU::from_labels(u, {"1", "2", "5"}));
  CHECK(format_set(a.lower) == "{5}");
  CHECK(format_set(a.upper) == "{1 2 3 5}");
  CHECK(format_set(a.boundary) == "{1 2 3}");
  CHECK(a.is_rough);
  CHECK(format_set(s.upper(SubsetU::from_labels(u, {"2", "3", "5"}))) == "{1 2 3 5}");
  auto e = s.approximate(SubsetU::empty(u));
  CHECK(e.lower.empty());
  CHECK(e.upper.empty());
  CHECK_FALSE(e.is_rough);
  CHECK(code_of([&] { s.upper(SubsetU::full(make_numbered_universe(3))); }) == ErrorCode::UniverseMismatch);
}

TEST_CASE("law check on the worked example and on the full set") {
  auto u = make_numbered_universe(6);
  auto s = ex31_space(u);
  auto r = check_approx_laws(s, SubsetU::from_labels(u, {"1", "2", "5"}), SubsetU::from_labels(u, {"2", "3", "5"}));
  CHECK(r.all_hold());
  auto full = check_approx_laws(total_space(u), SubsetU::full(u), SubsetU::full(u));
  CHECK(full.all_hold());
  for (auto law : kAllApproxLaws) CHECK(parse_approx_law(to_string(law)) == law);
}

TEST_CASE("engine matches the per-definition oracle on random instances") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto u = make_numbered_universe(n);
    std::vector<std::size_t> block_of(n);
    for (int i = 0; i < n; ++i) block_of[i] = rng() % n;
    auto space = ApproxSpace(partition_from_assignment(u, block_of));
    const auto mask = rng() & ((1u << n) - 1);
    const auto x = SubsetU::from_mask(u, mask);
    const auto blocks = support::to_blocks(space);
    const auto ox = oracle::from_mask(mask, n);
    CHECK(support::to_set(space.lower(x)) == oracle::lower(blocks, ox, n));
    CHECK(support::to_set(space.upper(x)) == oracle::upper(blocks, ox, n));
  }
}

TEST_CASE("properties over every space up to four elements") {
  for (int n = 1; n <= 4; ++n) {
    auto u = make_numbered_universe(n);
    for (const auto& blocks : oracle::partitions(n)) {
      auto s = support::to_space(u, blocks);
      for (std::uint64_t xm = 0; xm < (1u << n); ++xm) {
        const auto x = SubsetU::from_mask(u, xm);
        // Duality and idempotence.
        CHECK(s.lower(x.complement()) == s.upper(x).complement());
        CHECK(s.upper(s.upper(x)) == s.upper(x));
        CHECK(s.lower(s.lower(x)) == s.lower(x));
        for (std::uint64_t ym = 0; ym < (1u << n); ++ym) {
          const auto y = SubsetU::from_mask(u, ym);
          if (x.is_subset_of(y)) {
            CHECK(s.lower(x).is_subset_of(s.lower(y)));
            CHECK(s.upper(x).is_subset_of(s.upper(y)));
          }
        }
      }
    }
  }
}

TEST_CASE("relabeling the universe does not change approximations") {
  const int n = 4;
  auto u = make_numbered_universe(n);
  std::vector<int> perm = {0, 1, 2, 3};
  auto apply = [&](const oracle::Set& s) {
    oracle::Set r;
    for (int x : s) r.insert(perm[x]);
    return r;
  };
  do {
    for (const auto& blocks : oracle::partitions(n)) {
      oracle::Blocks moved;
      for (const auto& b : blocks) moved.push_back(apply(b));
      auto s = support::to_space(u, blocks);
      auto t = support::to_space(u, moved);
      for (std::uint64_t m = 0; m < (1u << n); ++m) {
        const auto x = oracle::from_mask(m, n);
        const auto px = support::to_subset(u, apply(x));
        CHECK(support::to_set(t.upper(px)) == apply(support::to_set(s.upper(support::to_subset(u, x)))));
        CHECK(support::to_set(t.lower(px)) == apply(support::to_set(s.lower(support::to_subset(u, x)))));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}
