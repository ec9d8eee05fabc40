#include "ras/approx.hpp"

#include <algorithm>

#include "ras/error.hpp"

namespace ras {

Partition::Partition(UniversePtr universe, std::vector<SubsetU> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  SubsetU covered(universe_);
  for (const auto& block : blocks_) {
    if (!same_universe(block.universe(), universe_)) {
      throw Error(ErrorCode::UniverseMismatch, "block is defined over another universe");
    }
    if (block.empty()) throw Error(ErrorCode::EmptyBlock, "partition blocks must be nonempty");
    if (block.intersects(covered)) {
      Index shared = (block & covered).first();
      throw Error(ErrorCode::Overlap,
                  "element " + universe_->label(shared) + " occurs in two blocks");
    }
    covered = covered | block;
  }
  Index missing = covered.complement().first();
  if (missing != SubsetU::npos) {
    throw Error(ErrorCode::Incomplete, "element " + universe_->label(missing) +
                                           " is not covered by any block");
  }
}

bool operator==(const Partition& a, const Partition& b) {
  if (!same_universe(a.universe_, b.universe_) || a.blocks_.size() != b.blocks_.size()) {
    return false;
  }
  // Block order is irrelevant: compare via each element's block.
  for (const auto& block : a.blocks_) {
    if (std::find(b.blocks_.begin(), b.blocks_.end(), block) == b.blocks_.end()) return false;
  }
  return true;
}

std::string format_partition(const Partition& p) {
  std::vector<const SubsetU*> order;
  for (const auto& b : p.blocks()) order.push_back(&b);
  std::sort(order.begin(), order.end(),
            [](const SubsetU* a, const SubsetU* b) { return a->first() < b->first(); });
  std::string out;
  for (const auto* b : order) out += format_set(*b);
  return out;
}

Partition partition_from_assignment(const UniversePtr& universe,
                                const std::vector<std::size_t>& block_of) {
  if (block_of.size() != universe->size()) {
    throw Error(ErrorCode::Incomplete, "block assignment length differs from universe size");
  }
  std::size_t count = 0;
  for (auto b : block_of) count = std::max(count, b + 1);
  std::vector<SubsetU> blocks(count, SubsetU(universe));
  for (Index i = 0; i < block_of.size(); ++i) blocks[block_of[i]].insert(i);
  std::erase_if(blocks, [](const SubsetU& b) { return b.empty(); });
  return Partition(universe, std::move(blocks));
}

ApproxSpace::ApproxSpace(Partition partition)
    : partition_(std::move(partition)), class_of_(partition_.universe()->size()) {
  const auto& blocks = partition_.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Index i = blocks[b].first(); i != SubsetU::npos; i = blocks[b].next(i)) class_of_[i] = b;
  }
}

ApproxSpace make_space(const UniversePtr& universe, std::vector<SubsetU> blocks) {
  return ApproxSpace(Partition(universe, std::move(blocks)));
}

ApproxSpace identity_space(const UniversePtr& universe) {
  std::vector<SubsetU> blocks;
  for (Index i = 0; i < universe->size(); ++i) blocks.push_back(SubsetU::from_indices(universe, {i}));
  return make_space(universe, std::move(blocks));
}

ApproxSpace total_space(const UniversePtr& universe) {
  return make_space(universe, {SubsetU::full(universe)});
}

const SubsetU& ApproxSpace::equivalence_class(Index x) const {
  if (x >= class_of_.size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(x) + " out of range");
  }
  return partition_.blocks()[class_of_[x]];
}

const SubsetU& ApproxSpace::equivalence_class(std::string_view label) const {
  return equivalence_class(universe()->index(label));
}

void ApproxSpace::require_universe(const SubsetU& x) const {
  if (!same_universe(x.universe(), universe())) {
    throw Error(ErrorCode::UniverseMismatch, "set is not over the space's universe");
  }
}

SubsetU ApproxSpace::lower(const SubsetU& x) const {
  require_universe(x);
  SubsetU out(universe());
  for (const auto& block : partition_.blocks()) {
    if (block.bits().is_subset_of(x.bits())) out = out | block;
  }
  return out;
}

SubsetU ApproxSpace::upper(const SubsetU& x) const {
  require_universe(x);
  SubsetU out(universe());
  for (const auto& block : partition_.blocks()) {
    if (block.bits().intersects(x.bits())) out = out | block;
  }
  return out;
}

ApproxResult ApproxSpace::approximate(const SubsetU& x) const {
  ApproxResult r{lower(x), upper(x), {}, false};
  r.boundary = r.upper - r.lower;
  r.is_rough = !r.boundary.empty();
  return r;
}

std::string to_string(ApproxLaw law) { return "L" + std::to_string(static_cast<int>(law) + 1); }

std::optional<ApproxLaw> parse_approx_law(std::string_view s) {
  for (auto law : kAllApproxLaws) {
    if (to_string(law) == s) return law;
  }
  return std::nullopt;
}

bool LawReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds; });
}

namespace {

// First element separating two sets, if any.
std::optional<Index> diff_witness(const SubsetU& a, const SubsetU& b) {
  Index i = a.first_not_in(b);
  if (i == SubsetU::npos) i = b.first_not_in(a);
  if (i == SubsetU::npos) return std::nullopt;
  return i;
}

std::optional<Index> subset_witness(const SubsetU& a, const SubsetU& b) {
  Index i = a.first_not_in(b);
  if (i == SubsetU::npos) return std::nullopt;
  return i;
}

std::optional<Index> first_of(std::initializer_list<std::optional<Index>> ws) {
  for (const auto& w : ws) {
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

ApproxLawVerdict check_approx_law(const ApproxSpace& space, ApproxLaw law, const SubsetU& x,
                                  const SubsetU& y) {
  const auto& u = space.universe();
  if (!same_universe(x.universe(), u) || !same_universe(y.universe(), u)) {
    throw Error(ErrorCode::UniverseMismatch, "law operands are not over the space's universe");
  }
  std::optional<Index> w;
  switch (law) {
    case ApproxLaw::L1:
      w = first_of({subset_witness(space.lower(x), x), subset_witness(x, space.upper(x))});
      break;
    case ApproxLaw::L2: {
      auto empty = SubsetU::empty(u);
      auto full = SubsetU::full(u);
      w = first_of({diff_witness(space.lower(empty), empty), diff_witness(space.upper(empty), empty),
                    diff_witness(space.lower(full), full), diff_witness(space.upper(full), full)});
      break;
    }
    case ApproxLaw::L3:
      w = subset_witness(space.lower(x) | space.lower(y), space.lower(x | y));
      break;
    case ApproxLaw::L4:
      w = diff_witness(space.lower(x & y), space.lower(x) & space.lower(y));
      break;
    case ApproxLaw::L5:
      w = diff_witness(space.upper(x | y), space.upper(x) | space.upper(y));
      break;
    case ApproxLaw::L6:
      w = subset_witness(space.upper(x & y), space.upper(x) & space.upper(y));
      break;
    case ApproxLaw::L7:
      w = first_of({diff_witness(space.lower(x.complement()), space.upper(x).complement()),
                    diff_witness(space.upper(x.complement()), space.lower(x).complement())});
      break;
    case ApproxLaw::L8: {
      auto lx = space.lower(x);
      w = first_of({diff_witness(space.lower(lx), lx), diff_witness(space.upper(lx), lx)});
      break;
    }
    case ApproxLaw::L9: {
      auto ux = space.upper(x);
      w = first_of({diff_witness(space.upper(ux), ux), diff_witness(space.lower(ux), ux)});
      break;
    }
  }
  return ApproxLawVerdict{law, !w.has_value(), w};
}

LawReport check_approx_laws(const ApproxSpace& space, const SubsetU& x, const SubsetU& y) {
  LawReport report;
  for (std::size_t i = 0; i < kAllApproxLaws.size(); ++i) {
    report.verdicts[i] = check_approx_law(space, kAllApproxLaws[i], x, y);
  }
  return report;
}

}  // namespace ras
