#include "ras/universe.hpp"

#include <sstream>

#include "ras/error.hpp"

namespace ras {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  lookup_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (!lookup_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels_[i] + "' appears twice");
    }
  }
}

Index Universe::index(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) {
    throw Error(ErrorCode::UnknownElement, "'" + std::string(label) + "' is not in the universe");
  }
  return it->second;
}

bool Universe::contains(std::string_view label) const {
  return lookup_.contains(std::string(label));
}

UniversePtr make_universe(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorCode::EmptyUniverse, "a universe needs at least one label");
  return UniversePtr(new Universe(std::move(labels)));
}

UniversePtr make_numbered_universe(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make_universe(std::move(labels));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SubsetU::SubsetU(UniversePtr universe)
    : universe_(std::move(universe)), bits_(universe_ ? universe_->size() : 0) {}

SubsetU::SubsetU(UniversePtr universe, Bits bits)
    : universe_(std::move(universe)), bits_(std::move(bits)) {
  bits_.resize(universe_ ? universe_->size() : 0);
}

SubsetU SubsetU::full(const UniversePtr& u) {
  SubsetU s(u);
  s.bits_.set();
  return s;
}

SubsetU SubsetU::from_indices(const UniversePtr& u, std::span<const Index> indices) {
  SubsetU s(u);
  for (Index i : indices) s.insert(i);
  return s;
}

SubsetU SubsetU::from_indices(const UniversePtr& u, std::initializer_list<Index> indices) {
  return from_indices(u, std::span<const Index>(indices.begin(), indices.size()));
}

SubsetU SubsetU::from_labels(const UniversePtr& u, std::span<const std::string> labels) {
  SubsetU s(u);
  for (const auto& l : labels) s.insert(u->index(l));
  return s;
}

SubsetU SubsetU::from_labels(const UniversePtr& u, std::initializer_list<std::string_view> labels) {
  SubsetU s(u);
  for (auto l : labels) s.insert(u->index(l));
  return s;
}

SubsetU SubsetU::from_mask(const UniversePtr& u, unsigned long long mask) {
  SubsetU s(u);
  for (Index i = 0; i < s.bits_.size() && i < 64; ++i) {
    if (mask & (1ULL << i)) s.bits_.set(i);
  }
  return s;
}

std::vector<Index> SubsetU::indices() const {
  std::vector<Index> out;
  out.reserve(count());
  for (Index i = first(); i != npos; i = next(i)) out.push_back(i);
  return out;
}

std::vector<std::string> SubsetU::labels() const {
  std::vector<std::string> out;
  for (Index i = first(); i != npos; i = next(i)) out.push_back(universe_->label(i));
  return out;
}

SubsetU& SubsetU::insert(Index i) {
  if (i >= bits_.size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(i) + " out of range");
  }
  bits_.set(i);
  return *this;
}

SubsetU& SubsetU::erase(Index i) {
  if (i < bits_.size()) bits_.reset(i);
  return *this;
}

void SubsetU::require_same(const SubsetU& other) const {
  if (!same_universe(universe_, other.universe_)) {
    throw Error(ErrorCode::UniverseMismatch, "operands live in different universes");
  }
}

bool SubsetU::is_subset_of(const SubsetU& other) const {
  require_same(other);
  return bits_.is_subset_of(other.bits_);
}

bool SubsetU::intersects(const SubsetU& other) const {
  require_same(other);
  return bits_.intersects(other.bits_);
}

SubsetU SubsetU::operator|(const SubsetU& other) const {
  require_same(other);
  return SubsetU(universe_, bits_ | other.bits_);
}

SubsetU SubsetU::operator&(const SubsetU& other) const {
  require_same(other);
  return SubsetU(universe_, bits_ & other.bits_);
}

SubsetU SubsetU::operator-(const SubsetU& other) const {
  require_same(other);
  return SubsetU(universe_, bits_ - other.bits_);
}

SubsetU SubsetU::complement() const { return SubsetU(universe_, ~bits_); }

Index SubsetU::first_not_in(const SubsetU& other) const {
  require_same(other);
  return (bits_ - other.bits_).find_first();
}

bool operator==(const SubsetU& a, const SubsetU& b) {
  return same_universe(a.universe_, b.universe_) && a.bits_ == b.bits_;
}

std::string format_set(const SubsetU& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Index i = s.first(); i != SubsetU::npos; i = s.next(i)) {
    if (!first) os << ' ';
    os << s.universe()->label(i);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace ras
