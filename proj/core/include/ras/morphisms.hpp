#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ras/algebra.hpp"
#include "ras/approx.hpp"

namespace ras {

/// Total map from `domain` (over U1) into the universe of `target` (U2).
class Mapping {
 public:
  const SubsetU& domain() const noexcept { return domain_; }
  const SubsetU& target() const noexcept { return target_; }
  const UniversePtr& codomain() const noexcept { return target_.universe(); }

  /// Throws DomainMismatch for x outside the domain.
  Index operator()(Index x) const;
  std::optional<Index> apply(Index x) const;

  SubsetU image() const;
  bool surjective() const { return target_.is_subset_of(image()); }
  bool surjective_onto(const SubsetU& s) const { return s.is_subset_of(image()); }

  /// Values in domain order.
  std::vector<Index> values() const;

  friend bool operator==(const Mapping& a, const Mapping& b) {
    return a.domain_ == b.domain_ && a.target_ == b.target_ && a.graph_ == b.graph_;
  }

 private:
  friend Mapping make_mapping(const SubsetU&, const SubsetU&,
                              std::span<const std::pair<Index, Index>>);

  SubsetU domain_;
  SubsetU target_;
  std::vector<std::optional<Index>> graph_;  // indexed by U1 element
};

/// Throws MissingPair, DuplicatePair, UnknownCodomainLabel, DomainMismatch, EmptySet.
Mapping make_mapping(const SubsetU& domain, const SubsetU& target,
                     std::span<const std::pair<Index, Index>> pairs);
Mapping make_mapping(const SubsetU& domain, const SubsetU& target,
                     const std::vector<std::pair<std::string, std::string>>& pairs);

/// Values listed in domain order.
Mapping make_mapping_from_values(const SubsetU& domain, const SubsetU& target,
                                 std::span<const Index> values);

Mapping identity_mapping(const SubsetU& domain);

enum class MorphismKind {
  AntiGroupHom,  // φ(x*y) ≠ φ(x)∘φ(y) on every resolvable pair
  Hom,           // φ(x*y) = φ(x)∘φ(y)
  AntiHom,       // φ(x*y) = φ(y)∘φ(x)
  RoughHom,      // Hom between upper approximations, surjective
  RoughAntiHom,  // AntiHom between upper approximations, surjective
};

std::string to_string(MorphismKind k);
std::optional<MorphismKind> parse_morphism_kind(std::string_view s);

struct MorphismReport {
  MorphismKind kind = MorphismKind::Hom;
  std::size_t pairs = 0;
  std::size_t preserved = 0;  // φ(x*y) = φ(x)∘φ(y)
  std::size_t reversed = 0;   // φ(x*y) = φ(y)∘φ(x)
  std::size_t violated = 0;   // resolvable pairs breaking the kind's equation
  std::size_t indeterminate = 0;
  std::optional<std::pair<Index, Index>> violation_witness;
  bool surjective = false;
  SubsetU kernel;
  SubsetU image;
  bool overall = false;
};

/// {x in domain : φ(x) is a local neutral of some element of tableB}.
/// Throws CarrierMismatch.
SubsetU kernel(const Mapping& phi, const OpTable& table_b);

/// Throws CarrierMismatch.
MorphismReport check_anti_group_hom(const Mapping& phi, const OpTable& table_c,
                                    const OpTable& table_b);

/// Plain Hom / AntiHom on the tables' carriers. Surjectivity is reported
/// onto phi.target() but does not affect `overall`.
MorphismReport check_hom(const Mapping& phi, const OpTable& table_a, const OpTable& table_b,
                         MorphismKind kind);

/// Throws DomainNotUpper, CarrierMismatch, UniverseMismatch.
MorphismReport check_rough_hom(const ApproxSpace& space_a, const ApproxSpace& space_b,
                               const Mapping& phi, const OpTable& table_a, const OpTable& table_b,
                               MorphismKind kind);

/// (outer ∘ inner)(x) = outer(inner(x)). Throws DomainMismatch.
Mapping compose(const Mapping& outer, const Mapping& inner);

enum class CompositionProp {
  AntiAfterHom,      // φ1 anti-hom, φ2 hom  ⇒  φ1φ2 anti-hom
  AntiAfterAntiHom,  // φ1, φ2 anti-hom      ⇒  φ1φ2 hom
};

struct CompositionCandidate {
  Mapping outer;  // φ1
  Mapping inner;  // φ2
};

struct CompositionCounterexample {
  std::size_t candidate;
  std::pair<Index, Index> pair;
};

struct CompositionReport {
  CompositionProp prop = CompositionProp::AntiAfterHom;
  std::size_t examined = 0;
  std::size_t qualifying = 0;
  std::size_t confirmed = 0;
  std::vector<CompositionCounterexample> counterexamples;
};

/// Kinds are judged per pair on resolvable products of `table` (maps are
/// endomaps of its carrier); non-qualifying candidates are skipped.
CompositionReport verify_composition_props(const OpTable& table, CompositionProp prop,
                                           std::span<const CompositionCandidate> candidates);

}  // namespace ras
