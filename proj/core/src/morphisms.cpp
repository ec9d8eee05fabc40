#include "ras/morphisms.hpp"

#include "ras/error.hpp"

namespace ras {

Index Mapping::operator()(Index x) const {
  auto v = apply(x);
  if (!v) throw Error(ErrorCode::DomainMismatch, "element is outside the mapping's domain");
  return *v;
}

std::optional<Index> Mapping::apply(Index x) const {
  if (x >= graph_.size()) return std::nullopt;
  return graph_[x];
}

SubsetU Mapping::image() const {
  SubsetU out(codomain());
  for (const auto& v : graph_) {
    if (v) out.insert(*v);
  }
  return out;
}

std::vector<Index> Mapping::values() const {
  std::vector<Index> out;
  for (Index x = domain_.first(); x != SubsetU::npos; x = domain_.next(x)) out.push_back(*graph_[x]);
  return out;
}

Mapping make_mapping(const SubsetU& domain, const SubsetU& target,
                     std::span<const std::pair<Index, Index>> pairs) {
  if (!domain.universe() || !target.universe()) {
    throw Error(ErrorCode::EmptySet, "mapping needs a domain and a target universe");
  }
  Mapping m;
  m.domain_ = domain;
  m.target_ = target;
  m.graph_.assign(domain.universe()->size(), std::nullopt);
  const auto& u1 = *domain.universe();
  for (const auto& [from, to] : pairs) {
    if (!domain.contains(from)) {
      throw Error(ErrorCode::DomainMismatch, "pair source is outside the domain");
    }
    if (to >= target.universe()->size()) {
      throw Error(ErrorCode::UnknownCodomainLabel, "pair value is outside the codomain universe");
    }
    if (m.graph_[from]) {
      throw Error(ErrorCode::DuplicatePair, "element " + u1.label(from) + " is mapped twice");
    }
    m.graph_[from] = to;
  }
  for (Index x = domain.first(); x != SubsetU::npos; x = domain.next(x)) {
    if (!m.graph_[x]) throw Error(ErrorCode::MissingPair, "element " + u1.label(x) + " has no image");
  }
  return m;
}

Mapping make_mapping(const SubsetU& domain, const SubsetU& target,
                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<Index, Index>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (!domain.universe()->contains(a)) {
      throw Error(ErrorCode::DomainMismatch, "'" + a + "' is not in the domain universe");
    }
    if (!target.universe()->contains(b)) {
      throw Error(ErrorCode::UnknownCodomainLabel, "'" + b + "' is not in the codomain universe");
    }
    idx.emplace_back(domain.universe()->index(a), target.universe()->index(b));
  }
  return make_mapping(domain, target, idx);
}

Mapping make_mapping_from_values(const SubsetU& domain, const SubsetU& target,
                                 std::span<const Index> values) {
  std::vector<std::pair<Index, Index>> pairs;
  std::size_t i = 0;
  for (Index x = domain.first(); x != SubsetU::npos && i < values.size(); x = domain.next(x)) {
    pairs.emplace_back(x, values[i++]);
  }
  return make_mapping(domain, target, pairs);
}

Mapping identity_mapping(const SubsetU& domain) {
  const auto idx = domain.indices();
  return make_mapping_from_values(domain, domain, idx);
}

std::string to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::AntiGroupHom: return "anti-group-hom";
    case MorphismKind::Hom: return "hom";
    case MorphismKind::AntiHom: return "anti-hom";
    case MorphismKind::RoughHom: return "rough-hom";
    case MorphismKind::RoughAntiHom: return "rough-anti-hom";
  }
  return "?";
}

std::optional<MorphismKind> parse_morphism_kind(std::string_view s) {
  for (auto k : {MorphismKind::AntiGroupHom, MorphismKind::Hom, MorphismKind::AntiHom,
                 MorphismKind::RoughHom, MorphismKind::RoughAntiHom}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

void require_values_in(const Mapping& phi, const SubsetU& allowed, const char* what) {
  if (!same_universe(phi.codomain(), allowed.universe()) || !phi.image().is_subset_of(allowed)) {
    throw Error(ErrorCode::CarrierMismatch, std::string("mapping values must lie in ") + what);
  }
}

// Per-pair scan shared by every kind.
MorphismReport scan_pairs(const Mapping& phi, const OpTable& a, const OpTable& b,
                          MorphismKind kind) {
  MorphismReport r;
  r.kind = kind;
  r.image = phi.image();
  r.surjective = phi.surjective();
  r.kernel = SubsetU(phi.domain().universe());
  const auto dom = phi.domain().indices();
  for (Index x : dom) {
    for (Index y : dom) {
      ++r.pairs;
      std::optional<Index> lhs;
      if (Cell xy = a.lookup(x, y); xy && phi.domain().contains(*xy)) lhs = phi(*xy);
      const Index fx = phi(x);
      const Index fy = phi(y);
      Cell fwd = b.lookup(fx, fy);
      Cell rev = b.lookup(fy, fx);
      const bool preserved = lhs && fwd && *lhs == *fwd;
      const bool reversed = lhs && rev && *lhs == *rev;
      r.preserved += preserved;
      r.reversed += reversed;

      bool resolvable = false;
      bool ok = true;
      switch (kind) {
        case MorphismKind::AntiGroupHom:
          resolvable = lhs && fwd;
          ok = !preserved;
          break;
        case MorphismKind::Hom:
        case MorphismKind::RoughHom:
          resolvable = lhs && fwd;
          ok = preserved;
          break;
        case MorphismKind::AntiHom:
        case MorphismKind::RoughAntiHom:
          resolvable = lhs && rev;
          ok = reversed;
          break;
      }
      if (!resolvable) {
        ++r.indeterminate;
      } else if (!ok) {
        if (r.violated++ == 0) r.violation_witness = std::pair{x, y};
      }
    }
  }
  r.overall = r.violated == 0;
  return r;
}

}  // namespace

SubsetU kernel(const Mapping& phi, const OpTable& table_b) {
  require_values_in(phi, table_b.carrier(), "the codomain table's carrier");
  const SubsetU pool = neutral_pool(table_b);
  SubsetU out(phi.domain().universe());
  for (Index x = phi.domain().first(); x != SubsetU::npos; x = phi.domain().next(x)) {
    if (pool.contains(phi(x))) out.insert(x);
  }
  return out;
}

MorphismReport check_anti_group_hom(const Mapping& phi, const OpTable& table_c,
                                    const OpTable& table_b) {
  if (!same_universe(phi.domain().universe(), table_c.universe()) ||
      !phi.domain().is_subset_of(table_c.carrier())) {
    throw Error(ErrorCode::CarrierMismatch, "mapping domain must lie in the source carrier");
  }
  require_values_in(phi, table_b.carrier(), "the target carrier");
  MorphismReport r = scan_pairs(phi, table_c, table_b, MorphismKind::AntiGroupHom);
  r.kernel = kernel(phi, table_b);
  return r;
}

MorphismReport check_hom(const Mapping& phi, const OpTable& table_a, const OpTable& table_b,
                         MorphismKind kind) {
  if (kind != MorphismKind::Hom && kind != MorphismKind::AntiHom) {
    throw Error(ErrorCode::CarrierMismatch, "check_hom handles hom and anti-hom only");
  }
  if (!same_universe(phi.domain().universe(), table_a.universe()) ||
      !same_universe(phi.codomain(), table_b.universe())) {
    throw Error(ErrorCode::UniverseMismatch, "mapping and tables use different universes");
  }
  MorphismReport r = scan_pairs(phi, table_a, table_b, kind);
  if (phi.image().is_subset_of(table_b.carrier())) r.kernel = kernel(phi, table_b);
  return r;
}

MorphismReport check_rough_hom(const ApproxSpace& space_a, const ApproxSpace& space_b,
                               const Mapping& phi, const OpTable& table_a, const OpTable& table_b,
                               MorphismKind kind) {
  if (kind != MorphismKind::RoughHom && kind != MorphismKind::RoughAntiHom) {
    throw Error(ErrorCode::CarrierMismatch, "check_rough_hom handles rough kinds only");
  }
  if (!same_universe(space_a.universe(), table_a.universe()) ||
      !same_universe(space_b.universe(), table_b.universe()) ||
      !same_universe(phi.domain().universe(), table_a.universe())) {
    throw Error(ErrorCode::UniverseMismatch, "spaces, tables and mapping disagree on universes");
  }
  const SubsetU upper_a = space_a.upper(table_a.carrier());
  const SubsetU upper_b = space_b.upper(table_b.carrier());
  if (!(phi.domain() == upper_a)) {
    throw Error(ErrorCode::DomainNotUpper, "mapping domain must equal the upper approximation " +
                                               format_set(upper_a));
  }
  require_values_in(phi, upper_b, "the target upper approximation");
  MorphismReport r = scan_pairs(phi, table_a, table_b, kind);
  r.surjective = phi.surjective_onto(upper_b);
  r.overall = r.surjective && r.violated == 0;
  if (phi.image().is_subset_of(table_b.carrier())) {
    r.kernel = kernel(phi, table_b);
  }
  return r;
}

Mapping compose(const Mapping& outer, const Mapping& inner) {
  if (!same_universe(inner.codomain(), outer.domain().universe()) ||
      !inner.image().is_subset_of(outer.domain())) {
    throw Error(ErrorCode::DomainMismatch, "inner image must lie in the outer domain");
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (Index x = inner.domain().first(); x != SubsetU::npos; x = inner.domain().next(x)) {
    pairs.emplace_back(x, outer(inner(x)));
  }
  return make_mapping(inner.domain(), outer.target(), pairs);
}

CompositionReport verify_composition_props(const OpTable& table, CompositionProp prop,
                                           std::span<const CompositionCandidate> candidates) {
  CompositionReport r;
  r.prop = prop;
  const MorphismKind inner_kind =
      prop == CompositionProp::AntiAfterHom ? MorphismKind::Hom : MorphismKind::AntiHom;
  const MorphismKind expected =
      prop == CompositionProp::AntiAfterHom ? MorphismKind::AntiHom : MorphismKind::Hom;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    ++r.examined;
    if (!check_hom(c.outer, table, table, MorphismKind::AntiHom).overall) continue;
    if (!check_hom(c.inner, table, table, inner_kind).overall) continue;
    ++r.qualifying;
    const MorphismReport composite = check_hom(compose(c.outer, c.inner), table, table, expected);
    if (composite.overall) {
      ++r.confirmed;
    } else {
      r.counterexamples.push_back({i, *composite.violation_witness});
    }
  }
  return r;
}

}  // namespace ras
