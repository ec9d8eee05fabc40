#include "ras/reports.hpp"

#include <sstream>

namespace ras::cli {

using Json = nlohmann::ordered_json;

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string tuple_text(const UniversePtr& u, const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + u->label(w[i]);
  return s + ")";
}

Json tuple_json(const UniversePtr& u, const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json arr = Json::array();
  for (Index i : *w) arr.push_back(u->label(i));
  return arr;
}

Json optional_label(const UniversePtr& u, std::optional<Index> i) {
  if (!i) return nullptr;
  return u->label(*i);
}

std::string cell_text(const UniversePtr& u, Cell c) { return c ? u->label(*c) : std::string("?"); }

Json closure_json(const UniversePtr& u, const ClosureCondition& c) {
  Json failures = Json::array();
  for (const auto& f : c.failures) {
    failures.push_back({{"x", u->label(f.x)}, {"y", u->label(f.y)},
                        {"result", f.result ? Json(u->label(*f.result)) : Json("?")}});
  }
  return {{"holds", c.holds}, {"failures", failures}};
}

std::string closure_text(const UniversePtr& u, const ClosureCondition& c) {
  std::ostringstream os;
  os << (c.holds ? "holds" : "fails");
  if (!c.holds) {
    os << "; witnesses";
    for (const auto& f : c.failures) {
      os << " (" << u->label(f.x) << ',' << u->label(f.y) << ")->" << cell_text(u, f.result);
    }
  }
  return os.str();
}

std::string flags_text(const Classification& c) {
  std::ostringstream os;
  os << "semigroup=" << yes_no(c.is_semigroup) << " group=" << yes_no(c.is_group)
     << " commutative-group=" << yes_no(c.is_commutative_group)
     << " anti-group=" << yes_no(c.is_anti_group) << " anti-abelian=" << yes_no(c.is_anti_abelian)
     << " ag4=" << yes_no(c.is_ag4) << " strict-ag4=" << yes_no(c.is_strict_ag4);
  return os.str();
}

Json flags_json(const Classification& c) {
  return {{"semigroup", c.is_semigroup},         {"group", c.is_group},
          {"commutative_group", c.is_commutative_group}, {"anti_group", c.is_anti_group},
          {"anti_abelian", c.is_anti_abelian},   {"ag4", c.is_ag4},
          {"strict_ag4", c.is_strict_ag4}};
}

Json verdicts_json(const UniversePtr& u, const Classification& c) {
  Json arr = Json::array();
  for (const auto& v : c.verdicts) {
    arr.push_back({{"law", to_string(v.law)},
                   {"status", to_string(v.status)},
                   {"true", v.true_count},
                   {"false", v.false_count},
                   {"indeterminate", v.indeterminate_count},
                   {"true_witness", tuple_json(u, v.true_witness)},
                   {"false_witness", tuple_json(u, v.false_witness)},
                   {"indeterminate_witness", tuple_json(u, v.indeterminate_witness)}});
  }
  return arr;
}

std::string verdicts_text(const UniversePtr& u, const Classification& c) {
  std::ostringstream os;
  for (const auto& v : c.verdicts) {
    std::string law = to_string(v.law);
    law.resize(4, ' ');
    std::string status = to_string(v.status);
    status.resize(9, ' ');
    os << law << status << "true=" << v.true_count << " false=" << v.false_count
       << " indeterminate=" << v.indeterminate_count;
    if (v.true_witness) os << "  true:" << tuple_text(u, *v.true_witness);
    if (v.false_witness) os << "  false:" << tuple_text(u, *v.false_witness);
    if (v.indeterminate_witness) os << "  indeterminate:" << tuple_text(u, *v.indeterminate_witness);
    os << '\n';
  }
  return os.str();
}

}  // namespace

Json labels_json(const SubsetU& s) {
  Json arr = Json::array();
  for (const auto& l : s.labels()) arr.push_back(l);
  return arr;
}

Report parse_report(const std::string& file, const Scenario& s) {
  Report r;
  r.json = {{"kind", "parse"},
            {"file", file},
            {"valid", true},
            {"universes", s.universes.size()},
            {"partitions", s.partitions.size()},
            {"sets", s.sets.size()},
            {"tables", s.tables.size()},
            {"maps", s.maps.size()}};
  std::ostringstream os;
  os << file << ": ok (" << s.universes.size() << " universes, " << s.partitions.size()
     << " partitions, " << s.sets.size() << " sets, " << s.tables.size() << " tables, "
     << s.maps.size() << " maps)\n";
  r.text = os.str();
  return r;
}

Report approx_report(const std::string& space_name, const std::string& set_name,
                     const ApproxSpace& space, const SubsetU& set) {
  const ApproxResult a = space.approximate(set);
  const auto published = published_upper(space, set);
  Report r;
  Json note = nullptr;
  std::ostringstream os;
  os << "space " << space_name << " = " << format_partition(space.partition()) << '\n'
     << "set " << set_name << " = " << format_set(set) << '\n'
     << "lower = " << format_set(a.lower) << '\n'
     << "upper = " << format_set(a.upper) << '\n'
     << "boundary = " << format_set(a.boundary) << '\n'
     << "rough = " << yes_no(a.is_rough) << '\n';
  if (published) {
    const bool same = published->value == format_set(a.upper);
    std::string text = "published upper approximation " + published->value + " (" + published->id +
                       ", " + published->citation + ") " + (same ? "matches" : "differs");
    os << "note: " << text << '\n';
    note = {{"id", published->id}, {"published_upper", published->value}, {"matches", same}};
  }
  r.text = os.str();
  r.json = {{"kind", "approx"},
            {"space", space_name},
            {"set", set_name},
            {"members", labels_json(set)},
            {"lower", labels_json(a.lower)},
            {"upper", labels_json(a.upper)},
            {"boundary", labels_json(a.boundary)},
            {"rough", a.is_rough},
            {"audit_note", note}};
  return r;
}

Report classify_report(const std::string& table_name, const OpTable& table) {
  const Classification c = classify(table);
  const auto& u = table.universe();
  Report r;
  r.text = "table " + table_name + " on carrier " + format_set(table.carrier()) + '\n' +
           verdicts_text(u, c) + "flags: " + flags_text(c) + '\n';
  r.json = {{"kind", "classify"},
            {"table", table_name},
            {"carrier", labels_json(table.carrier())},
            {"verdicts", verdicts_json(u, c)},
            {"flags", flags_json(c)}};
  return r;
}

Report rough_semigroup_report(const std::string& table_name, const OpTable& table,
                              const RoughStructVerdict& v) {
  const auto& u = table.universe();
  const Classification c = classify(table);
  const auto& a = *v.condition2;
  Report r;
  r.ok = v.overall;
  std::ostringstream os;
  os << "table " << table_name << " on carrier " << format_set(table.carrier()) << '\n'
     << "upper = " << format_set(v.upper_used) << '\n'
     << "condition1 (products land in upper): " << closure_text(u, v.condition1) << '\n'
     << "condition2 (associativity inside upper): " << (a.holds ? "holds" : "fails") << "; true="
     << a.true_count << " false=" << a.false_count << " indeterminate=" << a.indeterminate_count;
  if (a.false_witness) os << " false:" << tuple_text(u, *a.false_witness);
  os << '\n'
     << "overall = " << yes_no(v.overall) << '\n'
     << "classification: " << flags_text(c) << '\n';
  r.text = os.str();
  r.json = {{"kind", "rough-semigroup"},
            {"table", table_name},
            {"carrier", labels_json(table.carrier())},
            {"upper", labels_json(v.upper_used)},
            {"condition1", closure_json(u, v.condition1)},
            {"condition2",
             {{"holds", a.holds},
              {"true", a.true_count},
              {"false", a.false_count},
              {"indeterminate", a.indeterminate_count},
              {"false_witness", tuple_json(u, a.false_witness)}}},
            {"overall", v.overall},
            {"flags", flags_json(c)}};
  return r;
}

Report rough_subsemigroup_report(const std::string& table_name, const std::string& subset_name,
                                 const OpTable& table, const RoughStructVerdict& v) {
  const auto& u = table.universe();
  Report r;
  r.ok = v.overall;
  std::ostringstream os;
  os << "table " << table_name << ", subset " << subset_name << '\n'
     << "upper = " << format_set(v.upper_used) << '\n'
     << "closure (HH in upper(H)): " << closure_text(u, v.condition1) << '\n'
     << "overall = " << yes_no(v.overall) << '\n';
  r.text = os.str();
  r.json = {{"kind", "rough-subsemigroup"},
            {"table", table_name},
            {"subset", subset_name},
            {"upper", labels_json(v.upper_used)},
            {"condition1", closure_json(u, v.condition1)},
            {"overall", v.overall}};
  return r;
}

Report morphism_report(const std::string& map_name, const Mapping& phi, const MorphismReport& m) {
  const auto& u1 = phi.domain().universe();
  Report r;
  r.ok = m.overall;
  std::ostringstream os;
  os << "map " << map_name << " kind " << to_string(m.kind) << '\n'
     << "pairs=" << m.pairs << " preserved=" << m.preserved << " reversed=" << m.reversed
     << " violated=" << m.violated << " indeterminate=" << m.indeterminate << '\n';
  if (m.violation_witness) {
    os << "first violation: (" << u1->label(m.violation_witness->first) << ','
       << u1->label(m.violation_witness->second) << ")\n";
  }
  os << "surjective = " << yes_no(m.surjective) << '\n'
     << "image = " << format_set(m.image) << '\n'
     << "kernel = " << format_set(m.kernel) << '\n'
     << "overall = " << yes_no(m.overall) << '\n';
  r.text = os.str();
  Json witness = nullptr;
  if (m.violation_witness) {
    witness = Json::array({u1->label(m.violation_witness->first), u1->label(m.violation_witness->second)});
  }
  r.json = {{"kind", "morphism"},
            {"map", map_name},
            {"morphism_kind", to_string(m.kind)},
            {"pairs", m.pairs},
            {"preserved", m.preserved},
            {"reversed", m.reversed},
            {"violated", m.violated},
            {"indeterminate", m.indeterminate},
            {"violation_witness", witness},
            {"surjective", m.surjective},
            {"image", labels_json(m.image)},
            {"kernel", labels_json(m.kernel)},
            {"overall", m.overall}};
  return r;
}

Report laws_report(const std::vector<LawsEntry>& entries) {
  Report r;
  Json lines = Json::array();
  std::ostringstream os;
  for (const auto& e : entries) {
    const auto& l = e.line;
    os << l.id << ": " << l.failures << " failures / " << l.instances << " instances checked (n <= "
       << l.max_n << ")";
    if (!l.theorem) os << (l.failures ? " [claim refuted]" : " [claim not refuted]");
    os << "  " << l.description << '\n';
    if (l.first_failure) os << "  first failure: " << *l.first_failure << '\n';
    if (e.counterexample) os << "  minimal counterexample: " << *e.counterexample << '\n';
    if (l.theorem && l.failures > 0) r.ok = false;
    lines.push_back({{"id", l.id},
                     {"description", l.description},
                     {"theorem", l.theorem},
                     {"instances", l.instances},
                     {"failures", l.failures},
                     {"max_n", l.max_n},
                     {"first_failure", l.first_failure ? Json(*l.first_failure) : Json(nullptr)},
                     {"counterexample", e.counterexample ? Json(*e.counterexample) : Json(nullptr)}});
  }
  r.text = os.str();
  r.json = {{"kind", "laws"}, {"lines", lines}, {"ok", r.ok}};
  return r;
}

Report search_report(const SearchSpec& spec, const SearchResult& res) {
  Report r;
  std::ostringstream os;
  os << "search: universe " << spec.universe_size << ", carrier " << spec.carrier_size
     << (spec.allow_indet ? ", with INDET" : "") << '\n'
     << "examined " << res.examined << " of " << res.space_size << " candidates; "
     << res.matches.size() << " matches";
  if (res.limit_reached) os << "; limit reached";
  if (res.budget_exhausted) os << "; budget exhausted";
  os << '\n';
  Json matches = Json::array();
  std::size_t i = 0;
  for (const auto& m : res.matches) {
    const std::string text = serialize_scenario(scenario_from(m.space, m.table));
    os << "\n# match " << ++i << " (candidate " << m.ordinal << ")\n" << text;
    matches.push_back({{"ordinal", m.ordinal}, {"scenario", text}});
  }
  Json constraints = Json::array();
  for (const auto& [law, status] : spec.law_constraints) {
    constraints.push_back(to_string(law) + "=" + to_string(status));
  }
  for (auto s : spec.structural_constraints) constraints.push_back(to_string(s));
  r.text = os.str();
  r.json = {{"kind", "search"},
            {"universe_size", spec.universe_size},
            {"carrier_size", spec.carrier_size},
            {"allow_indet", spec.allow_indet},
            {"constraints", constraints},
            {"space_size", res.space_size},
            {"examined", res.examined},
            {"limit_reached", res.limit_reached},
            {"budget_exhausted", res.budget_exhausted},
            {"matches", matches}};
  return r;
}

Report audit_report(const std::vector<AuditFinding>& findings) {
  Report r;
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& f : findings) {
    os << f.id << " [" << to_string(f.status) << "]\n"
       << "  published: " << f.claim << " (" << f.citation << ")\n"
       << "  derived:   " << f.derived << '\n';
    if (!f.note.empty()) os << "  note:      " << f.note << '\n';
    if (f.status != AuditStatus::Match) r.ok = false;
    arr.push_back({{"id", f.id},
                   {"claim", f.claim},
                   {"citation", f.citation},
                   {"derived", f.derived},
                   {"status", to_string(f.status)},
                   {"note", f.note}});
  }
  r.text = os.str();
  r.json = {{"kind", "audit"}, {"findings", arr}};
  return r;
}

}  // namespace ras::cli
