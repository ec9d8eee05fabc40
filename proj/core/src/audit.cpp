#include "ras/audit.hpp"

#include <sstream>

#include "ras/algebra.hpp"
#include "ras/error.hpp"
#include "ras/rough_structures.hpp"

namespace ras {

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : bundled_fixtures()) {
    if (f.name == name) return f.text;
  }
  throw Error(ErrorCode::UnknownName, "no bundled fixture named '" + std::string(name) + "'");
}

Scenario load_fixture(std::string_view name) { return parse_scenario(fixture_text(name)); }

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Match: return "MATCH";
    case AuditStatus::Discrepancy: return "DISCREPANCY";
    case AuditStatus::NotWellFormed: return "NOT-WELL-FORMED";
  }
  return "?";
}

namespace {

AuditStatus match_if(bool same) { return same ? AuditStatus::Match : AuditStatus::Discrepancy; }

std::string pair_witness(const UniversePtr& u, const ClosureFailure& f) {
  std::ostringstream os;
  os << '(' << u->label(f.x) << ',' << u->label(f.y) << ") -> "
     << (f.result ? u->label(*f.result) : std::string("?"));
  return os.str();
}

std::string flags_of(const Classification& c) {
  std::ostringstream os;
  for (auto law : kAllLaws) os << to_string(law) << '=' << to_string(c[law].status) << ' ';
  os << "anti-group=" << (c.is_anti_group ? "true" : "false")
     << " ag4=" << (c.is_ag4 ? "true" : "false")
     << " strict-ag4=" << (c.is_strict_ag4 ? "true" : "false");
  return os.str();
}

AuditFinding partition_cover() {
  AuditFinding f{"P-PARTITION-COVER", "U/~ = {1 2 3}{4}{5} classifies U = {1 2 3 4 5 6}",
                 "Example 3.1", "", AuditStatus::Match, ""};
  try {
    const Scenario s = load_fixture("example31_classes.ras");
    f.derived = "classes form a partition " + format_partition(s.space("E").partition());
  } catch (const ParseError& e) {
    f.status = AuditStatus::NotWellFormed;
    f.derived = e.message();
    f.note = "the bundled scenarios complete the classes with the block {6}";
  }
  return f;
}

}  // namespace

std::vector<AuditFinding> audit_published_examples() {
  std::vector<AuditFinding> out;
  out.push_back(partition_cover());

  const Scenario ex31 = load_fixture("example31.ras");
  const Scenario ex32 = load_fixture("example32.ras");
  const ApproxSpace& space = ex31.space("P");
  const SubsetU& a = ex31.set("A");
  const SubsetU& b = ex31.set("B");
  const UniversePtr& u = space.universe();

  {
    const SubsetU upper = space.upper(a);
    const SubsetU claimed = SubsetU::from_labels(u, {"1", "2", "3", "4"});
    AuditFinding f{"EX3.1-UPPER-A", "upper(A) = {1 2 3 4} for A = {1 2 5}", "Example 3.1",
                   "upper(A) = " + format_set(upper), match_if(upper == claimed), ""};
    if (f.status == AuditStatus::Discrepancy) {
      const Index w = claimed.first_not_in(upper);
      f.note = "class of " + u->label(w) + " is " + format_set(space.equivalence_class(w)) +
               ", which does not meet A";
    }
    out.push_back(f);
  }
  {
    const SubsetU upper = ex32.space("P").upper(ex32.set("B"));
    const SubsetU claimed = SubsetU::from_labels(ex32.universe("U"), {"1", "2", "3", "5"});
    out.push_back({"EX3.2-UPPER-B", "upper(B) = {1 2 3 5} for B = {2 3 5}", "Example 3.2",
                   "upper(B) = " + format_set(upper), match_if(upper == claimed), ""});
  }
  {
    const Classification c = classify(ex31.table("C"));
    const bool ok = c.is_ag4 && c[Law::C1].status == Status::Mixed &&
                    c[Law::C2].status == Status::Mixed && c[Law::C3].status == Status::Mixed &&
                    c[Law::C5].status == Status::Mixed;
    out.push_back({"EX3.1-AG4",
                   "C4 false for every element; C1 C2 C3 C5 partially true and partially false",
                   "Example 3.1", flags_of(c), match_if(ok), ""});
    out.push_back({"EX3.1-ANTI-GROUP", "(C, *) is a finite anti-group", "Example 3.1",
                   std::string("anti-group=") + (c.is_anti_group ? "true" : "false"),
                   match_if(c.is_anti_group), "C9 holds because C4 is AllFalse"});
  }
  {
    const Classification c = classify(ex31.table("A"));
    out.push_back({"EX3.1-A-AG4", "A is an anti-subgroup of type AG(4)", "Example 3.1",
                   flags_of(c), match_if(c.is_ag4), "checked as: C4 AllFalse on A's table"});
  }
  {
    const auto v = check_rough_anti_semigroup(space, ex31.table("A"), &ex31.table("C"));
    AuditFinding f{"EX3.1-DEF31", "A = {1 2 5} is a rough anti-semigroup", "Example 3.1", "",
                   match_if(v.overall), ""};
    std::ostringstream os;
    os << "condition1=" << (v.condition1.holds ? "holds" : "fails");
    if (!v.condition1.holds) {
      os << " witness " << pair_witness(u, v.condition1.failures.front()) << " not in upper(A) = "
         << format_set(v.upper_used);
    }
    os << "; condition2=" << (v.condition2->holds ? "holds" : "fails") << " ("
       << v.condition2->true_count << " true, " << v.condition2->false_count << " false, "
       << v.condition2->indeterminate_count << " indeterminate triples)";
    f.derived = os.str();
    f.note = "classification of A's table: " + flags_of(classify(ex31.table("A")));
    out.push_back(f);
  }
  {
    const OpTable& tb = ex32.table("B");
    const auto v = check_rough_anti_subsemigroup(ex32.space("P"), tb, ex32.set("B"));
    AuditFinding f{"EX3.2-DEF32", "B = {2 3 5} is a rough anti-(sub)semigroup", "Example 3.2", "",
                   match_if(v.overall), ""};
    std::ostringstream os;
    os << "BB subset of upper(B): " << (v.condition1.holds ? "holds" : "fails");
    if (!v.condition1.holds) {
      os << " witness " << pair_witness(tb.universe(), v.condition1.failures.front())
         << " not in upper(B) = " << format_set(v.upper_used);
    }
    f.derived = os.str();
    f.note = "classification of B's table: " + flags_of(classify(tb));
    out.push_back(f);
  }
  {
    const auto r = check_intersection_relations(space, a, b);
    const SubsetU claimed = SubsetU::from_labels(u, {"1", "2", "3", "5"});
    const SubsetU claimed_cap = SubsetU::from_labels(u, {"1", "2", "3"});
    out.push_back({"EX3.3-INTERSECTION", "A & B = {2 5} and upper(A & B) = {1 2 3 5}",
                   "Example 3.3",
                   "A & B = " + format_set(r.intersection) +
                       ", upper(A & B) = " + format_set(r.upper_intersection),
                   match_if(r.upper_intersection == claimed &&
                            r.intersection == SubsetU::from_labels(u, {"2", "5"})),
                   ""});
    const SubsetU cap = r.upper_a & r.upper_b;
    out.push_back({"EX3.3-UPPER-CAP", "upper(A) & upper(B) = {1 2 3}", "Example 3.3",
                   "upper(A) & upper(B) = " + format_set(cap), match_if(cap == claimed_cap),
                   "follows from the published upper(A) = {1 2 3 4}"});
  }
  return out;
}

std::optional<PublishedUpper> published_upper(const ApproxSpace& space, const SubsetU& set) {
  const Scenario ex31 = load_fixture("example31.ras");
  if (!(space == ex31.space("P")) || !same_universe(set.universe(), space.universe())) {
    return std::nullopt;
  }
  if (set == ex31.set("A")) return PublishedUpper{"EX3.1-UPPER-A", "{1 2 3 4}", "Example 3.1"};
  if (set == ex31.set("B")) return PublishedUpper{"EX3.2-UPPER-B", "{1 2 3 5}", "Example 3.2"};
  return std::nullopt;
}

}  // namespace ras
