#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ras/algebra.hpp"
#include "ras/approx.hpp"
#include "ras/audit.hpp"
#include "ras/enumeration.hpp"
#include "ras/morphisms.hpp"
#include "ras/rough_structures.hpp"
#include "ras/scenario.hpp"

namespace ras::cli {

/// Text and JSON renderings of one result. `ok` is false when `--assert`
/// should turn the run into a failure.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
  bool ok = true;
};

Report parse_report(const std::string& file, const Scenario& s);
Report approx_report(const std::string& space_name, const std::string& set_name,
                     const ApproxSpace& space, const SubsetU& set);
Report classify_report(const std::string& table_name, const OpTable& table);
Report rough_semigroup_report(const std::string& table_name, const OpTable& table,
                              const RoughStructVerdict& v);
Report rough_subsemigroup_report(const std::string& table_name, const std::string& subset_name,
                                 const OpTable& table, const RoughStructVerdict& v);
Report morphism_report(const std::string& map_name, const Mapping& phi, const MorphismReport& r);

struct LawsEntry {
  SweepLine line;
  std::optional<std::string> counterexample;  // minimal one, for refuted claims
};
Report laws_report(const std::vector<LawsEntry>& entries);

Report search_report(const SearchSpec& spec, const SearchResult& r);
Report audit_report(const std::vector<AuditFinding>& findings);

/// Labels of a subset as a JSON array.
nlohmann::ordered_json labels_json(const SubsetU& s);

}  // namespace ras::cli
