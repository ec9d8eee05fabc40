#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ras/approx.hpp"
#include "ras/scenario.hpp"

namespace ras {

struct Fixture {
  std::string_view name;
  std::string_view text;
};

/// The .ras files compiled into the library.
const std::vector<Fixture>& bundled_fixtures();
/// Throws Error(UnknownName).
std::string_view fixture_text(std::string_view name);
Scenario load_fixture(std::string_view name);

enum class AuditStatus { Match, Discrepancy, NotWellFormed };
std::string to_string(AuditStatus s);

struct AuditFinding {
  std::string id;
  std::string claim;     // published value
  std::string citation;  // where it was published
  std::string derived;   // recomputed now
  AuditStatus status = AuditStatus::Match;
  std::string note;
};

/// Recomputes every published claim from the bundled fixtures.
std::vector<AuditFinding> audit_published_examples();

/// A published upper approximation for exactly this space and set, if any.
struct PublishedUpper {
  std::string id;
  std::string value;
  std::string citation;
};
std::optional<PublishedUpper> published_upper(const ApproxSpace& space, const SubsetU& set);

}  // namespace ras
