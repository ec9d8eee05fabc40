#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ras/audit.hpp"
#include "ras/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ras::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(RAS_FIXTURE_DIR) + "/" + name; }

const Json& schema() {
  static const Json s = [] {
    std::ifstream in(RAS_REPORT_SCHEMA);
    return Json::parse(in);
  }();
  return s;
}

// Validator for the JSON Schema subset the report schema uses.
bool validate(const Json& v, const Json& s, std::string& why);

bool type_ok(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "null") return v.is_null();
  return false;
}

bool validate(const Json& v, const Json& s, std::string& why) {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"];
    return validate(v, schema()["$defs"][ref.substr(ref.rfind('/') + 1)], why);
  }
  if (s.contains("oneOf")) {
    int hits = 0;
    for (const auto& alt : s["oneOf"]) {
      std::string ignored;
      hits += validate(v, alt, ignored);
    }
    if (hits != 1) why = "oneOf matched " + std::to_string(hits) + " alternatives";
    return hits == 1;
  }
  if (s.contains("const") && v != s["const"]) return why = "const mismatch", false;
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) return why = "value not in enum: " + v.dump(), false;
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || type_ok(v, t);
    } else {
      ok = type_ok(v, s["type"]);
    }
    if (!ok) return why = "wrong type for " + v.dump(), false;
  }
  if (s.contains("minimum") && v.is_number() && v.get<long long>() < s["minimum"].get<long long>()) {
    return why = "below minimum", false;
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return why = "too few items", false;
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return why = "too many items", false;
    if (s.contains("items")) {
      for (const auto& item : v) {
        if (!validate(item, s["items"], why)) return false;
      }
    }
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& key : s["required"]) {
        if (!v.contains(key.get<std::string>())) return why = "missing key " + key.get<std::string>(), false;
      }
    }
    if (s.contains("properties")) {
      for (const auto& [key, value] : v.items()) {
        if (!s["properties"].contains(key)) {
          if (s.value("additionalProperties", true) == false) return why = "unexpected key " + key, false;
          continue;
        }
        if (!validate(value, s["properties"][key], why)) return why = key + ": " + why, false;
      }
    }
  }
  return true;
}

void check_schema(const std::vector<std::string>& args) {
  auto with_json = args;
  with_json.insert(with_json.begin(), "--json");
  const auto r = run(with_json);
  INFO(r.err);
  REQUIRE(r.code == 0);
  const Json report = Json::parse(r.out);
  std::string why;
  INFO(why);
  CHECK_MESSAGE(validate(report, schema(), why), why);
}

}  // namespace

TEST_CASE("parse") {
  auto r = run({"parse", fixture("example31.ras")});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
  CHECK(r.err.empty());

  r = run({"parse", fixture("example31_classes.ras")});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("example31_classes.ras:") != std::string::npos);
  CHECK(r.err.find("Incomplete") != std::string::npos);

  CHECK(run({"parse", "/nonexistent.ras"}).code == 2);
}

TEST_CASE("approx reports the published value") {
  const auto r = run({"approx", fixture("example31.ras"), "--space", "P", "--set", "A"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lower = {5}\n") != std::string::npos);
  CHECK(r.out.find("upper = {1 2 3 5}\n") != std::string::npos);
  CHECK(r.out.find("boundary = {1 2 3}\n") != std::string::npos);
  CHECK(r.out.find("rough = true\n") != std::string::npos);
  CHECK(r.out.find("{1 2 3 4}") != std::string::npos);
  CHECK(run({"approx", fixture("example31.ras"), "--space", "P", "--set", "Nope"}).code == 2);
}

TEST_CASE("classify") {
  const auto r = run({"classify", fixture("example31.ras"), "--table", "C"});
  CHECK(r.code == 0);
  const auto flags = r.out.substr(r.out.find("flags:"));
  CHECK(flags.find("ag4=true") != std::string::npos);
  CHECK(flags.find("group=false") != std::string::npos);
  for (int i = 1; i <= 10; ++i) CHECK(r.out.find("\nC" + std::to_string(i) + " ") != std::string::npos);
  // Global flags may follow the subcommand.
  const auto j = run({"classify", fixture("example31.ras"), "--table", "C", "--json"});
  CHECK(Json::parse(j.out)["flags"]["ag4"] == true);
}

TEST_CASE("structure checks and --assert") {
  const auto rs = run({"check", "rough-semigroup", fixture("example31.ras"), "--space", "P", "--table", "A",
                       "--ambient", "C"});
  CHECK(rs.code == 0);
  CHECK(rs.out.find("(1,1)->4") != std::string::npos);
  CHECK(rs.out.find("overall = false") != std::string::npos);
  CHECK(run({"--assert", "check", "rough-semigroup", fixture("example31.ras"), "--space", "P", "--table", "A"})
            .code == 1);

  const auto sub = run({"check", "rough-subsemigroup", fixture("example32.ras"), "--space", "P", "--table", "B",
                        "--subset", "B"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("(2,2)->4") != std::string::npos);

  const auto hom = run({"--assert", "check", "morphism", fixture("z4.ras"), "--map", "neg", "--kind", "hom",
                        "--table-a", "Add", "--table-b", "Add"});
  CHECK(hom.code == 0);
  CHECK(hom.out.find("overall = true") != std::string::npos);
  const auto agh = run({"--assert", "check", "morphism", fixture("z4.ras"), "--map", "id", "--kind",
                        "anti-group-hom", "--table-a", "Add", "--table-b", "Add"});
  CHECK(agh.code == 1);
  CHECK(run({"check", "morphism", fixture("z4.ras"), "--map", "id", "--kind", "rough-hom", "--table-a", "Add",
             "--table-b", "Add"})
            .code == 2);
  CHECK(run({"check", "morphism", fixture("z4.ras"), "--map", "id", "--kind", "sideways", "--table-a", "Add",
             "--table-b", "Add"})
            .code == 2);
}

TEST_CASE("laws") {
  const auto r = run({"laws", "--max-n", "3", "--law", "L5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("L5: 0 failures / 356 instances checked", 0) == 0);
  const auto p31 = run({"--assert", "laws", "--max-n", "2", "--law", "P31"});
  CHECK(p31.code == 0);  // the refuted direction is a claim, not a theorem
  CHECK(p31.out.find("minimal counterexample: n=2 partition {1 2} X={1} Y={2}") != std::string::npos);
  CHECK(run({"laws", "--law", "L10"}).code == 2);
  CHECK(run({"laws", "--max-n", "9"}).code == 2);
}

TEST_CASE("search output is canonical and job-independent") {
  const std::vector<std::string> args = {"search", "--universe-size", "3", "--carrier-size", "2", "--require",
                                         "C4=AllFalse", "--require", "rough-carrier", "--limit", "3"};
  const auto a = run(args);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.begin(), {"--jobs", "3"});
  const auto b = run(with_jobs);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run(args).out);
  CHECK(a.out.find("table T on U carrier { 1 2 }") != std::string::npos);
  CHECK(run({"search", "--universe-size", "3", "--carrier-size", "2", "--require", "C4=Sometimes"}).code == 2);
  CHECK(run({"search", "--universe-size", "3", "--carrier-size", "5"}).code == 2);
}

TEST_CASE("audit-paper") {
  const auto r = run({"audit-paper"});
  CHECK(r.code == 0);
  for (const char* id : {"EX3.1-UPPER-A", "EX3.2-UPPER-B", "EX3.1-AG4", "EX3.1-DEF31", "EX3.2-DEF32",
                         "EX3.3-INTERSECTION", "P-PARTITION-COVER"}) {
    CHECK(r.out.find(std::string(id) + " [") != std::string::npos);
  }
  CHECK(run({"--assert", "audit-paper"}).code == 1);
  CHECK(run({"audit-paper"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("audit-paper") != std::string::npos);
}

TEST_CASE("every JSON report kind validates against the schema") {
  check_schema({"parse", fixture("z4.ras")});
  check_schema({"approx", fixture("example31.ras"), "--space", "P", "--set", "A"});
  check_schema({"approx", fixture("z4.ras"), "--space", "Cosets", "--set", "X"});
  check_schema({"classify", fixture("example31.ras"), "--table", "C"});
  check_schema({"check", "rough-semigroup", fixture("example31.ras"), "--space", "P", "--table", "A"});
  check_schema({"check", "rough-subsemigroup", fixture("example32.ras"), "--space", "P", "--table", "B",
                "--subset", "B"});
  check_schema({"check", "morphism", fixture("z4.ras"), "--map", "neg", "--kind", "rough-anti-hom", "--table-a",
                "Add", "--table-b", "Add", "--space-a", "Cosets", "--space-b", "Cosets"});
  check_schema({"laws", "--max-n", "2"});
  check_schema({"search", "--universe-size", "2", "--carrier-size", "2", "--allow-indet", "--limit", "2"});
  check_schema({"audit-paper"});

  // The validator itself rejects a stray key.
  Json bad = Json::parse(run({"--json", "parse", fixture("z4.ras")}).out);
  bad["extra"] = 1;
  std::string why;
  CHECK_FALSE(validate(bad, schema(), why));
}

TEST_CASE("audit findings") {
  const auto findings = ras::audit_published_examples();
  std::map<std::string, ras::AuditStatus> by_id;
  for (const auto& f : findings) {
    CHECK(by_id.count(f.id) == 0);
    by_id[f.id] = f.status;
    CHECK_FALSE(f.derived.empty());
    CHECK_FALSE(f.citation.empty());
  }
  using S = ras::AuditStatus;
  CHECK(by_id.at("EX3.2-UPPER-B") == S::Match);
  CHECK(by_id.at("EX3.3-INTERSECTION") == S::Match);
  CHECK(by_id.at("EX3.1-AG4") == S::Match);
  CHECK(by_id.at("EX3.1-UPPER-A") == S::Discrepancy);
  CHECK(by_id.at("EX3.1-DEF31") == S::Discrepancy);
  CHECK(by_id.at("EX3.2-DEF32") == S::Discrepancy);
  CHECK(by_id.at("P-PARTITION-COVER") == S::NotWellFormed);
  for (const auto& f : findings) {
    if (f.id == "EX3.1-DEF31") CHECK(f.derived.find("(1,1) -> 4") != std::string::npos);
    if (f.id == "EX3.2-DEF32") CHECK(f.derived.find("(2,2) -> 4") != std::string::npos);
    if (f.id == "EX3.1-UPPER-A") CHECK(f.derived.find("{1 2 3 5}") != std::string::npos);
  }
}
