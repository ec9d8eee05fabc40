#include <random>

#include "doctest.h"
#include "ras/audit.hpp"
#include "ras/enumeration.hpp"
#include "ras/scenario.hpp"
#include "support.hpp"

using namespace ras;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError for: " << text);
  return ParseError(ParseErrorKind::SyntaxError, {}, "", {}, "");
}

}  // namespace

TEST_CASE("worked example fixture") {
  const Scenario s = load_fixture("example31.ras");
  const auto& a = s.table("A");
  const auto& u = s.universe("U");
  CHECK(u->size() == 6);
  CHECK(format_set(a.carrier()) == "{1 2 5}");
  auto cell = [&](const char* x, const char* y) { return u->label(*a.at(u->index(x), u->index(y))); };
  CHECK(cell("1", "1") == "4");
  CHECK(cell("1", "2") == "1");
  CHECK(cell("1", "5") == "5");
  CHECK(cell("2", "5") == "3");
  CHECK(cell("5", "5") == "6");
  CHECK(format_partition(s.space("P").partition()) == "{1 2 3}{4}{5}{6}");
  CHECK(s.tables.at("A").span.line > 0);
}

TEST_CASE("empty input and comments") {
  CHECK(parse_scenario("").empty());
  CHECK(parse_scenario("# only a comment\n\n   \n").empty());
  const auto s = parse_scenario("universe U = { 1 2 }\r\nset A on U = { 1 } # trailing\r\n");
  CHECK(format_set(s.set("A")) == "{1}");
}

TEST_CASE("diagnostics carry position, token and expected set") {
  auto arity = parse_error("universe U = { 1 2 }\ntable T on U carrier {1 2} = { 1 : 1 }\n");
  CHECK(arity.kind() == ParseErrorKind::ArityError);
  CHECK(arity.where().line == 2);
  CHECK(arity.where().column == 38);
  CHECK(arity.token() == "}");
  CHECK_FALSE(arity.expected().empty());

  auto dup = parse_error("universe U = { 1 2 }\nuniverse U = { 3 }\n");
  CHECK(dup.kind() == ParseErrorKind::DuplicateName);
  CHECK(dup.where().line == 2);
  CHECK(dup.where().column == 10);

  auto unknown = parse_error("set A on V = { }\n");
  CHECK(unknown.kind() == ParseErrorKind::UnknownReference);
  CHECK(unknown.diagnostic("f.ras").rfind("f.ras:1:10: error: UnknownReference", 0) == 0);

  auto lex = parse_error("universe U = { 1 \xff }\n");
  CHECK(lex.kind() == ParseErrorKind::LexError);
  CHECK(lex.where().column == 18);

  auto syntax = parse_error("universe U { 1 }");
  CHECK(syntax.kind() == ParseErrorKind::SyntaxError);
  CHECK(syntax.token() == "{");
  CHECK(syntax.expected() == std::vector<std::string>{"'='"});

  CHECK(parse_error("universe U = { 1 2 }\npartition P on U = { {1} }\n").kind() ==
        ParseErrorKind::ValidationError);
  CHECK(parse_error("universe U = { 1 1 }").kind() == ParseErrorKind::ValidationError);
  CHECK(parse_error("universe U = { a b }\nset S on U = { a b }\nmap m from S to S = { a -> b }\n").kind() ==
        ParseErrorKind::ValidationError);
  // Column headers are not part of the format.
  CHECK(parse_error("universe U = { 1 2 }\ntable T on U carrier {1 2} = { : 1 2\n 1 : 1 2\n 2 : 2 1 }\n").kind() ==
        ParseErrorKind::SyntaxError);
}

TEST_CASE("INDET cells render as ?") {
  const auto s = parse_scenario("universe U = { 1 2 }\ntable T on U carrier { 1 } = { 1 : ? }\n");
  CHECK_FALSE(s.table("T").at(0, 0).has_value());
  CHECK(serialize_scenario(s).find("1 : ?") != std::string::npos);
}

TEST_CASE("round trip on bundled fixtures") {
  for (const auto& f : bundled_fixtures()) {
    INFO(f.name);
    if (f.name == "example31_classes.ras") {
      // The literal published classes leave an element uncovered.
      CHECK(parse_error(f.text).kind() == ParseErrorKind::ValidationError);
      continue;
    }
    const Scenario s = parse_scenario(f.text);
    const std::string text = serialize_scenario(s);
    const Scenario again = parse_scenario(text);
    CHECK(again == s);
    CHECK(serialize_scenario(again) == text);
  }
}

TEST_CASE("round trip on generated scenarios") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 5;
    auto u = make_numbered_universe(n);
    const auto spaces = enum_spaces(u);
    const auto& space = spaces[rng() % spaces.size()];
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 3);
    std::vector<Index> carrier;
    for (std::size_t j = 0; j < k; ++j) carrier.push_back(j);
    TableStream tables(SubsetU::from_indices(u, carrier), true);
    const auto table = tables.at(rng() % tables.count());
    const Scenario s = scenario_from(space, table);
    const auto text = serialize_scenario(s);
    CHECK(parse_scenario(text) == s);
  }
}

TEST_CASE("random bytes never crash the parser") {
  std::mt19937 rng(1);
  const std::string alphabet = "{}:=?->#\n\r\t universe partition set table map on carrier from to 1 2 a";
  int parsed = 0, diagnosed = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::string text;
    const std::size_t len = rng() % 80;
    for (std::size_t j = 0; j < len; ++j) {
      // Half the cases draw from the grammar's own characters so they get past the lexer.
      text += (i % 2) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    }
    try {
      parse_scenario(text);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.where().line >= 1);
      CHECK(e.where().column >= 1);
      ++diagnosed;
    }
  }
  CHECK(parsed + diagnosed == 10'000);
}

TEST_CASE("mutated fixtures never crash the parser") {
  std::mt19937 rng(2);
  const std::string base(fixture_text("example31.ras"));
  for (int i = 0; i < 2000; ++i) {
    std::string text = base;
    for (int m = 0; m < 3; ++m) {
      const std::size_t pos = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, "{}:=?-> 7x\n"[rng() % 11]); break;
        default: text[pos] = static_cast<char>(rng() % 128); break;
      }
    }
    try {
      const Scenario s = parse_scenario(text);
      CHECK(parse_scenario(serialize_scenario(s)) == s);
    } catch (const ParseError& e) {
      CHECK(e.where().line >= 1);
    }
  }
}
