#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ras/algebra.hpp"
#include "ras/approx.hpp"
#include "ras/morphisms.hpp"
#include "ras/universe.hpp"

namespace ras {

/// 1-based position of a declaration or token.
struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct UniverseDecl {
  UniversePtr universe;
  SourceSpan span;
  friend bool operator==(const UniverseDecl& a, const UniverseDecl& b) {
    return same_universe(a.universe, b.universe);
  }
};

struct PartitionDecl {
  std::string universe;
  ApproxSpace space;
  SourceSpan span;
  friend bool operator==(const PartitionDecl& a, const PartitionDecl& b) {
    return a.universe == b.universe && a.space == b.space;
  }
};

struct SetDecl {
  std::string universe;
  SubsetU set;
  SourceSpan span;
  friend bool operator==(const SetDecl& a, const SetDecl& b) {
    return a.universe == b.universe && a.set == b.set;
  }
};

struct TableDecl {
  std::string universe;
  OpTable table;
  SourceSpan span;
  friend bool operator==(const TableDecl& a, const TableDecl& b) {
    return a.universe == b.universe && a.table == b.table;
  }
};

struct MapDecl {
  std::string domain_set;
  std::string target_set;
  Mapping mapping;
  SourceSpan span;
  friend bool operator==(const MapDecl& a, const MapDecl& b) {
    return a.domain_set == b.domain_set && a.target_set == b.target_set && a.mapping == b.mapping;
  }
};

/// Named universes, partitions, sets, tables and maps. Equality is
/// structural and ignores source spans.
struct Scenario {
  std::map<std::string, UniverseDecl> universes;
  std::map<std::string, PartitionDecl> partitions;
  std::map<std::string, SetDecl> sets;
  std::map<std::string, TableDecl> tables;
  std::map<std::string, MapDecl> maps;

  bool empty() const {
    return universes.empty() && partitions.empty() && sets.empty() && tables.empty() && maps.empty();
  }

  // Lookups throw Error(UnknownName).
  const UniversePtr& universe(const std::string& name) const;
  const ApproxSpace& space(const std::string& name) const;
  const SubsetU& set(const std::string& name) const;
  const OpTable& table(const std::string& name) const;
  const Mapping& mapping(const std::string& name) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class ParseErrorKind {
  LexError,
  SyntaxError,
  UnknownReference,
  DuplicateName,
  ArityError,
  ValidationError,
};

std::string_view to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan where, std::string token,
             std::vector<std::string> expected, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  SourceSpan where() const noexcept { return where_; }
  const std::string& token() const noexcept { return token_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

  /// `file:line:col: error: Kind: message (expected ...)`.
  std::string diagnostic(std::string_view file) const;

 private:
  ParseErrorKind kind_;
  SourceSpan where_;
  std::string token_;
  std::vector<std::string> expected_;
  std::string message_;
};

/// Throws ParseError; never anything else for well-typed input.
Scenario parse_scenario(std::string_view text);

/// Canonical text: categories in declaration order of dependency, names
/// sorted, LF line endings, INDET cells as `?`.
std::string serialize_scenario(const Scenario& s);

/// One universe U, one partition P and one table T.
Scenario scenario_from(const ApproxSpace& space, const OpTable& table);

}  // namespace ras
