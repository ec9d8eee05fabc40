#include "ras/scenario.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ras/error.hpp"

namespace ras {

// ------------------------------------------------------------------ lookups

namespace {

template <class Map>
const typename Map::mapped_type& find_decl(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::UnknownName, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const UniversePtr& Scenario::universe(const std::string& name) const {
  return find_decl(universes, name, "universe").universe;
}
const ApproxSpace& Scenario::space(const std::string& name) const {
  return find_decl(partitions, name, "partition").space;
}
const SubsetU& Scenario::set(const std::string& name) const {
  return find_decl(sets, name, "set").set;
}
const OpTable& Scenario::table(const std::string& name) const {
  return find_decl(tables, name, "table").table;
}
const Mapping& Scenario::mapping(const std::string& name) const {
  return find_decl(maps, name, "map").mapping;
}

// ------------------------------------------------------------------- errors

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::LexError: return "LexError";
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::UnknownReference: return "UnknownReference";
    case ParseErrorKind::DuplicateName: return "DuplicateName";
    case ParseErrorKind::ArityError: return "ArityError";
    case ParseErrorKind::ValidationError: return "ValidationError";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan where, std::string token,
                       std::vector<std::string> expected, std::string message)
    : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(where.line) + ":" +
                         std::to_string(where.column) + ": " + message),
      kind_(kind),
      where_(where),
      token_(std::move(token)),
      expected_(std::move(expected)),
      message_(std::move(message)) {}

std::string ParseError::diagnostic(std::string_view file) const {
  std::ostringstream os;
  os << file << ':' << where_.line << ':' << where_.column << ": error: " << to_string(kind_) << ": "
     << message_;
  if (!expected_.empty()) {
    os << " (expected ";
    if (expected_.size() > 1) os << "one of ";
    for (std::size_t i = 0; i < expected_.size(); ++i) os << (i ? ", " : "") << expected_[i];
    os << ')';
  }
  return os.str();
}

// -------------------------------------------------------------------- lexer

namespace {

enum class Tok { Atom, LBrace, RBrace, Colon, Equals, Question, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan at;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Atom: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

bool is_delimiter(char c) {
  return c == '{' || c == '}' || c == ':' || c == '=' || c == '#' || c == '?';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Length of the UTF-8 sequence starting at s[i], or 0 when malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  const auto b = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0 && b >= 0xC2) len = 2;
  else if ((b & 0xF0) == 0xE0) len = 3;
  else if ((b & 0xF8) == 0xF0 && b <= 0xF4) len = 4;
  else return 0;
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return 0;
  }
  return len;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      const SourceSpan at{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = text_[pos_];
      auto single = [&](Tok k) {
        out.push_back({k, std::string(1, c), at});
        advance(1);
      };
      switch (c) {
        case '{': single(Tok::LBrace); continue;
        case '}': single(Tok::RBrace); continue;
        case ':': single(Tok::Colon); continue;
        case '=': single(Tok::Equals); continue;
        case '?': single(Tok::Question); continue;
        default: break;
      }
      if (starts_arrow()) {
        out.push_back({Tok::Arrow, "->", at});
        advance(2);
        continue;
      }
      out.push_back({Tok::Atom, read_atom(), at});
    }
  }

 private:
  [[noreturn]] void lex_error(const std::string& msg) {
    std::ostringstream tok;
    tok << "0x" << std::hex << static_cast<int>(static_cast<unsigned char>(text_[pos_]));
    throw ParseError(ParseErrorKind::LexError, {line_, col_}, tok.str(), {}, msg);
  }

  bool starts_arrow() const {
    return pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>';
  }

  void check_char() {
    const auto b = static_cast<unsigned char>(text_[pos_]);
    if (b == '\r') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') return;
      lex_error("carriage return not followed by a line feed");
    }
    if ((b < 0x20 && b != '\t' && b != '\n') || b == 0x7F) lex_error("control character in input");
    if (utf8_length(text_, pos_) == 0) lex_error("malformed UTF-8 sequence");
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++col_;  // count code points, not continuation bytes
      }
      ++pos_;
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      check_char();
      const char c = text_[pos_];
      if (is_space(c)) {
        advance(1);
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          check_char();
          advance(utf8_length(text_, pos_));
        }
      } else {
        return;
      }
    }
  }

  std::string read_atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      check_char();
      const char c = text_[pos_];
      if (is_space(c) || is_delimiter(c) || starts_arrow()) break;
      advance(utf8_length(text_, pos_));
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ------------------------------------------------------------------- parser

std::string quoted(Tok k) {
  switch (k) {
    case Tok::Atom: return "atom";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Question: return "'?'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Scenario run() {
    while (peek().kind != Tok::End) declaration();
    return std::move(out_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    const Token& t = peek();
    throw ParseError(ParseErrorKind::SyntaxError, t.at, t.text, std::move(expected),
                     "unexpected " + describe(t));
  }

  [[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.at, at.text, {}, msg);
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) unexpected({quoted(k)});
    return take();
  }

  const Token& expect_keyword(std::string_view kw) {
    if (peek().kind != Tok::Atom || peek().text != kw) unexpected({"'" + std::string(kw) + "'"});
    return take();
  }

  // `{ atom* }`, returning the atom tokens.
  std::vector<Token> atom_list(bool allow_empty) {
    expect(Tok::LBrace);
    std::vector<Token> atoms;
    while (peek().kind == Tok::Atom) atoms.push_back(take());
    if (atoms.empty() && !allow_empty) unexpected({quoted(Tok::Atom)});
    if (peek().kind != Tok::RBrace) unexpected({quoted(Tok::Atom), quoted(Tok::RBrace)});
    take();
    return atoms;
  }

  template <class Map>
  void check_fresh(const Map& m, const Token& name, const char* what) {
    if (m.contains(name.text)) {
      fail(ParseErrorKind::DuplicateName, name,
           std::string(what) + " '" + name.text + "' is already declared");
    }
  }

  template <class Map>
  const typename Map::mapped_type& resolve(const Map& m, const Token& name, const char* what) {
    auto it = m.find(name.text);
    if (it == m.end()) {
      fail(ParseErrorKind::UnknownReference, name,
           std::string("no ") + what + " named '" + name.text + "' declared before this point");
    }
    return it->second;
  }

  Index element(const UniversePtr& u, const Token& atom) {
    if (!u->contains(atom.text)) {
      fail(ParseErrorKind::ValidationError, atom, "'" + atom.text + "' is not in the universe");
    }
    return u->index(atom.text);
  }

  SubsetU subset(const UniversePtr& u, const std::vector<Token>& atoms) {
    SubsetU s(u);
    for (const auto& a : atoms) {
      const Index i = element(u, a);
      if (s.contains(i)) fail(ParseErrorKind::ValidationError, a, "'" + a.text + "' is listed twice");
      s.insert(i);
    }
    return s;
  }

  void declaration() {
    const Token& kw = peek();
    if (kw.kind == Tok::Atom) {
      if (kw.text == "universe") return universe_decl();
      if (kw.text == "partition") return partition_decl();
      if (kw.text == "set") return set_decl();
      if (kw.text == "table") return table_decl();
      if (kw.text == "map") return map_decl();
    }
    unexpected({"'universe'", "'partition'", "'set'", "'table'", "'map'"});
  }

  void universe_decl() {
    const Token kw = take();
    const Token name = expect(Tok::Atom);
    check_fresh(out_.universes, name, "universe");
    expect(Tok::Equals);
    const auto atoms = atom_list(false);
    std::vector<std::string> labels;
    for (const auto& a : atoms) {
      if (std::find(labels.begin(), labels.end(), a.text) != labels.end()) {
        fail(ParseErrorKind::ValidationError, a, "DuplicateLabel: '" + a.text + "' appears twice");
      }
      labels.push_back(a.text);
    }
    out_.universes.emplace(name.text, UniverseDecl{make_universe(std::move(labels)), kw.at});
  }

  void partition_decl() {
    const Token kw = take();
    const Token name = expect(Tok::Atom);
    check_fresh(out_.partitions, name, "partition");
    expect_keyword("on");
    const Token uname = expect(Tok::Atom);
    const UniversePtr u = resolve(out_.universes, uname, "universe").universe;
    expect(Tok::Equals);
    expect(Tok::LBrace);
    std::vector<SubsetU> blocks;
    do {
      if (peek().kind != Tok::LBrace) unexpected({quoted(Tok::LBrace)});
      blocks.push_back(subset(u, atom_list(false)));
    } while (peek().kind == Tok::LBrace);
    const Token close = peek();
    if (close.kind != Tok::RBrace) unexpected({quoted(Tok::LBrace), quoted(Tok::RBrace)});
    take();
    try {
      out_.partitions.emplace(name.text, PartitionDecl{uname.text, make_space(u, std::move(blocks)), kw.at});
    } catch (const Error& e) {
      fail(ParseErrorKind::ValidationError, kw, e.what());
    }
  }

  void set_decl() {
    const Token kw = take();
    const Token name = expect(Tok::Atom);
    check_fresh(out_.sets, name, "set");
    expect_keyword("on");
    const Token uname = expect(Tok::Atom);
    const UniversePtr u = resolve(out_.universes, uname, "universe").universe;
    expect(Tok::Equals);
    SubsetU s = subset(u, atom_list(true));
    out_.sets.emplace(name.text, SetDecl{uname.text, std::move(s), kw.at});
  }

  void table_decl() {
    const Token kw = take();
    const Token name = expect(Tok::Atom);
    check_fresh(out_.tables, name, "table");
    expect_keyword("on");
    const Token uname = expect(Tok::Atom);
    const UniversePtr u = resolve(out_.universes, uname, "universe").universe;
    expect_keyword("carrier");
    const auto carrier_atoms = atom_list(false);
    const SubsetU carrier = subset(u, carrier_atoms);
    const std::size_t k = carrier_atoms.size();
    expect(Tok::Equals);
    expect(Tok::LBrace);

    // Rows keyed by universe index; cells in carrier declaration order.
    std::map<Index, std::vector<Cell>> rows;
    while (peek().kind == Tok::Atom) {
      const Token label = take();
      const Index r = element(u, label);
      if (!carrier.contains(r)) {
        fail(ParseErrorKind::ValidationError, label, "row '" + label.text + "' is not a carrier element");
      }
      if (rows.contains(r)) {
        fail(ParseErrorKind::ValidationError, label, "ExtraEntry: row '" + label.text + "' appears twice");
      }
      expect(Tok::Colon);
      std::vector<Cell> cells;
      while (true) {
        const Token& t = peek();
        const bool row_label_next = t.kind == Tok::Atom && peek(1).kind == Tok::Colon;
        if (t.kind == Tok::Question) {
          take();
        } else if (t.kind == Tok::Atom && !row_label_next) {
          take();
        } else {
          break;
        }
        if (cells.size() == k) {
          fail(ParseErrorKind::ArityError, t,
               "row '" + label.text + "' has more than " + std::to_string(k) + " cells");
        }
        if (t.kind == Tok::Question) {
          cells.emplace_back(std::nullopt);
        } else {
          if (!u->contains(t.text)) {
            fail(ParseErrorKind::ValidationError, t,
                 "UnknownResultLabel: '" + t.text + "' is not in the universe");
          }
          cells.emplace_back(u->index(t.text));
        }
      }
      if (cells.size() < k) {
        const Token& t = peek();
        throw ParseError(ParseErrorKind::ArityError, t.at, t.text, {quoted(Tok::Atom), "'?'"},
                         "row '" + label.text + "' has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(k));
      }
      rows.emplace(r, std::move(cells));
    }
    const Token close = peek();
    if (close.kind != Tok::RBrace) unexpected({quoted(Tok::Atom), quoted(Tok::RBrace)});
    take();

    for (const auto& a : carrier_atoms) {
      if (!rows.contains(u->index(a.text))) {
        fail(ParseErrorKind::ValidationError, close, "MissingEntry: no row for '" + a.text + "'");
      }
    }
    // Column j of a row refers to carrier_atoms[j]; reorder to index order.
    std::vector<std::size_t> column_of(u->size());
    for (std::size_t j = 0; j < k; ++j) column_of[u->index(carrier_atoms[j].text)] = j;
    std::vector<Cell> cells;
    for (Index x = carrier.first(); x != SubsetU::npos; x = carrier.next(x)) {
      const auto& row = rows.at(x);
      for (Index y = carrier.first(); y != SubsetU::npos; y = carrier.next(y)) {
        cells.push_back(row[column_of[y]]);
      }
    }
    try {
      out_.tables.emplace(name.text, TableDecl{uname.text, make_table_from_cells(carrier, std::move(cells)), kw.at});
    } catch (const Error& e) {
      fail(ParseErrorKind::ValidationError, kw, e.what());
    }
  }

  void map_decl() {
    const Token kw = take();
    const Token name = expect(Tok::Atom);
    check_fresh(out_.maps, name, "map");
    expect_keyword("from");
    const Token dname = expect(Tok::Atom);
    const SubsetU& domain = resolve(out_.sets, dname, "set").set;
    expect_keyword("to");
    const Token tname = expect(Tok::Atom);
    const SubsetU& target = resolve(out_.sets, tname, "set").set;
    expect(Tok::Equals);
    expect(Tok::LBrace);
    std::vector<std::pair<Index, Index>> pairs;
    while (peek().kind == Tok::Atom) {
      const Token from = take();
      expect(Tok::Arrow);
      const Token to = expect(Tok::Atom);
      if (!domain.universe()->contains(from.text)) {
        fail(ParseErrorKind::ValidationError, from, "'" + from.text + "' is not in the domain universe");
      }
      if (!target.universe()->contains(to.text)) {
        fail(ParseErrorKind::ValidationError, to,
             "UnknownCodomainLabel: '" + to.text + "' is not in the codomain universe");
      }
      pairs.emplace_back(domain.universe()->index(from.text), target.universe()->index(to.text));
    }
    if (pairs.empty()) unexpected({quoted(Tok::Atom)});
    if (peek().kind != Tok::RBrace) unexpected({quoted(Tok::Atom), quoted(Tok::RBrace)});
    take();
    try {
      out_.maps.emplace(name.text, MapDecl{dname.text, tname.text, make_mapping(domain, target, pairs), kw.at});
    } catch (const Error& e) {
      fail(ParseErrorKind::ValidationError, kw, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Scenario out_;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

// --------------------------------------------------------------- serializer

namespace {

void write_atoms(std::ostream& os, const std::vector<std::string>& atoms) {
  os << '{';
  for (const auto& a : atoms) os << ' ' << a;
  os << " }";
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  bool first = true;
  auto separate = [&] {
    if (!first) os << '\n';
    first = false;
  };
  for (const auto& [name, d] : s.universes) {
    separate();
    os << "universe " << name << " = ";
    write_atoms(os, d.universe->labels());
    os << '\n';
  }
  for (const auto& [name, d] : s.partitions) {
    separate();
    std::vector<const SubsetU*> blocks;
    for (const auto& b : d.space.partition().blocks()) blocks.push_back(&b);
    std::sort(blocks.begin(), blocks.end(),
              [](const SubsetU* a, const SubsetU* b) { return a->first() < b->first(); });
    os << "partition " << name << " on " << d.universe << " = {";
    for (const auto* b : blocks) {
      os << ' ';
      write_atoms(os, b->labels());
    }
    os << " }\n";
  }
  for (const auto& [name, d] : s.sets) {
    separate();
    os << "set " << name << " on " << d.universe << " = ";
    if (d.set.empty()) {
      os << "{ }";
    } else {
      write_atoms(os, d.set.labels());
    }
    os << '\n';
  }
  for (const auto& [name, d] : s.tables) {
    separate();
    const auto& t = d.table;
    const auto& u = *t.universe();
    os << "table " << name << " on " << d.universe << " carrier ";
    write_atoms(os, t.carrier().labels());
    os << " = {\n";
    for (std::size_t r = 0; r < t.order(); ++r) {
      os << "  " << u.label(t.elements()[r]) << " :";
      for (std::size_t c = 0; c < t.order(); ++c) {
        const Cell cell = t.cell(r, c);
        os << ' ' << (cell ? u.label(*cell) : std::string("?"));
      }
      os << '\n';
    }
    os << "}\n";
  }
  for (const auto& [name, d] : s.maps) {
    separate();
    const auto& m = d.mapping;
    os << "map " << name << " from " << d.domain_set << " to " << d.target_set << " = {";
    const auto& u1 = *m.domain().universe();
    const auto& u2 = *m.codomain();
    for (Index x = m.domain().first(); x != SubsetU::npos; x = m.domain().next(x)) {
      os << ' ' << u1.label(x) << " -> " << u2.label(m(x));
    }
    os << " }\n";
  }
  return os.str();
}

Scenario scenario_from(const ApproxSpace& space, const OpTable& table) {
  Scenario s;
  s.universes.emplace("U", UniverseDecl{space.universe(), {}});
  s.partitions.emplace("P", PartitionDecl{"U", space, {}});
  s.tables.emplace("T", TableDecl{"U", table, {}});
  return s;
}

}  // namespace ras
