#include "retic/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace retic {

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int tl = 0, tc = 0;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, tl, tc});
      cur.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {  // comment to end of line
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      --i;
      continue;
    }
    if (c == '\n') {
      flush();
      out.push_back({"\n", line, col});
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      ++col;
      continue;
    }
    if (cur.empty()) {
      tl = line;
      tc = col;
    }
    cur += c;
    ++col;
  }
  flush();
  return out;
}

struct Cursor {
  const std::vector<Token>& toks;
  size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const {
    static Token eof{"", 0, 0};
    return done() ? eof : toks[pos];
  }
  Token next() {
    if (done()) throw ParseError(0, 0, "unexpected end of document");
    return toks[pos++];
  }
  void skip_newlines() {
    while (!done() && toks[pos].text == "\n") ++pos;
  }
  Token next_word() {
    skip_newlines();
    return next();
  }
  void expect(const std::string& word) {
    Token t = next_word();
    if (t.text != word) throw ParseError(t.line, t.col, "expected '" + word + "'");
  }
};

std::vector<std::string> read_line_words(Cursor& cur) {
  std::vector<std::string> words;
  while (!cur.done() && cur.peek().text != "\n") words.push_back(cur.next().text);
  return words;
}

int element_index(const std::vector<std::string>& elements, const Token& t) {
  auto it = std::find(elements.begin(), elements.end(), t.text);
  if (it == elements.end())
    throw ParseError(t.line, t.col, "unknown element label '" + t.text + "'");
  return static_cast<int>(it - elements.begin());
}

AlgebraDocument parse_algebra(Cursor& cur, std::string name,
                              std::vector<std::string> elements) {
  const int n = static_cast<int>(elements.size());
  Signature sig;
  std::vector<std::vector<int>> tables;
  while (true) {
    cur.skip_newlines();
    if (cur.done()) break;
    Token t = cur.next();
    if (t.text != "op")
      throw ParseError(t.line, t.col, "expected 'op <name>/<arity>:'");
    Token decl = cur.next();
    std::string d = decl.text;
    bool trailing_colon = !d.empty() && d.back() == ':';
    if (trailing_colon) d.pop_back();
    auto slash = d.rfind('/');
    if (slash == std::string::npos)
      throw ParseError(decl.line, decl.col, "operation needs '<name>/<arity>'");
    std::string op_name = d.substr(0, slash);
    int arity = 0;
    try {
      arity = std::stoi(d.substr(slash + 1));
    } catch (...) {
      throw ParseError(decl.line, decl.col, "bad arity in '" + decl.text + "'");
    }
    if (!trailing_colon) cur.expect(":");
    if (op_name.empty() || arity < 0)
      throw ParseError(decl.line, decl.col, "bad operation declaration");
    sig.ops.push_back({op_name, arity});

    size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<size_t>(n);
    std::vector<int> table;
    table.reserve(total);
    while (table.size() < total) {
      Token e = cur.next_word();
      if (e.text == "op")
        throw ParseError(e.line, e.col,
                         "table for " + op_name + " is incomplete");
      table.push_back(element_index(elements, e));
    }
    tables.push_back(std::move(table));
  }

  AlgebraDocument doc;
  doc.kind = DocumentKind::algebra;
  doc.name = name;
  doc.algebra = std::make_shared<FiniteAlgebra>(name, std::move(elements), std::move(sig),
                                                std::move(tables));
  return doc;
}

AlgebraDocument parse_structure(Cursor& cur, std::string name,
                                std::vector<std::string> elements) {
  const int n = static_cast<int>(elements.size());
  cur.expect("leq:");
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    cur.skip_newlines();
    if (cur.done()) throw ParseError(0, 0, "missing 'comm:' section");
    if (cur.peek().text == "comm:") break;
    Token a = cur.next();
    int ia = element_index(elements, a);
    Token b = cur.next();
    if (b.text == "\n") throw ParseError(a.line, a.col, "leq line needs two labels");
    int ib = element_index(elements, b);
    pairs.emplace_back(ia, ib);
  }
  cur.expect("comm:");

  BoundedLattice lat;
  try {
    lat = BoundedLattice::from_covers(elements, pairs);
  } catch (const LatticeError& e) {
    throw ParseError(0, 0, std::string("order is not a lattice: ") + e.what());
  }

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < table.size(); ++i) {
    Token e = cur.next_word();
    table[i] = element_index(elements, e);
  }
  cur.skip_newlines();
  if (!cur.done()) {
    Token t = cur.next();
    throw ParseError(t.line, t.col, "trailing input after the commutator table");
  }

  AlgebraDocument doc;
  doc.kind = DocumentKind::commutator_structure;
  doc.name = name;
  try {
    doc.structure =
        std::make_shared<CommutatorStructure>(fixture_structure(std::move(lat), std::move(table)));
  } catch (const LatticeError& e) {
    throw ParseError(0, 0, e.what());
  }
  return doc;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  auto toks = tokenize(text);
  Cursor cur{toks};

  cur.expect("kind:");
  Token kind = cur.next();
  cur.expect("name:");
  Token name = cur.next();
  cur.expect("elements:");
  auto elements = read_line_words(cur);
  if (elements.empty()) throw ParseError(name.line, name.col, "no elements declared");
  {
    std::vector<std::string> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(name.line, name.col, "element labels must be unique");
  }

  if (kind.text == "algebra") {
    try {
      return parse_algebra(cur, name.text, std::move(elements));
    } catch (const AlgebraError& e) {
      throw ParseError(0, 0, e.what());
    }
  }
  if (kind.text == "commutator-structure")
    return parse_structure(cur, name.text, std::move(elements));
  throw ParseError(kind.line, kind.col, "kind must be 'algebra' or 'commutator-structure'");
}

}  // namespace retic
