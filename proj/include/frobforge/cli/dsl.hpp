#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "frobforge/mod/complex.hpp"

namespace frobforge::dsl {

// Grammar:
//
//   program  := stmt*
//   stmt     := ring | module | complex
//   ring     := 'ring' NAME '=' 'char' INT 'vars' '[' NAME (',' NAME)* ']'
//               ['order' ('grevlex' | 'lex')] ['ideal' '(' [poly (',' poly)*] ')']
//   module   := 'module' NAME 'over' NAME '=' ('coker' matrix | 'residue' | 'free' INT)
//   complex  := 'complex' NAME 'over' NAME '=' '[' matrix (',' matrix)* ']'
//   matrix   := '[' row (',' row)* ']' | 'zeros' '(' INT ',' INT ')'
//   row      := '[' poly (',' poly)* ']'
//   poly     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ['^' INT]
//   atom     := INT | NAME | '(' poly ')'
//
// Whitespace and newlines are insignificant; '#' starts a comment. Complex
// maps are listed from the highest homological degree down.

struct Token {
  enum Kind { name, integer, symbol, end } kind;
  std::string text;
  std::size_t line, column;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::name, src.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::integer, src.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string_view("[](),=+-*^").find(c) != std::string_view::npos) {
      out.push_back({Token::symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::end, "", line, col});
  return out;
}

struct RingDecl {
  std::string name;
  RingPtr ring;
};

struct ModuleDecl {
  enum Kind { coker, residue, free };
  std::string name;
  std::string ring;
  Kind kind;
  ModuleMap matrix;  // coker: the presentation as written (reduced mod I)
  std::size_t rank;  // free
  PresentedModule module;
};

struct ComplexDecl {
  std::string name;
  std::string ring;
  std::vector<ModuleMap> maps_high_to_low;
  FreeComplex complex;
};

struct Document {
  std::vector<RingDecl> rings;
  std::vector<ModuleDecl> modules;
  std::vector<ComplexDecl> complexes;

  const RingDecl* find_ring(const std::string& n) const {
    for (const auto& r : rings) {
      if (r.name == n) return &r;
    }
    return nullptr;
  }
  const ModuleDecl* find_module(const std::string& n) const {
    for (const auto& m : modules) {
      if (m.name == n) return &m;
    }
    return nullptr;
  }
  const ComplexDecl* find_complex(const std::string& n) const {
    for (const auto& c : complexes) {
      if (c.name == n) return &c;
    }
    return nullptr;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  Document parse() {
    Document doc;
    while (peek().kind != Token::end) {
      const Token& t = peek();
      if (is_word("ring")) {
        parse_ring(doc);
      } else if (is_word("module")) {
        parse_module(doc);
      } else if (is_word("complex")) {
        parse_complex(doc);
      } else {
        fail(t, "expected 'ring', 'module' or 'complex', found " + describe(t));
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool is_word(const char* w) const { return peek().kind == Token::name && peek().text == w; }
  bool is_symbol(char c) const { return peek().kind == Token::symbol && peek().text[0] == c; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  static std::string describe(const Token& t) {
    if (t.kind == Token::end) return "end of input";
    return "'" + t.text + "'";
  }

  void expect_word(const char* w) {
    if (!is_word(w)) fail(peek(), std::string("expected '") + w + "', found " + describe(peek()));
    take();
  }
  void expect_symbol(char c) {
    if (!is_symbol(c)) fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    take();
  }
  const Token& expect_name(const char* what) {
    if (peek().kind != Token::name) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  std::uint64_t expect_integer(const char* what) {
    if (peek().kind != Token::integer) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    const Token& t = take();
    if (t.text.size() > 18) fail(t, "integer " + t.text + " is too large");
    return std::stoull(t.text);
  }

  static bool reserved(const std::string& w) {
    static const char* words[] = {"ring", "module", "complex", "char", "vars", "order", "ideal", "over",
                                  "coker", "residue", "free", "zeros", "grevlex", "lex"};
    for (const char* k : words) {
      if (w == k) return true;
    }
    return false;
  }

  void check_fresh(const Document& doc, const Token& t) {
    if (reserved(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    if (doc.find_ring(t.text) || doc.find_module(t.text) || doc.find_complex(t.text)) {
      fail(t, "'" + t.text + "' is already declared");
    }
  }

  void parse_ring(Document& doc) {
    expect_word("ring");
    const Token& name = expect_name("a ring name");
    check_fresh(doc, name);
    expect_symbol('=');
    expect_word("char");
    const Token& pt = peek();
    std::uint64_t p = expect_integer("a prime characteristic");
    if (p > Prime::kMax || !Prime::is_prime(p)) fail(pt, "characteristic " + pt.text + " is not a prime below 2^31");
    expect_word("vars");
    expect_symbol('[');
    std::vector<std::string> vars;
    while (true) {
      const Token& v = expect_name("a variable name");
      if (reserved(v.text)) fail(v, "'" + v.text + "' is a reserved word");
      for (const auto& w : vars) {
        if (w == v.text) fail(v, "variable '" + v.text + "' is repeated");
      }
      vars.push_back(v.text);
      if (!is_symbol(',')) break;
      take();
    }
    expect_symbol(']');
    if (vars.size() > kMaxVars) fail(name, "at most " + std::to_string(kMaxVars) + " variables are supported");
    OrderKind kind = OrderKind::grevlex;
    if (is_word("order")) {
      take();
      const Token& o = expect_name("'grevlex' or 'lex'");
      if (o.text == "grevlex") {
        kind = OrderKind::grevlex;
      } else if (o.text == "lex") {
        kind = OrderKind::lex;
      } else {
        fail(o, "unknown monomial order '" + o.text + "'");
      }
    }
    auto base = make_poly_ring(p, vars, kind);
    std::vector<Polynomial> gens;
    if (is_word("ideal")) {
      take();
      expect_symbol('(');
      if (!is_symbol(')')) {
        while (true) {
          gens.push_back(parse_poly(*base, base));
          if (!is_symbol(',')) break;
          take();
        }
      }
      expect_symbol(')');
    }
    RingPtr ring;
    try {
      Ideal I(base, gens);
      ring = std::make_shared<const QuotientRing>(base, std::move(I));
    } catch (const DomainError& e) {
      fail(name, "ring '" + name.text + "': " + e.what());
    }
    if (ring->is_zero_ring()) fail(name, "ring '" + name.text + "' is the zero ring (1 lies in the ideal)");
    doc.rings.push_back({name.text, ring});
  }

  const RingDecl& ring_ref(const Document& doc) {
    const Token& t = expect_name("a ring name");
    const RingDecl* r = doc.find_ring(t.text);
    if (r == nullptr) fail(t, "unknown ring '" + t.text + "'");
    return *r;
  }

  void parse_module(Document& doc) {
    expect_word("module");
    const Token& name = expect_name("a module name");
    check_fresh(doc, name);
    expect_word("over");
    const RingDecl& r = ring_ref(doc);
    expect_symbol('=');
    ModuleDecl m{name.text, r.name, ModuleDecl::coker, ModuleMap(), 0, PresentedModule()};
    if (is_word("coker")) {
      take();
      m.matrix = parse_matrix(r.ring);
      m.module = PresentedModule(m.matrix);
    } else if (is_word("residue")) {
      take();
      m.kind = ModuleDecl::residue;
      m.module = PresentedModule::residue_field(r.ring);
    } else if (is_word("free")) {
      take();
      m.kind = ModuleDecl::free;
      const Token& t = peek();
      m.rank = expect_integer("a rank");
      if (m.rank > 4096) fail(t, "free rank " + t.text + " is too large");
      m.module = PresentedModule::free(r.ring, m.rank);
    } else {
      fail(peek(), "expected 'coker', 'residue' or 'free', found " + describe(peek()));
    }
    doc.modules.push_back(std::move(m));
  }

  void parse_complex(Document& doc) {
    expect_word("complex");
    const Token& name = expect_name("a complex name");
    check_fresh(doc, name);
    expect_word("over");
    const RingDecl& r = ring_ref(doc);
    expect_symbol('=');
    expect_symbol('[');
    ComplexDecl c{name.text, r.name, {}, FreeComplex()};
    while (true) {
      c.maps_high_to_low.push_back(parse_matrix(r.ring));
      if (!is_symbol(',')) break;
      take();
    }
    expect_symbol(']');
    try {
      c.complex = FreeComplex::from_maps_descending(r.ring, c.maps_high_to_low);
    } catch (const StructuralError& e) {
      fail(name, "complex '" + name.text + "': " + e.what());
    }
    doc.complexes.push_back(std::move(c));
  }

  ModuleMap parse_matrix(const RingPtr& ring) {
    if (is_word("zeros")) {
      take();
      expect_symbol('(');
      std::size_t rows = expect_integer("a row count");
      expect_symbol(',');
      std::size_t cols = expect_integer("a column count");
      const Token& close = peek();
      expect_symbol(')');
      if (rows * cols > 1'000'000 || rows > 4096 || cols > 4096) fail(close, "zero matrix is too large");
      return ModuleMap(ring, rows, cols);
    }
    expect_symbol('[');
    std::vector<std::vector<Polynomial>> rows;
    while (true) {
      const Token& row_start = peek();
      expect_symbol('[');
      std::vector<Polynomial> row;
      while (true) {
        row.push_back(parse_poly(ring->poly(), ring->base()));
        if (!is_symbol(',')) break;
        take();
      }
      expect_symbol(']');
      if (!rows.empty() && row.size() != rows[0].size()) {
        fail(row_start, "row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(rows[0].size()));
      }
      rows.push_back(std::move(row));
      if (!is_symbol(',')) break;
      take();
    }
    expect_symbol(']');
    return ModuleMap::from_rows(ring, rows);
  }

  Polynomial parse_poly(const PolyRing& ring, const PolyRingPtr& base) {
    bool negate = false;
    if (is_symbol('-')) {
      take();
      negate = true;
    }
    Polynomial acc = parse_term(ring, base);
    if (negate) acc = -acc;
    while (is_symbol('+') || is_symbol('-')) {
      bool minus = take().text == "-";
      Polynomial t = parse_term(ring, base);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_term(const PolyRing& ring, const PolyRingPtr& base) {
    Polynomial acc = parse_factor(ring, base);
    while (is_symbol('*')) {
      take();
      acc = acc * parse_factor(ring, base);
    }
    return acc;
  }

  Polynomial parse_factor(const PolyRing& ring, const PolyRingPtr& base) {
    Polynomial a = parse_atom(ring, base);
    if (is_symbol('^')) {
      take();
      const Token& t = peek();
      std::uint64_t e = expect_integer("an exponent");
      if (e > 1'000'000 || (a.size() > 1 && e > 256)) fail(t, "exponent " + t.text + " is too large");
      try {
        a = a.pow(e);
      } catch (const ResourceError& err) {
        fail(t, err.what());
      }
    }
    return a;
  }

  Polynomial parse_atom(const PolyRing& ring, const PolyRingPtr& base) {
    const Token& t = peek();
    if (t.kind == Token::integer) {
      take();
      std::uint64_t v = 0;
      for (char c : t.text) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % ring.characteristic();
      return Polynomial::constant(base, static_cast<std::int64_t>(v));
    }
    if (t.kind == Token::name) {
      take();
      for (std::size_t i = 0; i < ring.vars.size(); ++i) {
        if (ring.vars[i] == t.text) return Polynomial::variable(base, i);
      }
      fail(t, "unknown variable '" + t.text + "'");
    }
    if (is_symbol('(')) {
      take();
      Polynomial inner = parse_poly(ring, base);
      expect_symbol(')');
      return inner;
    }
    fail(t, "expected a polynomial, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Document parse(const std::string& src) { return Parser(src).parse(); }

/// Canonical DSL text for a document; parse(print(d)) reproduces d.
inline std::string print(const Document& doc) {
  std::string out;
  for (const auto& r : doc.rings) {
    const auto& P = r.ring->poly();
    out += "ring " + r.name + " = char " + std::to_string(P.characteristic()) + " vars [";
    for (std::size_t i = 0; i < P.vars.size(); ++i) out += (i ? ", " : "") + P.vars[i];
    out += "] order " + std::string(to_string(P.order.kind())) + " ideal (";
    const auto& gens = r.ring->ideal().generators();
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].to_string();
    out += ")\n";
  }
  for (const auto& m : doc.modules) {
    out += "module " + m.name + " over " + m.ring + " = ";
    switch (m.kind) {
      case ModuleDecl::coker:
        out += "coker " + m.matrix.to_string();
        break;
      case ModuleDecl::residue:
        out += "residue";
        break;
      case ModuleDecl::free:
        out += "free " + std::to_string(m.rank);
        break;
    }
    out += "\n";
  }
  for (const auto& c : doc.complexes) {
    out += "complex " + c.name + " over " + c.ring + " = [";
    for (std::size_t i = 0; i < c.maps_high_to_low.size(); ++i) out += (i ? ", " : "") + c.maps_high_to_low[i].to_string();
    out += "]\n";
  }
  return out;
}

/// Structural equality used by the round-trip property.
inline bool same_structure(const Document& a, const Document& b) {
  if (a.rings.size() != b.rings.size() || a.modules.size() != b.modules.size() ||
      a.complexes.size() != b.complexes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rings.size(); ++i) {
    const auto& x = *a.rings[i].ring;
    const auto& y = *b.rings[i].ring;
    if (a.rings[i].name != b.rings[i].name || !(x.poly() == y.poly()) ||
        x.ideal().generators() != y.ideal().generators()) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.modules.size(); ++i) {
    const auto& x = a.modules[i];
    const auto& y = b.modules[i];
    if (x.name != y.name || x.ring != y.ring || x.kind != y.kind || x.rank != y.rank) return false;
    if (x.kind == ModuleDecl::coker && !(x.matrix == y.matrix)) return false;
    if (!(x.module == y.module)) return false;
  }
  for (std::size_t i = 0; i < a.complexes.size(); ++i) {
    const auto& x = a.complexes[i];
    const auto& y = b.complexes[i];
    if (x.name != y.name || x.ring != y.ring || x.maps_high_to_low != y.maps_high_to_low) return false;
  }
  return true;
}

}  // namespace frobforge::dsl
