#include "opd/dsl.hpp"

#include <cctype>
#include <sstream>

namespace opd {

namespace {

struct Token {
  enum Kind { ident, number, punct, eof } kind = eof;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.line, tok_.col);
  }

 private:
  void advance() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::eof;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        bump();
      tok_.kind = Token::ident;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        bump();
      tok_.kind = Token::number;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    tok_.kind = Token::punct;
    tok_.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

bool is_punct(const Token& t, const char* p) { return t.kind == Token::punct && t.text == p; }
bool is_ident(const Token& t, const char* p) { return t.kind == Token::ident && t.text == p; }

void expect_punct(Lexer& lx, const char* p) {
  if (!is_punct(lx.peek(), p)) lx.fail(std::string("'") + p + "' expected");
  lx.next();
}

std::string expect_ident(Lexer& lx, const char* what) {
  if (lx.peek().kind != Token::ident) lx.fail(std::string(what) + " expected");
  return lx.next().text;
}

Rat expect_number(Lexer& lx) {
  bool neg = false;
  if (is_punct(lx.peek(), "-")) {
    neg = true;
    lx.next();
  }
  if (lx.peek().kind != Token::number) lx.fail("number expected");
  Token t = lx.next();
  Rat r;
  try {
    r = rat_parse(t.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), t.line, t.col);
  }
  return neg ? -r : r;
}

// Generator-involution declaration flavors.
struct Decl {
  enum Kind { sym, antisym, pair, matrixrow } kind = sym;
  std::string partner;
  std::vector<Rat> row;
};

TreePtr parse_app(Lexer& lx, const std::vector<std::string>& names, Mode mode);

TreePtr parse_arg(Lexer& lx, const std::vector<std::string>& names, Mode mode) {
  const Token& t = lx.peek();
  if (t.kind != Token::ident) lx.fail("argument expected");
  if (t.text == "x" || t.text == "y" || t.text == "z") {
    int leaf = t.text == "x" ? 1 : t.text == "y" ? 2 : 3;
    lx.next();
    return make_leaf(leaf);
  }
  return parse_app(lx, names, mode);
}

TreePtr parse_app(Lexer& lx, const std::vector<std::string>& names, Mode mode) {
  Token t = lx.peek();
  std::string name = expect_ident(lx, "operation name");
  int gen = -1;
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) gen = static_cast<int>(i);
  if (gen < 0) throw ParseError("unknown operation '" + name + "'", t.line, t.col);
  expect_punct(lx, "(");
  TreePtr l = parse_arg(lx, names, mode);
  expect_punct(lx, ",");
  TreePtr r = parse_arg(lx, names, mode);
  expect_punct(lx, ")");
  try {
    return graft(l, gen, r);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), t.line, t.col);
  }
}

Vec parse_rel(Lexer& lx, const GenSpace& gens) {
  Vec acc(static_cast<size_t>(w3_dim(gens)), Rat(0));
  bool first = true;
  for (;;) {
    Rat sign(1);
    if (is_punct(lx.peek(), "-")) {
      sign = -1;
      lx.next();
    } else if (is_punct(lx.peek(), "+")) {
      lx.next();
    } else if (!first) {
      break;
    }
    first = false;
    Rat coeff = sign;
    if (lx.peek().kind == Token::number) {
      coeff = sign * expect_number(lx);
      expect_punct(lx, "*");
    }
    Token pos = lx.peek();
    TreePtr t = parse_app(lx, gens.names, gens.mode);
    if (count_vertices(t) != 2 || leaf_labels(t) != std::set<int>{1, 2, 3})
      throw ParseError("relation monomial must use each of x, y, z exactly once", pos.line,
                       pos.col);
    Vec v;
    try {
      v = normalize_weight3(t, gens);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), pos.line, pos.col);
    }
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += coeff * v[i];
  }
  return acc;
}

NamedPresentation parse_operad_block(Lexer& lx) {
  Token head = lx.peek();
  lx.next(); // "operad"
  std::string name = expect_ident(lx, "operad name");
  expect_punct(lx, "{");
  Mode mode = Mode::symmetric;
  if (is_ident(lx.peek(), "nonsymmetric")) {
    lx.next();
    mode = Mode::nonsymmetric;
    while (is_punct(lx.peek(), ";")) lx.next();
  }
  std::vector<std::string> names;
  std::vector<Decl> decls;
  auto find = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  };
  while (is_ident(lx.peek(), "op")) {
    Token pos = lx.next();
    std::string op = expect_ident(lx, "operation name");
    int idx = find(op);
    bool preexisting = idx >= 0;
    if (!preexisting) {
      names.push_back(op);
      decls.emplace_back();
      idx = static_cast<int>(names.size()) - 1;
    }
    if (mode == Mode::nonsymmetric) {
      if (preexisting) throw ParseError("operation '" + op + "' declared twice", pos.line, pos.col);
      while (is_punct(lx.peek(), ";")) lx.next();
      continue;
    }
    if (is_ident(lx.peek(), "sym")) {
      lx.next();
      if (preexisting) throw ParseError("operation '" + op + "' declared twice", pos.line, pos.col);
      decls[idx].kind = Decl::sym;
    } else if (is_ident(lx.peek(), "antisym")) {
      lx.next();
      if (preexisting) throw ParseError("operation '" + op + "' declared twice", pos.line, pos.col);
      decls[idx].kind = Decl::antisym;
    } else if (is_ident(lx.peek(), "pair")) {
      lx.next();
      std::string partner = expect_ident(lx, "partner name");
      if (preexisting) {
        // the partner half of an earlier pair declaration
        if (decls[idx].kind != Decl::pair || decls[idx].partner != partner)
          throw ParseError("operation '" + op + "' declared twice", pos.line, pos.col);
      } else {
        decls[idx].kind = Decl::pair;
        decls[idx].partner = partner;
        if (find(partner) < 0) {
          // introduce the partner adjacently
          names.push_back(partner);
          Decl d;
          d.kind = Decl::pair;
          d.partner = op;
          decls.push_back(std::move(d));
        }
      }
    } else if (is_ident(lx.peek(), "matrix")) {
      lx.next();
      if (preexisting) throw ParseError("operation '" + op + "' declared twice", pos.line, pos.col);
      decls[idx].kind = Decl::matrixrow;
      expect_punct(lx, "[");
      for (;;) {
        decls[idx].row.push_back(expect_number(lx));
        if (is_punct(lx.peek(), ",")) {
          lx.next();
          continue;
        }
        break;
      }
      expect_punct(lx, "]");
    } else {
      lx.fail("symmetry declaration (sym | antisym | pair NAME | matrix [...]) expected");
    }
    while (is_punct(lx.peek(), ";")) lx.next();
  }
  const int n = static_cast<int>(names.size());
  if (n == 0) throw ParseError("operad '" + name + "' declares no operations", head.line, head.col);
  GenSpace gens;
  gens.names = names;
  gens.tags.assign(names.size(), "");
  gens.mode = mode;
  if (mode == Mode::symmetric) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i) {
      const Decl& d = decls[static_cast<size_t>(i)];
      switch (d.kind) {
        case Decl::sym: a.at(i, i) = 1; break;
        case Decl::antisym: a.at(i, i) = -1; break;
        case Decl::pair: {
          int j = find(d.partner);
          a.at(i, j) = 1;
          break;
        }
        case Decl::matrixrow: {
          if (static_cast<int>(d.row.size()) != n)
            throw ParseError("matrix row for '" + names[static_cast<size_t>(i)] + "' must have " +
                                 std::to_string(n) + " entries",
                             head.line, head.col);
          for (int j = 0; j < n; ++j) a.at(i, j) = d.row[static_cast<size_t>(j)];
          break;
        }
      }
    }
    gens.action = std::move(a);
  }
  try {
    gens.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), head.line, head.col);
  }
  std::vector<Vec> rels;
  while (is_ident(lx.peek(), "rel")) {
    lx.next();
    rels.push_back(parse_rel(lx, gens));
    while (is_punct(lx.peek(), ";")) lx.next();
  }
  expect_punct(lx, "}");
  NamedPresentation out;
  out.name = std::move(name);
  out.pres = make_presentation(std::move(gens), rels);
  return out;
}

} // namespace

std::vector<NamedPresentation> parse_operads(const std::string& text) {
  Lexer lx(text);
  std::vector<NamedPresentation> out;
  while (lx.peek().kind != Token::eof) {
    if (!is_ident(lx.peek(), "operad")) lx.fail("'operad' expected");
    out.push_back(parse_operad_block(lx));
  }
  if (out.empty()) throw ParseError("no operad block found", 1, 1);
  return out;
}

namespace {

std::string app_str(const GenSpace& g, int idx) {
  const int n = g.size();
  const int u = idx / (n * n);
  const int i = idx % (n * n) / n;
  const int j = idx % n;
  const std::string& oi = g.names[i];
  const std::string& oj = g.names[j];
  if (g.mode == Mode::nonsymmetric)
    return u == 0 ? oi + "(" + oj + "(x,y),z)" : oi + "(x," + oj + "(y,z))";
  switch (u) {
    case 0: return oi + "(" + oj + "(x,y),z)";
    case 1: return oi + "(" + oj + "(y,z),x)";
    default: return oi + "(" + oj + "(z,x),y)";
  }
}

} // namespace

std::string print_operad(const std::string& name, const Presentation& p) {
  const GenSpace& g = p.gens;
  const int n = g.size();
  std::ostringstream os;
  os << "operad " << name << " {\n";
  if (g.mode == Mode::nonsymmetric) {
    os << "  nonsymmetric;\n";
    for (int i = 0; i < n; ++i) os << "  op " << g.names[i] << ";\n";
  } else {
    const Mat& a = *g.action;
    auto unit = [&](int i) {
      int j = -1;
      for (int k = 0; k < n; ++k) {
        if (a.at(i, k) == 0) continue;
        if (j >= 0) return -1;
        if (a.at(i, k) != 1 && a.at(i, k) != -1) return -1;
        j = k;
      }
      return j;
    };
    for (int i = 0; i < n; ++i) {
      int j = unit(i);
      os << "  op " << g.names[i] << " ";
      if (j == i && a.at(i, i) == 1) {
        os << "sym";
      } else if (j == i && a.at(i, i) == -1) {
        os << "antisym";
      } else if (j >= 0 && a.at(i, j) == 1 && (j == i + 1 || j == i - 1) && unit(j) == i &&
                 a.at(j, i) == 1) {
        os << "pair " << g.names[j];
      } else {
        os << "matrix [";
        for (int k = 0; k < n; ++k) {
          if (k) os << ",";
          os << rat_str(a.at(i, k));
        }
        os << "]";
      }
      os << ";\n";
    }
  }
  for (int r = 0; r < p.relations.rank(); ++r) {
    os << "  rel ";
    bool first = true;
    for (int idx = 0; idx < w3_dim(g); ++idx) {
      const Rat& c = p.relations.basis.at(r, idx);
      if (c == 0) continue;
      if (first) {
        // RREF pivots are 1, so the leading coefficient is positive
        if (c != 1) os << rat_str(c) << "*";
      } else if (c == 1) {
        os << " + ";
      } else if (c == -1) {
        os << " - ";
      } else if (c > 0) {
        os << " + " << rat_str(c) << "*";
      } else {
        os << " - " << rat_str(-c) << "*";
      }
      os << app_str(g, idx);
      first = false;
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::vector<Rat> parse_rat_array(Lexer& lx, int expected) {
  expect_punct(lx, "[");
  std::vector<Rat> out;
  if (!is_punct(lx.peek(), "]")) {
    for (;;) {
      out.push_back(expect_number(lx));
      if (is_punct(lx.peek(), ",")) {
        lx.next();
        continue;
      }
      break;
    }
  }
  Token pos = lx.peek();
  expect_punct(lx, "]");
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(out.size()),
                     pos.line, pos.col);
  return out;
}

NamedAlgebra parse_algebra_block(Lexer& lx) {
  lx.next(); // "algebra"
  NamedAlgebra out;
  out.name = expect_ident(lx, "algebra name");
  expect_punct(lx, "{");
  if (!is_ident(lx.peek(), "dim")) lx.fail("'dim' expected");
  Token dimpos = lx.next();
  Rat dr = expect_number(lx);
  if (denominator(dr) != 1 || dr <= 0)
    throw ParseError("dimension must be a positive integer", dimpos.line, dimpos.col);
  const int d = static_cast<int>(numerator(dr));
  out.alg.dim = d;
  while (is_punct(lx.peek(), ";")) lx.next();
  while (lx.peek().kind == Token::ident &&
         (lx.peek().text == "op" || lx.peek().text == "map")) {
    bool is_op = lx.peek().text == "op";
    lx.next();
    std::string name = expect_ident(lx, is_op ? "operation name" : "map name");
    if (is_op) {
      if (!is_ident(lx.peek(), "tensor")) lx.fail("'tensor' expected");
      lx.next();
      std::vector<Rat> tensor;
      expect_punct(lx, "[");
      for (int i = 0; i < d; ++i) {
        if (i) expect_punct(lx, ",");
        expect_punct(lx, "[");
        for (int j = 0; j < d; ++j) {
          if (j) expect_punct(lx, ",");
          auto row = parse_rat_array(lx, d);
          tensor.insert(tensor.end(), row.begin(), row.end());
        }
        expect_punct(lx, "]");
      }
      expect_punct(lx, "]");
      out.alg.add_op(name, std::move(tensor));
    } else {
      if (!is_ident(lx.peek(), "matrix")) lx.fail("'matrix' expected");
      lx.next();
      Mat m(d, d);
      expect_punct(lx, "[");
      for (int i = 0; i < d; ++i) {
        if (i) expect_punct(lx, ",");
        auto row = parse_rat_array(lx, d);
        for (int j = 0; j < d; ++j) m.at(i, j) = row[static_cast<size_t>(j)];
      }
      expect_punct(lx, "]");
      out.maps[name] = std::move(m);
    }
    while (is_punct(lx.peek(), ";")) lx.next();
  }
  expect_punct(lx, "}");
  return out;
}

} // namespace

std::vector<NamedAlgebra> parse_algebras(const std::string& text) {
  Lexer lx(text);
  std::vector<NamedAlgebra> out;
  while (lx.peek().kind != Token::eof) {
    if (!is_ident(lx.peek(), "algebra")) lx.fail("'algebra' expected");
    out.push_back(parse_algebra_block(lx));
  }
  if (out.empty()) throw ParseError("no algebra block found", 1, 1);
  return out;
}

} // namespace opd
