#include "casimir/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace casimir {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_ident(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), is_ident_char);
}

std::string strip_comment(std::string line) {
  if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
  return line;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// ---- expression tokens ----

enum class Tok { number, ident, ddx, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;  // number literal, identifier, or d/d target
  int line;
};

struct Lexer {
  std::string file;
  std::vector<Token> toks;
  size_t pos = 0;

  void tokenize(std::string_view s, int line) {
    size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (c == 'd' && i + 2 < s.size() && s[i + 1] == '/' && s[i + 2] == 'd' &&
          i + 3 < s.size() && is_ident_start(s[i + 3])) {
        size_t j = i + 3;
        while (j < s.size() && is_ident_char(s[j])) ++j;
        toks.push_back({Tok::ddx, std::string(s.substr(i + 3, j - i - 3)), line});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j < s.size() && s[j] == '/') {
          size_t k = j + 1;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == j + 1)
            throw ParseError(file, line, "expected digits after '/' in rational");
          j = k;
        }
        toks.push_back({Tok::number, std::string(s.substr(i, j - i)), line});
        i = j;
        continue;
      }
      if (is_ident_start(c)) {
        size_t j = i;
        while (j < s.size() && is_ident_char(s[j])) ++j;
        toks.push_back({Tok::ident, std::string(s.substr(i, j - i)), line});
        i = j;
        continue;
      }
      switch (c) {
        case '+': toks.push_back({Tok::plus, "+", line}); break;
        case '-': toks.push_back({Tok::minus, "-", line}); break;
        case '*': toks.push_back({Tok::star, "*", line}); break;
        case '^': toks.push_back({Tok::caret, "^", line}); break;
        case '(': toks.push_back({Tok::lparen, "(", line}); break;
        case ')': toks.push_back({Tok::rparen, ")", line}); break;
        default:
          throw ParseError(file, line, std::string("unexpected character '") + c + "'");
      }
      ++i;
    }
  }

  void finish(int line) { toks.push_back({Tok::end, "", line}); }

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool accept(Tok k) {
    if (toks[pos].kind != k) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(file, peek().line, msg);
  }
};

int parse_exponent(Lexer& lx) {
  if (!lx.accept(Tok::caret)) return 1;
  if (lx.peek().kind != Tok::number || lx.peek().text.find('/') != std::string::npos)
    lx.fail("expected integer exponent after '^'");
  Token t = lx.next();
  try {
    return std::stoi(t.text);
  } catch (const std::exception&) {
    throw ParseError(lx.file, t.line, "exponent out of range");
  }
}

// ---- enveloping-algebra expressions ----

// term := factor ('*' factor)* ; factor := rational | <gen>['^' k]
// expr := ['+'|'-'] term (('+'|'-') term)*
UEAElement parse_uea_tokens(Lexer& lx, const LieAlgebra& a) {
  UEAElement sum;
  bool first = true;
  while (lx.peek().kind != Tok::end) {
    Rational sign(1);
    if (lx.accept(Tok::minus))
      sign = Rational(-1);
    else if (!lx.accept(Tok::plus) && !first)
      lx.fail("expected '+' or '-' between terms");
    first = false;

    Rational coeff(1);
    std::vector<int> word;
    for (;;) {
      const Token& t = lx.peek();
      if (t.kind == Tok::number) {
        coeff *= Rational::parse(lx.next().text);
      } else if (t.kind == Tok::ident) {
        Token id = lx.next();
        auto ix = a.index_of(id.text);
        if (!ix)
          throw ParseError(lx.file, id.line, "unknown generator '" + id.text + "'");
        int exp = parse_exponent(lx);
        if (exp < 0) throw ParseError(lx.file, id.line, "negative exponent");
        word.insert(word.end(), exp, *ix);
      } else {
        lx.fail("expected a rational or generator");
      }
      if (!lx.accept(Tok::star)) break;
    }
    if (static_cast<int>(word.size()) > uea_degree_cap())
      throw ParseError(lx.file, lx.peek().line, "term exceeds the degree cap");
    UEAElement t = normal_order(a, word);
    t *= sign * coeff;
    sum += t;
  }
  return sum;
}

}  // namespace

UEAElement parse_expression(std::string_view text, const LieAlgebra& a,
                            std::string_view filename, int line) {
  Lexer lx;
  lx.file = std::string(filename);
  lx.tokenize(text, line);
  lx.finish(line);
  if (lx.toks.size() == 1) throw ParseError(lx.file, line, "empty expression");
  return parse_uea_tokens(lx, a);
}

UEAElement parse_expression_file(const std::string& path, const LieAlgebra& a) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  Lexer lx;
  lx.file = path;
  std::string line;
  int ln = 0, last = 1;
  while (std::getline(in, line)) {
    ++ln;
    std::string body = strip_comment(line);
    if (!split_ws(body).empty()) last = ln;
    lx.tokenize(body, ln);
  }
  lx.finish(last);
  if (lx.toks.size() == 1) throw ParseError(path, last, "empty expression");
  UEAElement k = parse_uea_tokens(lx, a);
  return k;
}

std::string format_expression(const UEAElement& k, const LieAlgebra& a) {
  if (k.is_zero()) return "0";
  // Graded-lex descending: higher total degree first, then lexicographically
  // larger exponent vector first.
  std::vector<const std::pair<const Exponents, Rational>*> terms;
  for (const auto& t : k.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](const auto* x, const auto* y) {
    int dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::string out;
  for (const auto* t : terms) {
    const auto& [e, c] = *t;
    std::string body;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += a.basis_name(static_cast<int>(i));
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    Rational ac = abs(c);
    std::string lead;
    if (body.empty())
      lead = ac.str();
    else if (!ac.is_one())
      lead = ac.str() + "*";
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    out += lead + body;
  }
  return out;
}

// ---- algebra files ----

namespace {

struct AlgebraLine {
  int line;
  std::vector<std::string> fields;
  std::string raw;
};

}  // namespace

LieAlgebra parse_algebra(std::istream& in, std::string_view filename) {
  const std::string file(filename);
  std::vector<AlgebraLine> lines;
  {
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
      ++ln;
      std::string body = strip_comment(raw);
      auto fields = split_ws(body);
      if (fields.empty()) continue;
      lines.push_back({ln, std::move(fields), std::move(body)});
    }
  }
  size_t at = 0;
  auto need = [&](const char* what) -> const AlgebraLine& {
    if (at >= lines.size())
      throw ParseError(file, lines.empty() ? 1 : lines.back().line,
                       std::string("missing ") + what + " line");
    return lines[at];
  };

  const AlgebraLine& al = need("'algebra'");
  if (al.fields[0] != "algebra" || al.fields.size() != 2)
    throw ParseError(file, al.line, "expected 'algebra <name>'");
  std::string name = al.fields[1];
  ++at;

  const AlgebraLine& dl = need("'dim'");
  if (dl.fields[0] != "dim" || dl.fields.size() != 2)
    throw ParseError(file, dl.line, "expected 'dim <N>'");
  int dim = 0;
  try {
    dim = std::stoi(dl.fields[1]);
  } catch (const std::exception&) {
    throw ParseError(file, dl.line, "dim is not an integer");
  }
  if (dim < 1) throw ParseError(file, dl.line, "dim must be >= 1");
  ++at;

  const AlgebraLine& bl = need("'basis'");
  if (bl.fields[0] != "basis")
    throw ParseError(file, bl.line, "expected 'basis <id> ...'");
  std::vector<std::string> basis(bl.fields.begin() + 1, bl.fields.end());
  if (static_cast<int>(basis.size()) != dim)
    throw ParseError(file, bl.line, "basis lists " + std::to_string(basis.size()) +
                                        " names but dim is " + std::to_string(dim));
  std::map<std::string, int> index;
  for (int i = 0; i < dim; ++i) {
    if (!valid_ident(basis[i]))
      throw ParseError(file, bl.line, "invalid identifier '" + basis[i] + "'");
    if (!index.emplace(basis[i], i).second)
      throw ParseError(file, bl.line, "duplicate basis name '" + basis[i] + "'");
  }
  ++at;

  // Temporary algebra with an empty table so bracket right-hand sides can be
  // parsed as degree-1 expressions over the basis.
  LieAlgebra frame(name, basis, {});

  LieAlgebra::Table table;
  std::map<std::pair<int, int>, std::pair<int, bool>> seen;  // pair -> (line, as-written orientation i<j?)
  for (; at < lines.size(); ++at) {
    const AlgebraLine& l = lines[at];
    if (l.fields[0] != "bracket")
      throw ParseError(file, l.line, "expected 'bracket <idA> <idB> = ...'");
    auto eq = l.raw.find('=');
    if (eq == std::string::npos)
      throw ParseError(file, l.line, "expected '=' in bracket line");
    auto head = split_ws(l.raw.substr(0, eq));
    if (head.size() != 3)
      throw ParseError(file, l.line, "expected 'bracket <idA> <idB> = ...'");
    auto ia = frame.index_of(head[1]);
    auto ib = frame.index_of(head[2]);
    if (!ia) throw ParseError(file, l.line, "unknown generator '" + head[1] + "'");
    if (!ib) throw ParseError(file, l.line, "unknown generator '" + head[2] + "'");
    if (*ia == *ib)
      throw ParseError(file, l.line,
                       "bracket of '" + head[1] + "' with itself is identically zero");

    UEAElement rhs = parse_expression(l.raw.substr(eq + 1), frame, file, l.line);
    BracketTerms terms;
    for (const auto& [e, c] : rhs.terms()) {
      if (total_degree(e) != 1)
        throw ParseError(file, l.line,
                         "bracket value must be a linear combination of generators");
      int k = static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin());
      terms.emplace_back(k, c);
    }

    int i = *ia, j = *ib;
    bool forward = i < j;
    if (!forward) {
      std::swap(i, j);
      for (auto& [k, c] : terms) c = -c;
    }
    auto key = std::make_pair(i, j);
    auto prev = seen.find(key);
    if (prev != seen.end()) {
      if (prev->second.second == forward)
        throw ParseError(file, l.line,
                         "duplicate bracket for (" + head[1] + ", " + head[2] +
                             "), first given on line " + std::to_string(prev->second.first));
      // Opposite orientation: allowed only when consistent with antisymmetry.
      if (table[key] != terms)
        throw ParseError(file, l.line,
                         "bracket contradicts the one on line " +
                             std::to_string(prev->second.first) + " under antisymmetry");
      continue;
    }
    seen.emplace(key, std::make_pair(l.line, forward));
    if (!terms.empty()) table[key] = std::move(terms);
  }

  return LieAlgebra(std::move(name), std::move(basis), std::move(table));
}

LieAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_algebra(in, path);
}

std::string serialize_algebra(const LieAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "dim " << a.dim() << "\n";
  out << "basis";
  for (const auto& b : a.basis()) out << " " << b;
  out << "\n";
  for (const auto& [pair, terms] : a.table()) {
    out << "bracket " << a.basis_name(pair.first) << " " << a.basis_name(pair.second)
        << " =";
    bool first = true;
    for (const auto& [k, c] : terms) {
      Rational ac = abs(c);
      out << (first ? (c.sign() < 0 ? " -" : " ") : (c.sign() < 0 ? " - " : " + "));
      if (!ac.is_one()) out << ac.str() << "*";
      out << a.basis_name(k);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

// ---- realisation files ----

namespace {

// expr := ['+'|'-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ['^' k] ; atom := rational | var | param | d/d<var> | (expr)
class WeylExprParser {
public:
  WeylExprParser(Lexer& lx, const std::vector<std::string>& vars,
                 const std::vector<std::string>& params)
      : lx_(lx), vars_(vars), params_(params) {}

  DifferentialOperator parse() {
    DifferentialOperator e = expr();
    if (lx_.peek().kind != Tok::end) lx_.fail("trailing input after expression");
    return e;
  }

private:
  int nv() const { return static_cast<int>(vars_.size()); }
  int np() const { return static_cast<int>(params_.size()); }

  DifferentialOperator expr() {
    Rational sign(1);
    if (lx_.accept(Tok::minus))
      sign = Rational(-1);
    else
      lx_.accept(Tok::plus);
    DifferentialOperator acc = term();
    acc *= sign;
    for (;;) {
      if (lx_.accept(Tok::plus))
        acc += term();
      else if (lx_.accept(Tok::minus))
        acc -= term();
      else
        return acc;
    }
  }

  DifferentialOperator term() {
    DifferentialOperator acc = factor();
    while (lx_.accept(Tok::star)) acc = weyl_multiply(acc, factor());
    return acc;
  }

  DifferentialOperator factor() {
    DifferentialOperator base = atom();
    int exp = parse_exponent(lx_);
    if (exp < 0) lx_.fail("negative exponent");
    if (exp == 1) return base;
    DifferentialOperator acc = DifferentialOperator::constant(nv(), np(), Rational(1));
    for (int i = 0; i < exp; ++i) acc = weyl_multiply(acc, base);
    return acc;
  }

  DifferentialOperator atom() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::number:
        return DifferentialOperator::constant(nv(), np(), Rational::parse(lx_.next().text));
      case Tok::ddx: {
        Token d = lx_.next();
        auto it = std::find(vars_.begin(), vars_.end(), d.text);
        if (it == vars_.end())
          throw ParseError(lx_.file, d.line, "d/d of unknown variable '" + d.text + "'");
        return DifferentialOperator::derivative(nv(), np(),
                                                static_cast<int>(it - vars_.begin()));
      }
      case Tok::ident: {
        Token id = lx_.next();
        if (auto it = std::find(vars_.begin(), vars_.end(), id.text); it != vars_.end())
          return DifferentialOperator::coordinate(nv(), np(),
                                                  static_cast<int>(it - vars_.begin()));
        if (auto it = std::find(params_.begin(), params_.end(), id.text);
            it != params_.end())
          return DifferentialOperator::coordinate(
              nv(), np(), nv() + static_cast<int>(it - params_.begin()));
        throw ParseError(lx_.file, id.line,
                         "unknown variable or parameter '" + id.text + "'");
      }
      case Tok::lparen: {
        lx_.next();
        DifferentialOperator e = expr();
        if (!lx_.accept(Tok::rparen)) lx_.fail("expected ')'");
        return e;
      }
      case Tok::minus: {
        lx_.next();
        DifferentialOperator e = factor();
        e *= Rational(-1);
        return e;
      }
      default:
        lx_.fail("expected a rational, variable, parameter, or d/d<var>");
    }
  }

  Lexer& lx_;
  const std::vector<std::string>& vars_;
  const std::vector<std::string>& params_;
};

}  // namespace

Realization parse_realization(std::istream& in, std::string_view filename,
                              const LieAlgebra& a) {
  const std::string file(filename);
  Realization r;
  r.algebra = a;

  std::string raw;
  int ln = 0;
  bool have_name = false, have_vars = false, have_params = false;
  std::vector<bool> mapped(a.dim(), false);
  int n_mapped = 0;
  int last_line = 1;

  while (std::getline(in, raw)) {
    ++ln;
    std::string body = strip_comment(raw);
    auto fields = split_ws(body);
    if (fields.empty()) continue;
    last_line = ln;
    const std::string& kw = fields[0];

    if (kw == "realization") {
      if (have_name) throw ParseError(file, ln, "duplicate 'realization' line");
      if (fields.size() != 2)
        throw ParseError(file, ln, "expected 'realization <name>'");
      r.name = fields[1];
      have_name = true;
    } else if (kw == "vars") {
      if (!have_name) throw ParseError(file, ln, "'vars' before 'realization'");
      if (have_vars) throw ParseError(file, ln, "duplicate 'vars' line");
      r.var_names.assign(fields.begin() + 1, fields.end());
      if (r.var_names.empty())
        throw ParseError(file, ln, "at least one variable is required");
      have_vars = true;
    } else if (kw == "params") {
      if (!have_vars) throw ParseError(file, ln, "'params' before 'vars'");
      if (have_params) throw ParseError(file, ln, "duplicate 'params' line");
      r.param_names.assign(fields.begin() + 1, fields.end());
      have_params = true;
    } else if (kw == "map") {
      if (!have_vars) throw ParseError(file, ln, "'map' before 'vars'");
      auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError(file, ln, "expected '=' in map line");
      auto head = split_ws(body.substr(0, eq));
      if (head.size() != 2) throw ParseError(file, ln, "expected 'map <generator> = ...'");
      auto ix = a.index_of(head[1]);
      if (!ix) throw ParseError(file, ln, "unknown generator '" + head[1] + "'");
      if (mapped[*ix])
        throw ParseError(file, ln, "duplicate map for generator '" + head[1] + "'");

      if (r.images.empty())
        r.images.assign(a.dim(), DifferentialOperator(static_cast<int>(r.var_names.size()),
                                                      static_cast<int>(r.param_names.size())));
      Lexer lx;
      lx.file = file;
      lx.tokenize(body.substr(eq + 1), ln);
      lx.finish(ln);
      WeylExprParser p(lx, r.var_names, r.param_names);
      DifferentialOperator img = p.parse();
      if (img.order() > 1)
        throw ParseError(file, ln, "image of '" + head[1] +
                                       "' has derivative order " +
                                       std::to_string(img.order()) + "; only order <= 1 is allowed");
      r.images[*ix] = std::move(img);
      mapped[*ix] = true;
      ++n_mapped;
    } else {
      throw ParseError(file, ln, "unknown directive '" + kw + "'");
    }
  }

  if (!have_name) throw ParseError(file, last_line, "missing 'realization' line");
  if (!have_vars) throw ParseError(file, last_line, "missing 'vars' line");
  {
    std::map<std::string, int> names;
    for (const auto& v : r.var_names) {
      if (!valid_ident(v)) throw ParseError(file, last_line, "invalid identifier '" + v + "'");
      if (!names.emplace(v, 0).second)
        throw ParseError(file, last_line, "duplicate variable '" + v + "'");
    }
    for (const auto& p : r.param_names) {
      if (!valid_ident(p)) throw ParseError(file, last_line, "invalid identifier '" + p + "'");
      if (!names.emplace(p, 0).second)
        throw ParseError(file, last_line, "name '" + p + "' is both a variable and a parameter");
    }
  }
  if (n_mapped != a.dim())
    for (int i = 0; i < a.dim(); ++i)
      if (!mapped[i])
        throw ParseError(file, last_line,
                         "no map for generator '" + a.basis_name(i) + "'");
  return r;
}

Realization parse_realization_file(const std::string& path, const LieAlgebra& a) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_realization(in, path, a);
}

// ---- weight tuples ----

WeightVector parse_weight_tuple(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c)); });
  WeightVector w;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string part = s.substr(i, j - i);
    if (part.empty()) throw std::invalid_argument("bad weight tuple '" + std::string(text) + "'");
    try {
      w.emplace_back(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight tuple '" + std::string(text) + "'");
    }
    if (j == s.size()) break;
    i = j + 1;
  }
  if (w.empty()) throw std::invalid_argument("empty weight tuple");
  return w;
}

std::string format_weight(const WeightVector& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace casimir
