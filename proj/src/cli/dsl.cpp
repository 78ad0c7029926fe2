#include "invcurve/cli/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace invcurve::dsl {

DslError::DslError(ErrorKind kind, int line, int column, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Symbol, Separator, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"vars", "params", "param", "with"};
  return k;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  int depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n' || c == ';') {
      if (c == ';' || depth == 0) out.push_back({Tok::Separator, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    if (std::string_view("+-*/^(),='").find(static_cast<char>(c)) != std::string_view::npos) {
      if (c == '(') ++depth;
      if (c == ')' && depth > 0) --depth;
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
      continue;
    }
    throw DslError(ErrorKind::SyntaxError, line, col,
                   "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

ExprPtr make(Expr::Kind kind, std::string text, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr,
             int exponent = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->text = std::move(text);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->exponent = exponent;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  SystemSpec system() {
    SystemSpec spec;
    std::vector<std::pair<Equation, Token>> eqs;
    while (true) {
      while (peek().kind == Tok::Separator) ++pos_;
      if (peek().kind == Tok::End) break;
      statement(spec, eqs);
      if (peek().kind != Tok::Separator && peek().kind != Tok::End) {
        fail("expected ';' or newline before '" + peek().text + "'");
      }
    }
    check(spec, eqs);
    return spec;
  }

  ExprPtr lone_expression() {
    while (peek().kind == Tok::Separator) ++pos_;
    ExprPtr e = expr();
    while (peek().kind == Tok::Separator) ++pos_;
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_symbol(const char* s) const { return peek().kind == Tok::Symbol && peek().text == s; }

  [[noreturn]] void fail(const std::string& message) const {
    throw DslError(ErrorKind::SyntaxError, peek().line, peek().column, message);
  }

  void expect(const char* s) {
    if (!at_symbol(s)) {
      fail(std::string("expected '") + s + "' but found " + (peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'"));
    }
    ++pos_;
  }

  std::string name() {
    if (peek().kind != Tok::Ident) fail("expected a name");
    if (keywords().count(peek().text) != 0) fail("'" + peek().text + "' is a reserved word");
    return next().text;
  }

  mpq_class rational() {
    bool negative = false;
    if (at_symbol("-")) {
      ++pos_;
      negative = true;
    }
    if (peek().kind != Tok::Number) fail("expected a rational literal");
    mpz_class num(next().text);
    mpz_class den = 1;
    if (at_symbol("/")) {
      ++pos_;
      if (peek().kind != Tok::Number) fail("expected a denominator");
      Token t = next();
      den = mpz_class(t.text);
      if (den == 0) throw DslError(ErrorKind::SyntaxError, t.line, t.column, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  void statement(SystemSpec& spec, std::vector<std::pair<Equation, Token>>& eqs) {
    Token head = peek();
    if (head.kind != Tok::Ident) fail("expected a declaration or an equation");
    if (head.text == "vars") {
      ++pos_;
      spec.variables.push_back(name());
      while (at_symbol(",")) {
        ++pos_;
        spec.variables.push_back(name());
      }
      return;
    }
    if (head.text == "params") {
      ++pos_;
      do {
        if (at_symbol(",")) ++pos_;
        ParamDecl p{name(), std::nullopt};
        if (at_symbol("=")) {
          ++pos_;
          p.value = rational();
        }
        spec.params.push_back(std::move(p));
      } while (at_symbol(","));
      return;
    }
    if (head.text == "param") {
      ++pos_;
      DiffParamDecl d;
      d.name = name();
      if (!(peek().kind == Tok::Ident && peek().text == "with")) fail("expected 'with'");
      ++pos_;
      Token lhs = peek();
      if (name() != d.name) {
        throw DslError(ErrorKind::SyntaxError, lhs.line, lhs.column,
                       "derivative must be given for " + d.name);
      }
      expect("'");
      expect("=");
      d.derivative = expr();
      spec.diff_params.push_back(std::move(d));
      return;
    }
    Equation eq;
    eq.variable = name();
    expect("'");
    expect("=");
    eq.rhs = expr();
    eqs.emplace_back(std::move(eq), head);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_symbol("+") || at_symbol("-")) {
      bool plus = next().text == "+";
      ExprPtr rhs = term();
      lhs = make(plus ? Expr::Kind::Add : Expr::Kind::Sub, "", lhs, rhs);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at_symbol("*") || at_symbol("/")) {
      bool times = next().text == "*";
      ExprPtr rhs = unary();
      lhs = make(times ? Expr::Kind::Mul : Expr::Kind::Div, "", lhs, rhs);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_symbol("-")) {
      ++pos_;
      if (++depth_ > 200) fail("expression nested too deeply");
      ExprPtr inner = unary();
      --depth_;
      return make(Expr::Kind::Neg, "", inner);
    }
    return power();
  }

  int exponent() {
    bool paren = at_symbol("(");
    if (paren) ++pos_;
    bool negative = false;
    if (at_symbol("-")) {
      ++pos_;
      negative = true;
    }
    if (peek().kind != Tok::Number) fail("exponent must be an integer literal");
    Token t = next();
    if (t.text.size() > 6) throw DslError(ErrorKind::SyntaxError, t.line, t.column, "exponent too large");
    int v = std::stoi(t.text);
    if (paren) expect(")");
    return negative ? -v : v;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (at_symbol("^")) {
      ++pos_;
      int e = exponent();
      if (at_symbol("^")) fail("chained exponents need parentheses");
      return make(Expr::Kind::Pow, "", base, nullptr, e);
    }
    return base;
  }

  ExprPtr primary() {
    if (peek().kind == Tok::Number) return make(Expr::Kind::Number, next().text);
    if (peek().kind == Tok::Ident) {
      if (keywords().count(peek().text) != 0) fail("'" + peek().text + "' is a reserved word");
      return make(Expr::Kind::Name, next().text);
    }
    if (at_symbol("(")) {
      ++pos_;
      if (++depth_ > 200) fail("expression nested too deeply");
      ExprPtr e = expr();
      --depth_;
      expect(")");
      return e;
    }
    if (peek().kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + peek().text + "'");
  }

  void collect_names(const ExprPtr& e, std::vector<const Expr*>& out) {
    if (!e) return;
    if (e->kind == Expr::Kind::Name) out.push_back(e.get());
    collect_names(e->lhs, out);
    collect_names(e->rhs, out);
  }

  void check(SystemSpec& spec, std::vector<std::pair<Equation, Token>>& eqs) {
    std::set<std::string> declared;
    const Token& end = toks_.back();
    auto declare = [&](const std::string& n) {
      if (!declared.insert(n).second) {
        throw DslError(ErrorKind::SyntaxError, end.line, end.column, "name " + n + " declared twice");
      }
    };
    for (const auto& v : spec.variables) declare(v);
    for (const auto& p : spec.params) declare(p.name);
    for (const auto& d : spec.diff_params) declare(d.name);
    auto check_expr = [&](const ExprPtr& e, const Token& at) {
      std::vector<const Expr*> names;
      collect_names(e, names);
      for (const Expr* n : names) {
        if (declared.count(n->text) == 0) {
          throw DslError(ErrorKind::UndeclaredName, at.line, at.column, "undeclared name " + n->text);
        }
      }
    };
    for (const auto& d : spec.diff_params) check_expr(d.derivative, end);
    std::vector<std::optional<Equation>> ordered(spec.variables.size());
    for (auto& [eq, tok] : eqs) {
      auto it = std::find(spec.variables.begin(), spec.variables.end(), eq.variable);
      if (it == spec.variables.end()) {
        throw DslError(ErrorKind::UndeclaredName, tok.line, tok.column,
                       "equation for undeclared variable " + eq.variable);
      }
      auto& slot = ordered[it - spec.variables.begin()];
      if (slot) {
        throw DslError(ErrorKind::DuplicateEquation, tok.line, tok.column,
                       "second equation for " + eq.variable);
      }
      check_expr(eq.rhs, tok);
      slot = eq;
    }
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (!ordered[i]) {
        throw DslError(ErrorKind::MissingEquation, end.line, end.column,
                       "no equation for variable " + spec.variables[i]);
      }
      spec.equations.push_back(*ordered[i]);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string print(const ExprPtr& e, int required) {
  std::string s;
  switch (e->kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name: s = e->text; break;
    case Expr::Kind::Neg: s = "-" + print(e->lhs, 3); break;
    case Expr::Kind::Add: s = print(e->lhs, 1) + " + " + print(e->rhs, 2); break;
    case Expr::Kind::Sub: s = print(e->lhs, 1) + " - " + print(e->rhs, 2); break;
    case Expr::Kind::Mul: s = print(e->lhs, 2) + "*" + print(e->rhs, 3); break;
    case Expr::Kind::Div: s = print(e->lhs, 2) + "/" + print(e->rhs, 3); break;
    case Expr::Kind::Pow: s = print(e->lhs, 5) + "^" + std::to_string(e->exponent); break;
  }
  if (precedence(*e) < required) s = "(" + s + ")";
  return s;
}

RatFunc convert(const ExprPtr& e, const std::vector<std::string>& vars) {
  switch (e->kind) {
    case Expr::Kind::Number: return RatFunc::constant(vars, Scalar(mpq_class(mpz_class(e->text))));
    case Expr::Kind::Name:
      if (std::find(vars.begin(), vars.end(), e->text) != vars.end()) {
        return RatFunc(MultiPoly::variable(vars, e->text));
      }
      return RatFunc::constant(vars, Scalar::symbol(e->text));
    case Expr::Kind::Neg: return -convert(e->lhs, vars);
    case Expr::Kind::Add: return convert(e->lhs, vars) + convert(e->rhs, vars);
    case Expr::Kind::Sub: return convert(e->lhs, vars) - convert(e->rhs, vars);
    case Expr::Kind::Mul: return convert(e->lhs, vars) * convert(e->rhs, vars);
    case Expr::Kind::Div: return convert(e->lhs, vars) / convert(e->rhs, vars);
    case Expr::Kind::Pow: return convert(e->lhs, vars).pow(e->exponent);
  }
  return RatFunc(vars);
}

}  // namespace

SystemSpec parse_system(std::string_view text) { return Parser(text).system(); }

ExprPtr parse_expression(std::string_view text) { return Parser(text).lone_expression(); }

std::string print_expression(const ExprPtr& e) { return print(e, 0); }

std::string print_system(const SystemSpec& spec) {
  std::string out;
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
    return s;
  };
  if (!spec.variables.empty()) out += "vars " + join(spec.variables) + "\n";
  if (!spec.params.empty()) {
    std::vector<std::string> items;
    for (const auto& p : spec.params) {
      items.push_back(p.value ? p.name + " = " + rational_to_string(*p.value) : p.name);
    }
    out += "params " + join(items) + "\n";
  }
  for (const auto& d : spec.diff_params) {
    out += "param " + d.name + " with " + d.name + "' = " + print_expression(d.derivative) + "\n";
  }
  for (const auto& eq : spec.equations) out += eq.variable + "' = " + print_expression(eq.rhs) + "\n";
  return out;
}

bool same_expression(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->text == b->text && a->exponent == b->exponent &&
         same_expression(a->lhs, b->lhs) && same_expression(a->rhs, b->rhs);
}

bool same_system(const SystemSpec& a, const SystemSpec& b) {
  if (a.variables != b.variables || a.params.size() != b.params.size() ||
      a.diff_params.size() != b.diff_params.size() || a.equations.size() != b.equations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (a.params[i].name != b.params[i].name || a.params[i].value != b.params[i].value) return false;
  }
  for (std::size_t i = 0; i < a.diff_params.size(); ++i) {
    if (a.diff_params[i].name != b.diff_params[i].name ||
        !same_expression(a.diff_params[i].derivative, b.diff_params[i].derivative)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.equations.size(); ++i) {
    if (a.equations[i].variable != b.equations[i].variable ||
        !same_expression(a.equations[i].rhs, b.equations[i].rhs)) {
      return false;
    }
  }
  return true;
}

RatFunc to_ratfunc(const ExprPtr& e, const std::vector<std::string>& vars) { return convert(e, vars); }

RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& vars) {
  return convert(parse_expression(text), vars);
}

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return parse_ratfunc(text, vars).as_polynomial();
}

Scalar parse_scalar(std::string_view text) { return parse_ratfunc(text, {}).as_polynomial().constant_value(); }

}  // namespace invcurve::dsl

namespace invcurve::dsl {

VectorField to_vector_field(const SystemSpec& spec, const std::map<std::string, mpq_class>& overrides) {
  std::map<Symbol, Scalar> values;
  for (const auto& p : spec.params) {
    if (p.value) values[Symbol(p.name)] = Scalar(*p.value);
  }
  for (const auto& [name, v] : overrides) {
    bool declared = std::any_of(spec.params.begin(), spec.params.end(), [&](const auto& p) { return p.name == name; });
    if (!declared) throw Error(ErrorKind::UndeclaredName, "no parameter named " + name);
    values[Symbol(name)] = Scalar(v);
  }
  auto lower = [&](const RatFunc& f) { return values.empty() ? f : f.substitute_parameters(values); };

  std::vector<DiffParam> diff_params;
  for (const auto& d : spec.diff_params) {
    RatFunc rhs = lower(convert(d.derivative, {d.name}));
    if (!rhs.is_polynomial() || rhs.as_polynomial().total_degree() > 1) {
      throw Error(ErrorKind::InvalidArgument, d.name + "' must be c*" + d.name + " or a constant");
    }
    MultiPoly poly = rhs.as_polynomial();
    Scalar constant = poly.coefficient({0});
    Scalar linear = poly.coefficient({1});
    if (!constant.is_zero() && !linear.is_zero()) {
      throw Error(ErrorKind::InvalidArgument, d.name + "' must be c*" + d.name + " or a constant");
    }
    if (!linear.is_zero()) {
      diff_params.push_back({d.name, DiffParam::Mode::Log, linear});
    } else {
      diff_params.push_back({d.name, DiffParam::Mode::Const, constant});
    }
  }
  std::vector<RatFunc> components;
  for (const auto& eq : spec.equations) components.push_back(lower(convert(eq.rhs, spec.variables)));
  return VectorField(spec.variables, std::move(components), std::move(diff_params));
}

}  // namespace invcurve::dsl
