#include <cctype>
#include <set>

#include "gqt/lefschetz.hpp"

namespace gqt {

namespace {

constexpr std::uint64_t kMaxExponent = 64;

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, text.substr(start, i - start), start});
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::Number, text.substr(start, i - start), start});
    } else if (std::string(".&|!=+-*^()").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw SyntaxError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

bool is_keyword(const std::string& s) { return s == "E" || s == "A"; }

TermPtr make_term(Term::Kind kind, TermPtr lhs, TermPtr rhs) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->column = lhs->column;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

TermPtr make_literal(std::uint64_t n, std::size_t column) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Literal;
  t->literal = n;
  t->column = column;
  return t;
}

FormulaPtr make_binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

class Parser {
 public:
  Parser(const std::string& text, bool allow_free) : tokens_(tokenize(text)), allow_free_(allow_free) {
    for (const auto& t : tokens_) {
      if (t.kind == Token::Kind::Ident) used_.insert(t.text);
    }
  }

  void allow(const std::string& name) { free_names_.insert(name); }

  FormulaPtr sentence() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  TermPtr whole_term() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  std::size_t binders() const { return next_slot_; }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(const char* sym) const { return peek().kind == Token::Kind::Symbol && peek().text == sym; }
  bool at_keyword() const { return peek().kind == Token::Kind::Ident && is_keyword(peek().text); }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.column, t.kind == Token::Kind::End ? what + ", found end of input"
                                                           : what + ", found '" + t.text + "'");
  }

  void expect(const char* sym) {
    if (!at(sym)) fail(std::string("expected '") + sym + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("expected end of input");
  }

  std::string fresh(const std::string& base) {
    for (int k = 1;; ++k) {
      std::string name = base + "_" + std::to_string(k);
      if (used_.insert(name).second) return name;
    }
  }

  FormulaPtr formula() {
    if (at_keyword()) return quantifier();
    return disjunction();
  }

  FormulaPtr quantifier() {
    const bool exists = peek().text == "E";
    ++pos_;
    if (peek().kind != Token::Kind::Ident || is_keyword(peek().text)) fail("expected a variable name");
    const std::string written = peek().text;
    ++pos_;
    expect(".");
    std::string name = bound_names_.insert(written).second ? written : fresh(written);
    bound_names_.insert(name);
    const int slot = static_cast<int>(next_slot_++);
    scope_.push_back({written, name, slot});
    FormulaPtr body = formula();
    scope_.pop_back();
    auto f = std::make_shared<Formula>();
    f->kind = exists ? Formula::Kind::Exists : Formula::Kind::Forall;
    f->var = std::move(name);
    f->slot = slot;
    f->a = std::move(body);
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (at("|")) {
      ++pos_;
      f = make_binary(Formula::Kind::Or, f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (at("&")) {
      ++pos_;
      f = make_binary(Formula::Kind::And, f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (at("!")) {
      ++pos_;
      return make_binary(Formula::Kind::Not, unary(), nullptr);
    }
    if (at_keyword()) return quantifier();
    if (!at("(")) return atom();
    const std::size_t saved = pos_;
    try {
      return atom();
    } catch (const SyntaxError& as_atom) {
      pos_ = saved;
      try {
        expect("(");
        FormulaPtr f = formula();
        expect(")");
        return f;
      } catch (const SyntaxError& as_group) {
        if (as_atom.column() > as_group.column()) throw as_atom;
        throw;
      }
    }
  }

  FormulaPtr atom() {
    TermPtr l = term();
    expect("=");
    TermPtr r = term();
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Eq;
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
  }

  TermPtr term() {
    TermPtr t = product();
    while (at("+") || at("-")) {
      const auto kind = at("+") ? Term::Kind::Add : Term::Kind::Sub;
      ++pos_;
      t = make_term(kind, t, product());
    }
    return t;
  }

  TermPtr product() {
    TermPtr t = factor();
    while (at("*")) {
      ++pos_;
      t = make_term(Term::Kind::Mul, t, factor());
    }
    return t;
  }

  TermPtr factor() {
    if (at("-")) {
      const std::size_t column = peek().column;
      ++pos_;
      return make_term(Term::Kind::Sub, make_literal(0, column), factor());
    }
    TermPtr base = primary();
    if (!at("^")) return base;
    ++pos_;
    if (peek().kind != Token::Kind::Number) fail("expected an exponent");
    const std::uint64_t e = number(kMaxExponent);
    if (e == 0) return make_literal(1, base->column);
    TermPtr t = base;
    for (std::uint64_t k = 1; k < e; ++k) t = make_term(Term::Kind::Mul, t, base);
    return t;
  }

  std::uint64_t number(std::uint64_t limit) {
    const Token& tok = peek();
    std::uint64_t n = 0;
    for (char c : tok.text) {
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
      if (n > limit) throw SyntaxError(tok.column, "number " + tok.text + " is too large");
    }
    ++pos_;
    return n;
  }

  TermPtr primary() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Number) {
      const std::size_t column = tok.column;
      return make_literal(number(std::uint64_t{1} << 62), column);
    }
    if (tok.kind == Token::Kind::Ident && !is_keyword(tok.text)) {
      auto t = std::make_shared<Term>();
      t->kind = Term::Kind::Var;
      t->column = tok.column;
      ++pos_;
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->written == tok.text) {
          t->name = it->name;
          t->slot = it->slot;
          return t;
        }
      }
      if (allow_free_ && free_names_.count(tok.text)) {
        t->name = tok.text;
        return t;
      }
      throw SyntaxError(tok.column, "variable '" + tok.text + "' is not bound");
    }
    if (at("(")) {
      ++pos_;
      TermPtr t = term();
      expect(")");
      return t;
    }
    fail("expected a term");
  }

  struct Binding {
    std::string written;
    std::string name;
    int slot;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool allow_free_;
  std::set<std::string> free_names_;
  std::set<std::string> used_;
  std::set<std::string> bound_names_;
  std::vector<Binding> scope_;
  std::size_t next_slot_ = 0;
};

int term_prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Mul: return 2;
    default: return 3;
  }
}

int formula_prec(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

std::string formula_to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Eq: return term_to_string(*f.left) + " = " + term_to_string(*f.right);
    case Formula::Kind::Not:
      return "!" + wrap(formula_to_string(*f.a), f.a->kind != Formula::Kind::Not);
    case Formula::Kind::And:
      return wrap(formula_to_string(*f.a), formula_prec(*f.a) < 2) + " & " +
             wrap(formula_to_string(*f.b), formula_prec(*f.b) <= 2);
    case Formula::Kind::Or:
      return wrap(formula_to_string(*f.a), formula_prec(*f.a) < 1) + " | " +
             wrap(formula_to_string(*f.b), formula_prec(*f.b) <= 1);
    case Formula::Kind::Exists: return "E " + f.var + " . " + formula_to_string(*f.a);
    case Formula::Kind::Forall: return "A " + f.var + " . " + formula_to_string(*f.a);
  }
  return "";
}

}  // namespace

std::string term_to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Literal: return std::to_string(t.literal);
    case Term::Kind::Var: return t.name;
    case Term::Kind::Add:
    case Term::Kind::Sub:
      return term_to_string(*t.lhs) + (t.kind == Term::Kind::Add ? " + " : " - ") +
             wrap(term_to_string(*t.rhs), term_prec(*t.rhs) <= 1);
    case Term::Kind::Mul:
      return wrap(term_to_string(*t.lhs), term_prec(*t.lhs) < 2) + "*" +
             wrap(term_to_string(*t.rhs), term_prec(*t.rhs) <= 2);
  }
  return "";
}

std::string Sentence::to_string() const { return formula_to_string(*root_); }

Sentence parse_sentence(const std::string& text) {
  Parser parser(text, false);
  FormulaPtr root = parser.sentence();
  return Sentence(std::move(root), parser.binders());
}

TermPtr parse_term(const std::string& text, const std::vector<std::string>& allowed) {
  Parser parser(text, true);
  for (const auto& name : allowed) parser.allow(name);
  return parser.whole_term();
}

}  // namespace gqt
