#include "lgroup/term.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace lgroup::terms {

TermPtr t_gen(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::gen;
  t->name = std::move(name);
  return t;
}

TermPtr t_const(Rat q) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::const_unit;
  t->value = std::move(q);
  return t;
}

TermPtr t_add(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::add;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TermPtr t_neg(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::neg;
  t->lhs = std::move(a);
  return t;
}

TermPtr t_meet(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::meet;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TermPtr t_join(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::join;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TermPtr t_abs(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::abs;
  t->lhs = std::move(a);
  return t;
}

TermPtr t_scale(Int k, TermPtr a) {
  if (k == 0) return t_const(Rat(0));
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::scale;
  t->factor = std::move(k);
  t->lhs = std::move(a);
  return t;
}

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  return 1 + term_size(t->lhs) + term_size(t->rhs);
}

namespace {

struct Token {
  enum class Kind { number, name, plus, minus, star, meet, join, bar, lparen, rparen, end };
  Kind kind;
  std::string text;   // number (may contain '/') or name
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      // '/' begins a rational only when a digit follows; otherwise it is
      // the start of the meet operator '/\'.
      if (j < n && s[j] == '/' && j + 1 < n && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Kind::number, s.substr(i, j - i), start});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::name, s.substr(i, j - i), start});
      i = j;
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '\\') {
      out.push_back({Token::Kind::meet, "/\\", start});
      i += 2;
      continue;
    }
    if (c == '\\' && i + 1 < n && s[i + 1] == '/') {
      out.push_back({Token::Kind::join, "\\/", start});
      i += 2;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Kind::plus, "+", start}); break;
      case '-': out.push_back({Token::Kind::minus, "-", start}); break;
      case '*': out.push_back({Token::Kind::star, "*", start}); break;
      case '|': out.push_back({Token::Kind::bar, "|", start}); break;
      case '(': out.push_back({Token::Kind::lparen, "(", start}); break;
      case ')': out.push_back({Token::Kind::rparen, ")", start}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++i;
  }
  out.push_back({Token::Kind::end, "", n});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  TermPtr run() {
    auto t = parse_sum();
    expect(Token::Kind::end, "trailing input");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw ParseError(what, peek().pos);
    ++index_;
  }

  TermPtr parse_sum() {
    auto t = parse_lattice();
    while (peek().kind == Token::Kind::plus) {
      take();
      t = t_add(std::move(t), parse_lattice());
    }
    return t;
  }

  TermPtr parse_lattice() {
    auto t = parse_unary();
    while (peek().kind == Token::Kind::meet || peek().kind == Token::Kind::join) {
      const bool is_meet = take().kind == Token::Kind::meet;
      auto r = parse_unary();
      t = is_meet ? t_meet(std::move(t), std::move(r)) : t_join(std::move(t), std::move(r));
    }
    return t;
  }

  TermPtr parse_unary() {
    const auto& tok = peek();
    switch (tok.kind) {
      case Token::Kind::minus:
        take();
        return t_neg(parse_unary());
      case Token::Kind::bar: {
        take();
        auto inner = parse_sum();
        expect(Token::Kind::bar, "expected closing '|'");
        return t_abs(std::move(inner));
      }
      case Token::Kind::number: {
        const Token num = take();
        if (peek().kind == Token::Kind::star) {
          if (num.text.find('/') != std::string::npos) {
            throw ParseError("scale factor must be an integer", peek().pos);
          }
          take();
          return t_scale(Int(num.text), parse_unary());
        }
        return t_const(parse_rat(num.text));
      }
      case Token::Kind::name:
        return t_gen(take().text);
      case Token::Kind::lparen: {
        take();
        auto inner = parse_sum();
        expect(Token::Kind::rparen, "expected ')'");
        return inner;
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// Precedence levels for printing: sum 0, lattice 1, scale 2, unary 3, atom 4.
int print_level(const Term& t) {
  switch (t.kind) {
    case Term::Kind::add: return 0;
    case Term::Kind::meet:
    case Term::Kind::join: return 1;
    case Term::Kind::scale: return 2;
    case Term::Kind::neg: return 3;
    case Term::Kind::const_unit: return t.value < 0 ? 3 : 4;
    case Term::Kind::gen:
    case Term::Kind::abs: return 4;
  }
  return 4;
}

void render(const TermPtr& t, std::string& out, int min_level) {
  const bool parens = print_level(*t) < min_level;
  if (parens) out += '(';
  switch (t->kind) {
    case Term::Kind::gen:
      out += t->name;
      break;
    case Term::Kind::const_unit:
      out += rat_to_string(t->value);
      break;
    case Term::Kind::add:
      render(t->lhs, out, 0);
      out += " + ";
      render(t->rhs, out, 1);
      break;
    case Term::Kind::meet:
    case Term::Kind::join:
      render(t->lhs, out, 1);
      out += t->kind == Term::Kind::meet ? " /\\ " : " \\/ ";
      render(t->rhs, out, 2);
      break;
    case Term::Kind::scale:
      out += t->factor.str();
      out += '*';
      render(t->lhs, out, 3);
      break;
    case Term::Kind::neg:
      out += '-';
      render(t->lhs, out, 3);
      break;
    case Term::Kind::abs:
      out += '|';
      render(t->lhs, out, 0);
      out += '|';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

TermPtr parse_term(const std::string& input) {
  Parser p(tokenize(input));
  return p.run();
}

std::string term_to_string(const TermPtr& t) {
  if (!t) throw EvalError("empty term");
  std::string out;
  render(t, out, 0);
  return out;
}

}  // namespace lgroup::terms
