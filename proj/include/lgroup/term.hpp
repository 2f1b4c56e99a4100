#pragma once

// Terms in the language of lattice-ordered groups with rational constant
// multiples of the unit. Concrete syntax:
//
//   expr := expr '+' expr | '-' expr | expr '/\' expr | expr '\/' expr
//         | '|' expr '|' | INT '*' expr | RAT | NAME | '(' expr ')'
//
// Precedence, tightest first: unary minus and |.|, then integer scaling
// '*', then '/\' and '\/' (equal precedence, left associative), then '+'.
// RAT literals (e.g. "1/2", "-3") denote that multiple of the unit.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "lgroup/predicates.hpp"
#include "lgroup/rational.hpp"

namespace lgroup::terms {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { gen, const_unit, add, neg, meet, join, abs, scale };

  Kind kind;
  std::string name;  // gen
  Rat value;         // const_unit
  Int factor;        // scale; never zero
  TermPtr lhs;       // first child
  TermPtr rhs;       // second child (add/meet/join only)
};

TermPtr t_gen(std::string name);
TermPtr t_const(Rat q);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_neg(TermPtr a);
TermPtr t_meet(TermPtr a, TermPtr b);
TermPtr t_join(TermPtr a, TermPtr b);
TermPtr t_abs(TermPtr a);
// A zero factor collapses to the constant zero term.
TermPtr t_scale(Int k, TermPtr a);

// Number of AST nodes.
std::size_t term_size(const TermPtr& t);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TermPtr parse_term(const std::string& input);

// Renders with minimal parentheses; parse_term(term_to_string(t)) is
// semantically identical to t.
std::string term_to_string(const TermPtr& t);

template <SpaceModel M>
typename M::Element eval_term(const M& m, const TermPtr& t,
                              const std::map<std::string, typename M::Element>& gens) {
  if (!t) throw EvalError("empty term");
  switch (t->kind) {
    case Term::Kind::gen: {
      const auto it = gens.find(t->name);
      if (it == gens.end()) throw EvalError("unknown generator: " + t->name);
      return it->second;
    }
    case Term::Kind::const_unit:
      return m.constant(t->value);
    case Term::Kind::add:
      return m.add(eval_term(m, t->lhs, gens), eval_term(m, t->rhs, gens));
    case Term::Kind::neg:
      return m.negate(eval_term(m, t->lhs, gens));
    case Term::Kind::meet:
      return m.meet(eval_term(m, t->lhs, gens), eval_term(m, t->rhs, gens));
    case Term::Kind::join:
      return m.join(eval_term(m, t->lhs, gens), eval_term(m, t->rhs, gens));
    case Term::Kind::abs:
      return m.abs(eval_term(m, t->lhs, gens));
    case Term::Kind::scale:
      return m.scale(t->factor, eval_term(m, t->lhs, gens));
  }
  throw EvalError("unreachable term kind");
}

}  // namespace lgroup::terms
