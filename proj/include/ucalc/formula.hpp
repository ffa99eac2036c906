#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ucalc/worldspace.hpp"

namespace ucalc {

/// Immutable propositional formula.  Connective syntax (ASCII): ! & | ->
/// <->, constants true/false; precedence ! > & > | > -> > <->, with ->
/// right-associative and & | <-> left-associative.
class Formula {
 public:
  enum class Kind { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;
  const Formula& child() const;  // operand of Not
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Atom names occurring in the formula, in first-occurrence order.
  std::vector<std::string> atoms() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  static Formula make(Kind kind, std::string name,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Parses a formula; throws ParseError carrying the byte offset and the
/// expected-token set.  Unicode connectives are accepted as aliases.
Formula parse_formula(std::string_view text);

/// Renders with ASCII connectives and minimal parentheses;
/// parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

/// Worlds satisfying the formula under classical semantics.  The space
/// must carry an atom vocabulary covering the formula's atoms.
Event eval_event(const Formula& f,
                 const std::shared_ptr<const WorldSpace>& space);

/// Truth of the formula at one world of an assignment space.
bool eval_world(const Formula& f, const WorldSpace& space, std::size_t world);

}  // namespace ucalc
