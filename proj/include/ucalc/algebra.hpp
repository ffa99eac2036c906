#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucalc/value.hpp"

namespace ucalc {

enum class RankGroup { Integers, Rationals };

/// Trichotomy of the additive magnitude ordering at e: only n is
/// negligible (SP), some but not all smaller values are (SH), or every
/// smaller value is (SR).
enum class MagnitudeClass { SP, SH, SR };

std::string_view to_string(MagnitudeClass c);

/// One lawful valuation-algebra context: the real, ranking or cumulative
/// structure with its constants n and e, the combination operations and
/// their solvers.  Instances are immutable; every operation is pure.
class Algebra {
 public:
  static Algebra real() { return Algebra(ValueKind::Real, RankGroup::Integers); }
  static Algebra ranking(RankGroup group) {
    return Algebra(ValueKind::Ranking, group);
  }
  static Algebra cumulative(RankGroup group) {
    return Algebra(ValueKind::Cumulative, group);
  }

  ValueKind kind() const { return kind_; }

  /// Rank group (meaningful for ranking and cumulative algebras).
  RankGroup group() const { return group_; }

  /// Additively neutral, multiplicatively absorptive bottom value.
  Value n() const;

  /// Multiplicative identity; the value of the full event.
  Value e() const;

  /// True iff v belongs to this algebra: matching kind, and rank depths
  /// integral when the rank group is the integers.
  bool admits(const Value& v) const;

  /// Throws KindMismatchError unless admits(v).
  void require(const Value& v) const;

  /// Disjoint-union combination: rational sum, max-plausibility, or the
  /// rank-aware cumulative sum.
  Value add(const Value& v, const Value& w) const;

  /// Intersection-style combination: masses multiply, ranks combine.
  Value mul(const Value& v, const Value& w) const;

  /// The plausibility order (lexicographic for cumulative values).
  std::strong_ordering cmp(const Value& v, const Value& w) const;

  bool leq(const Value& v, const Value& w) const {
    return cmp(v, w) != std::strong_ordering::greater;
  }

  bool less(const Value& v, const Value& w) const {
    return cmp(v, w) == std::strong_ordering::less;
  }

  /// Canonical witness w with add(v, w) = target; requires v <= target.
  /// The witness is n when v = target; otherwise: real subtracts masses,
  /// ranking returns the target, cumulative subtracts masses at equal
  /// ranks and returns the target when it out-ranks v.
  Value solve_add(const Value& v, const Value& target) const;

  /// The unique w in [n, e] with mul(divisor, w) = target when
  /// divisor != n; n when divisor = n.  Requires target <= divisor.
  Value solve_mul(const Value& divisor, const Value& target) const;

  /// True iff v is negligible beside w, i.e. add(w, v) = w.
  bool negligible(const Value& v, const Value& w) const;

  /// Magnitude class of this algebra, computed analytically per kind.
  MagnitudeClass classify() const;

 private:
  Algebra(ValueKind kind, RankGroup group) : kind_(kind), group_(group) {}

  ValueKind kind_;
  RankGroup group_;
};

bool operator==(const Algebra& a, const Algebra& b);

/// Outcome of a single law check.
struct LawCheck {
  std::string law;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const LawCheck* find(std::string_view law) const {
    for (const auto& c : checks)
      if (c.law == law) return &c;
    return nullptr;
  }
};

/// Replacement operations for law checking; unset entries fall back to
/// the algebra's own.  Lets a test double inject a deliberate bug.
struct OpOverrides {
  std::function<Value(const Value&, const Value&)> add;
  std::function<Value(const Value&, const Value&)> mul;
};

/// Checks the semigroup, distributivity, order and accessibility laws,
/// the derived bound/cancellation facts, and the solver round trips on
/// sample tuples (n and e are always included).  Every comparison is an
/// exact equality on rationals.
LawReport check_axioms(const Algebra& alg, std::span<const Value> samples,
                       const OpOverrides& overrides = {});

/// Sample triple (w, v, v') for modularity checking.
using ValueTriple = std::array<Value, 3>;

struct ModularityResult {
  bool ok = true;
  std::optional<ValueTriple> witness;  // the violating (w, v, v')
};

/// Modularity of the additive magnitude ordering: for every triple
/// (w, v, v') with v negligible beside v', either w is negligible beside
/// v' or v is negligible beside w.
ModularityResult check_modular(const Algebra& alg,
                               std::span<const ValueTriple> samples);

/// Same check against an arbitrary negligibility relation.
ModularityResult check_modular_relation(
    std::span<const ValueTriple> samples,
    const std::function<bool(const Value&, const Value&)>& negligible);

/// Renders a value in the canonical text syntax: "imp", a bare mass,
/// "r<rank>", or "<rank>:<mass>".
std::string print_value(const Value& v);

/// Parses the canonical text syntax for the given algebra.
Value parse_value(const Algebra& alg, std::string_view text);

}  // namespace ucalc
