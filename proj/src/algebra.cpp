#include "ucalc/algebra.hpp"

#include <cctype>
#include <utility>

namespace ucalc {

namespace {

bool integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::strong_ordering order_rational(const Rational& a, const Rational& b) {
  if (a == b) return std::strong_ordering::equal;
  return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

std::string_view to_string(MagnitudeClass c) {
  switch (c) {
    case MagnitudeClass::SP: return "SP";
    case MagnitudeClass::SH: return "SH";
    case MagnitudeClass::SR: return "SR";
  }
  return "?";
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ValueKind::Real) return true;
  return a.group() == b.group();
}

Value Algebra::n() const {
  switch (kind_) {
    case ValueKind::Real: return MassValue(Rational(0));
    case ValueKind::Ranking: return RankValue::impossible();
    case ValueKind::Cumulative: return CumulativeValue::bottom();
  }
  throw Error("bad algebra kind");
}

Value Algebra::e() const {
  switch (kind_) {
    case ValueKind::Real: return MassValue(Rational(1));
    case ValueKind::Ranking: return RankValue::at(Rational(0));
    case ValueKind::Cumulative:
      return CumulativeValue(RankValue::at(Rational(0)), Rational(1));
  }
  throw Error("bad algebra kind");
}

bool Algebra::admits(const Value& v) const {
  if (v.kind() != kind_) return false;
  if (group_ == RankGroup::Integers) {
    if (kind_ == ValueKind::Ranking) {
      const RankValue& r = v.as_rank();
      return r.is_impossible() || integral(r.depth());
    }
    if (kind_ == ValueKind::Cumulative) {
      const RankValue& r = v.as_cumulative().rank();
      return r.is_impossible() || integral(r.depth());
    }
  }
  return true;
}

void Algebra::require(const Value& v) const {
  if (v.kind() != kind_)
    throw KindMismatchError(std::string(to_string(v.kind())) +
                            " value used with a " +
                            std::string(to_string(kind_)) + " algebra");
  if (!admits(v))
    throw KindMismatchError(
        "rank depth is not an element of the integer rank group");
}

Value Algebra::add(const Value& v, const Value& w) const {
  require(v);
  require(w);
  switch (kind_) {
    case ValueKind::Real:
      return MassValue(v.as_mass().mass() + w.as_mass().mass());
    case ValueKind::Ranking: {
      // max-plausibility: keep the larger of the two ranks.
      const RankValue& a = v.as_rank();
      const RankValue& b = w.as_rank();
      return a < b ? b : a;
    }
    case ValueKind::Cumulative: {
      const CumulativeValue& a = v.as_cumulative();
      const CumulativeValue& b = w.as_cumulative();
      if (a.rank() == b.rank()) {
        if (a.rank().is_impossible()) return CumulativeValue::bottom();
        return CumulativeValue(a.rank(), a.mass() + b.mass());
      }
      return a.rank() < b.rank() ? b : a;
    }
  }
  throw Error("bad algebra kind");
}

Value Algebra::mul(const Value& v, const Value& w) const {
  require(v);
  require(w);
  switch (kind_) {
    case ValueKind::Real:
      return MassValue(v.as_mass().mass() * w.as_mass().mass());
    case ValueKind::Ranking:
      return combine(v.as_rank(), w.as_rank());
    case ValueKind::Cumulative: {
      const CumulativeValue& a = v.as_cumulative();
      const CumulativeValue& b = w.as_cumulative();
      RankValue rank = combine(a.rank(), b.rank());
      if (rank.is_impossible()) return CumulativeValue::bottom();
      return CumulativeValue(std::move(rank), a.mass() * b.mass());
    }
  }
  throw Error("bad algebra kind");
}

std::strong_ordering Algebra::cmp(const Value& v, const Value& w) const {
  require(v);
  require(w);
  switch (kind_) {
    case ValueKind::Real:
      return order_rational(v.as_mass().mass(), w.as_mass().mass());
    case ValueKind::Ranking:
      return v.as_rank() <=> w.as_rank();
    case ValueKind::Cumulative: {
      const CumulativeValue& a = v.as_cumulative();
      const CumulativeValue& b = w.as_cumulative();
      std::strong_ordering by_rank = a.rank() <=> b.rank();
      if (by_rank != std::strong_ordering::equal) return by_rank;
      return order_rational(a.mass(), b.mass());
    }
  }
  throw Error("bad algebra kind");
}

Value Algebra::solve_add(const Value& v, const Value& target) const {
  require(v);
  require(target);
  if (less(target, v))
    throw PreconditionError("solve_add requires v <= target");
  if (v == target) return n();
  switch (kind_) {
    case ValueKind::Real:
      return MassValue(target.as_mass().mass() - v.as_mass().mass());
    case ValueKind::Ranking:
      return target;
    case ValueKind::Cumulative: {
      const CumulativeValue& a = v.as_cumulative();
      const CumulativeValue& t = target.as_cumulative();
      if (a.rank() == t.rank())
        return CumulativeValue(t.rank(), t.mass() - a.mass());
      return target;  // the higher-ranked target absorbs v
    }
  }
  throw Error("bad algebra kind");
}

Value Algebra::solve_mul(const Value& divisor, const Value& target) const {
  require(divisor);
  require(target);
  if (less(divisor, target))
    throw PreconditionError("solve_mul requires target <= divisor");
  if (divisor == n()) return n();
  if (target == n()) return n();
  switch (kind_) {
    case ValueKind::Real:
      return MassValue(target.as_mass().mass() / divisor.as_mass().mass());
    case ValueKind::Ranking:
      return RankValue::at(target.as_rank().depth() -
                           divisor.as_rank().depth());
    case ValueKind::Cumulative: {
      const CumulativeValue& d = divisor.as_cumulative();
      const CumulativeValue& t = target.as_cumulative();
      return CumulativeValue(
          RankValue::at(t.rank().depth() - d.rank().depth()),
          t.mass() / d.mass());
    }
  }
  throw Error("bad algebra kind");
}

bool Algebra::negligible(const Value& v, const Value& w) const {
  return add(w, v) == w;
}

MagnitudeClass Algebra::classify() const {
  switch (kind_) {
    case ValueKind::Real: return MagnitudeClass::SP;
    case ValueKind::Ranking: return MagnitudeClass::SR;
    case ValueKind::Cumulative: return MagnitudeClass::SH;
  }
  throw Error("bad algebra kind");
}

// ---------------------------------------------------------------------------
// Law checking

namespace {

struct Ops {
  const Algebra& alg;
  std::function<Value(const Value&, const Value&)> add;
  std::function<Value(const Value&, const Value&)> mul;

  Ops(const Algebra& a, const OpOverrides& ov) : alg(a) {
    add = ov.add ? ov.add : [&a](const Value& x, const Value& y) {
      return a.add(x, y);
    };
    mul = ov.mul ? ov.mul : [&a](const Value& x, const Value& y) {
      return a.mul(x, y);
    };
  }
};

std::string show_tuple(std::initializer_list<Value> vs) {
  std::string out = "(";
  bool first = true;
  for (const Value& v : vs) {
    if (!first) out += ", ";
    out += print_value(v);
    first = false;
  }
  return out + ")";
}

class LawScope {
 public:
  LawScope(LawReport& report, std::string law)
      : report_(report), check_{std::move(law), true, {}} {}

  ~LawScope() { report_.checks.push_back(std::move(check_)); }

  /// Records the first counterexample; later failures are ignored.
  bool require(bool condition, std::initializer_list<Value> witness) {
    if (!condition && check_.passed) {
      check_.passed = false;
      check_.counterexample = show_tuple(witness);
    }
    return condition;
  }

 private:
  LawReport& report_;
  LawCheck check_;
};

}  // namespace

LawReport check_axioms(const Algebra& alg, std::span<const Value> samples,
                       const OpOverrides& overrides) {
  const Ops op(alg, overrides);
  const Value n = alg.n();
  const Value e = alg.e();

  std::vector<Value> vals(samples.begin(), samples.end());
  vals.push_back(n);
  vals.push_back(e);
  const std::size_t count = vals.size();
  auto at = [&](std::size_t i) -> const Value& { return vals[i % count]; };

  LawReport report;

  {
    LawScope law(report, "additive commutative semigroup with identity n");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      law.require(op.add(v, w) == op.add(w, v), {v, w});
      law.require(op.add(op.add(v, w), x) == op.add(v, op.add(w, x)),
                  {v, w, x});
      law.require(op.add(v, n) == v, {v});
    }
  }
  {
    LawScope law(report, "multiplicative commutative semigroup, identity e, absorptive n");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      law.require(op.mul(v, w) == op.mul(w, v), {v, w});
      law.require(op.mul(op.mul(v, w), x) == op.mul(v, op.mul(w, x)),
                  {v, w, x});
      law.require(op.mul(v, e) == v, {v});
      law.require(op.mul(v, n) == n, {v});
    }
  }
  {
    LawScope law(report, "distributivity");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &w = at(i), &v = at(i + 1), &x = at(i + 2);
      law.require(op.mul(w, op.add(v, x)) ==
                      op.add(op.mul(w, v), op.mul(w, x)),
                  {w, v, x});
    }
  }
  {
    LawScope law(report, "linear ordering");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      const auto vw = alg.cmp(v, w);
      const auto wv = alg.cmp(w, v);
      law.require((vw == std::strong_ordering::equal) == (v == w), {v, w});
      law.require((vw == std::strong_ordering::less) ==
                      (wv == std::strong_ordering::greater),
                  {v, w});
      if (vw != std::strong_ordering::greater && alg.leq(w, x))
        law.require(alg.leq(v, x), {v, w, x});
    }
  }
  {
    LawScope law(report, "additive monotony");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      const Value& lo = alg.leq(v, w) ? v : w;
      const Value& hi = alg.leq(v, w) ? w : v;
      law.require(alg.leq(op.add(lo, x), op.add(hi, x)), {lo, hi, x});
    }
  }
  {
    LawScope law(report, "multiplicative monotony");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      if (v == w || x == n) continue;
      const Value& lo = alg.less(v, w) ? v : w;
      const Value& hi = alg.less(v, w) ? w : v;
      law.require(alg.less(op.mul(lo, x), op.mul(hi, x)), {lo, hi, x});
    }
  }
  {
    LawScope law(report, "additive accessibility");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1);
      const Value& lo = alg.leq(v, w) ? v : w;
      const Value& hi = alg.leq(v, w) ? w : v;
      law.require(op.add(lo, alg.solve_add(lo, hi)) == hi, {lo, hi});
    }
  }
  {
    LawScope law(report, "multiplicative accessibility");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1);
      const Value& lo = alg.leq(v, w) ? v : w;
      const Value& hi = alg.leq(v, w) ? w : v;
      law.require(op.mul(hi, alg.solve_mul(hi, lo)) == lo, {lo, hi});
    }
  }
  {
    LawScope law(report, "bottom is minimal");
    for (std::size_t i = 0; i < count; ++i)
      law.require(alg.leq(n, at(i)), {at(i)});
  }
  {
    LawScope law(report, "division witness uniqueness");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &cand = at(i + 2);
      const Value& lo = alg.leq(v, w) ? v : w;
      const Value& hi = alg.leq(v, w) ? w : v;
      if (hi == n) continue;
      const Value witness = alg.solve_mul(hi, lo);
      if (op.mul(hi, cand) == lo)
        law.require(cand == witness, {lo, hi, cand});
    }
  }
  {
    LawScope law(report, "no zero divisors");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1);
      if (op.mul(v, w) == n && w != n) law.require(v == n, {v, w});
    }
  }
  {
    LawScope law(report, "order via unit-interval factors");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1), &x = at(i + 2);
      const Value& lo = alg.leq(v, w) ? v : w;
      const Value& hi = alg.leq(v, w) ? w : v;
      if (hi != n) {
        const Value witness = alg.solve_mul(hi, lo);
        law.require(alg.leq(witness, e), {lo, hi, witness});
        law.require(op.mul(hi, witness) == lo, {lo, hi, witness});
      }
      if (alg.leq(x, e)) law.require(alg.leq(op.mul(hi, x), hi), {hi, x});
    }
  }
  {
    LawScope law(report, "unit interval closed under multiplication");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1);
      if (alg.less(n, v) && alg.less(n, w) && alg.leq(v, e) && alg.leq(w, e)) {
        const Value p = op.mul(v, w);
        law.require(alg.less(n, p) && alg.leq(p, e), {v, w, p});
      }
    }
  }
  {
    LawScope law(report, "subevent bound");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &w = at(i + 1);
      law.require(alg.leq(v, op.add(v, w)), {v, w});
    }
  }
  {
    LawScope law(report, "cancellation on the unit interval");
    for (std::size_t i = 0; i < count; ++i) {
      const Value &v = at(i), &x = at(i + 1), &y = at(i + 2);
      if (v == n || !alg.leq(v, e) || !alg.leq(x, e) || !alg.leq(y, e))
        continue;
      if (op.mul(v, x) == op.mul(v, y)) law.require(x == y, {v, x, y});
    }
  }
  return report;
}

ModularityResult check_modular_relation(
    std::span<const ValueTriple> samples,
    const std::function<bool(const Value&, const Value&)>& negligible) {
  for (const ValueTriple& t : samples) {
    const Value& w = t[0];
    const Value& v = t[1];
    const Value& v2 = t[2];
    if (negligible(v, v2) && !negligible(w, v2) && !negligible(v, w))
      return {false, t};
  }
  return {};
}

ModularityResult check_modular(const Algebra& alg,
                               std::span<const ValueTriple> samples) {
  return check_modular_relation(samples,
                                [&alg](const Value& v, const Value& w) {
                                  return alg.negligible(v, w);
                                });
}

// ---------------------------------------------------------------------------
// Text syntax

std::string print_value(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Real:
      return format_rational(v.as_mass().mass());
    case ValueKind::Ranking: {
      const RankValue& r = v.as_rank();
      if (r.is_impossible()) return "imp";
      return "r" + format_rational(r.depth());
    }
    case ValueKind::Cumulative: {
      const CumulativeValue& c = v.as_cumulative();
      if (c.rank().is_impossible()) return "imp";
      return format_rational(c.rank().depth()) + ":" +
             format_rational(c.mass());
    }
  }
  throw Error("bad value kind");
}

Value parse_value(const Algebra& alg, std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad " + std::string(to_string(alg.kind())) +
                          " value '" + std::string(text) + "': " + why,
                      0);
  };
  if (text.empty()) throw fail("empty");
  if (text == "imp") return alg.n();
  Value out = [&]() -> Value {
    switch (alg.kind()) {
      case ValueKind::Real:
        return MassValue(parse_rational(text));
      case ValueKind::Ranking: {
        if (text.front() != 'r') throw fail("expected r<rank> or imp");
        return RankValue::at(parse_rational(text.substr(1)));
      }
      case ValueKind::Cumulative: {
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
          throw fail("expected <rank>:<mass> or imp");
        Rational rank = parse_rational(text.substr(0, colon));
        Rational mass = parse_rational(text.substr(colon + 1));
        if (mass == 0)
          throw fail("zero mass is written imp");
        return CumulativeValue(RankValue::at(std::move(rank)),
                               std::move(mass));
      }
    }
    throw Error("bad algebra kind");
  }();
  alg.require(out);
  return out;
}

}  // namespace ucalc
