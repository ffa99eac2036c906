#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ucalc/error.hpp"

namespace ucalc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a nonnegative number literal: "3", "1/3" or "0.25", exactly.
Rational parse_rational(std::string_view text);

/// Renders a rational as an integer, a decimal (when the reduced
/// denominator is a power of ten), or "p/q" otherwise.
std::string format_rational(const Rational& q);

enum class ValueKind { Real, Ranking, Cumulative };

std::string_view to_string(ValueKind kind);

/// Element of a ranking algebra: either the absorptive impossible value
/// or a finite rank depth g >= 0.  Depth 0 is the top rank e; larger
/// depths are less plausible.
class RankValue {
 public:
  static RankValue impossible() { return RankValue(std::nullopt); }

  static RankValue at(Rational depth) {
    if (depth < 0) throw PreconditionError("rank depth must be >= 0");
    return RankValue(std::move(depth));
  }

  bool is_impossible() const { return !depth_.has_value(); }

  /// Rank depth; only meaningful for finite ranks.
  const Rational& depth() const {
    if (!depth_) throw PreconditionError("impossible rank has no depth");
    return *depth_;
  }

  /// Rank combination: depths add, impossible absorbs.
  friend RankValue combine(const RankValue& a, const RankValue& b) {
    if (a.is_impossible() || b.is_impossible()) return impossible();
    return RankValue(*a.depth_ + *b.depth_);
  }

  /// Plausibility order: impossible below every finite rank, finite
  /// ranks ordered by decreasing depth (depth 0 is maximal).
  friend std::strong_ordering operator<=>(const RankValue& a,
                                          const RankValue& b) {
    if (a.is_impossible() && b.is_impossible())
      return std::strong_ordering::equal;
    if (a.is_impossible()) return std::strong_ordering::less;
    if (b.is_impossible()) return std::strong_ordering::greater;
    if (*a.depth_ == *b.depth_) return std::strong_ordering::equal;
    return *a.depth_ > *b.depth_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  }

  friend bool operator==(const RankValue& a, const RankValue& b) {
    return a.depth_ == b.depth_;
  }

 private:
  explicit RankValue(std::optional<Rational> depth)
      : depth_(std::move(depth)) {}

  std::optional<Rational> depth_;
};

/// Nonnegative exact mass, the carrier of the real valuation algebra.
class MassValue {
 public:
  explicit MassValue(Rational m) : m_(std::move(m)) {
    if (m_ < 0) throw PreconditionError("mass must be >= 0");
  }

  const Rational& mass() const { return m_; }

  friend bool operator==(const MassValue& a, const MassValue& b) {
    return a.m_ == b.m_;
  }

 private:
  Rational m_;
};

/// Rank-mass pair.  The domain excludes (finite rank, 0) and
/// (impossible, m > 0); the only zero-mass element is the bottom pair.
class CumulativeValue {
 public:
  CumulativeValue(RankValue rank, Rational mass)
      : rank_(std::move(rank)), mass_(std::move(mass)) {
    if (rank_.is_impossible() != (mass_ == 0))
      throw PreconditionError(
          "cumulative value requires rank = impossible exactly when mass = 0");
    if (mass_ < 0) throw PreconditionError("mass must be >= 0");
  }

  static CumulativeValue bottom() {
    return CumulativeValue(RankValue::impossible(), Rational(0));
  }

  const RankValue& rank() const { return rank_; }
  const Rational& mass() const { return mass_; }

  friend bool operator==(const CumulativeValue& a, const CumulativeValue& b) {
    return a.rank_ == b.rank_ && a.mass_ == b.mass_;
  }

 private:
  RankValue rank_;
  Rational mass_;
};

/// A value of one of the three valuation algebras.
class Value {
 public:
  /* implicit */ Value(MassValue v) : v_(std::move(v)) {}
  /* implicit */ Value(RankValue v) : v_(std::move(v)) {}
  /* implicit */ Value(CumulativeValue v) : v_(std::move(v)) {}

  ValueKind kind() const {
    if (std::holds_alternative<MassValue>(v_)) return ValueKind::Real;
    if (std::holds_alternative<RankValue>(v_)) return ValueKind::Ranking;
    return ValueKind::Cumulative;
  }

  const MassValue& as_mass() const { return get<MassValue>(); }
  const RankValue& as_rank() const { return get<RankValue>(); }
  const CumulativeValue& as_cumulative() const {
    return get<CumulativeValue>();
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.v_ == b.v_;
  }

 private:
  template <typename T>
  const T& get() const {
    const T* p = std::get_if<T>(&v_);
    if (!p)
      throw KindMismatchError(std::string("expected a ") +
                              std::string(to_string(kind_of<T>())) + " value");
    return *p;
  }

  template <typename T>
  static constexpr ValueKind kind_of() {
    if constexpr (std::is_same_v<T, MassValue>) return ValueKind::Real;
    if constexpr (std::is_same_v<T, RankValue>) return ValueKind::Ranking;
    return ValueKind::Cumulative;
  }

  std::variant<MassValue, RankValue, CumulativeValue> v_;
};

}  // namespace ucalc
