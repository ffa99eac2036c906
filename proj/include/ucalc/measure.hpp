#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ucalc/algebra.hpp"
#include "ucalc/worldspace.hpp"

namespace ucalc {

/// Quasi-measure over a finite world space: one value per world, folded
/// with # to evaluate events.  The per-world values always fold to e, so
/// additivity on disjoint events holds by construction and a union of
/// impossible events is impossible.
class QuasiMeasure {
 public:
  /// Requires the table to be normalized (fold of all values = e).
  QuasiMeasure(Algebra alg, std::shared_ptr<const WorldSpace> space,
               std::vector<Value> table);

  const Algebra& algebra() const { return alg_; }
  const std::shared_ptr<const WorldSpace>& space() const { return space_; }
  const Value& at(std::size_t world) const { return table_[world]; }
  const std::vector<Value>& table() const { return table_; }

 private:
  Algebra alg_;
  std::shared_ptr<const WorldSpace> space_;
  std::vector<Value> table_;
};

/// Value of an event: the add-fold over its member worlds (n when empty).
Value measure_of(const QuasiMeasure& m, const Event& A);

/// R(A | B): the unique w in [n, e] with R(A ∩ B) = R(B) ∘ w, and n when
/// R(B) = n.
Value conditional(const QuasiMeasure& m, const Event& A, const Event& B);

/// The measure R(· | B); throws ImpossibleEvidenceError when R(B) = n.
QuasiMeasure conditionalize(const QuasiMeasure& m, const Event& B);

struct IndependenceReport {
  bool independent = true;
  /// Indices (into the input list) of the first violating subsequence.
  std::vector<std::size_t> violating;
  std::optional<Value> joint;    // conditional of the intersection
  std::optional<Value> product;  // product of individual conditionals
};

/// Conditional independence given B: for every nonempty subsequence of
/// the events, the conditional of the intersection equals the product of
/// the individual conditionals, exactly.  At most 10 events.
IndependenceReport check_independent(const QuasiMeasure& m,
                                     std::span<const Event> events,
                                     const Event& B);

bool independent(const QuasiMeasure& m, std::span<const Event> events,
                 const Event& B);

/// Scales a raw table by its total so it folds to e; throws
/// AllImpossibleError when the total is n.
QuasiMeasure normalize(const Algebra& alg,
                       std::shared_ptr<const WorldSpace> space,
                       std::vector<Value> raw);

/// Checks normalization, additivity on sampled disjoint event pairs, and
/// coherence of impossible worlds.  Deterministic for a fixed seed.
LawReport validate(const QuasiMeasure& m, int sample_pairs = 32,
                   std::uint64_t seed = 0x5eedu);

/// Same checks on a raw table that may not be normalized (the
/// QuasiMeasure constructor would reject such input).
LawReport validate_table(const Algebra& alg,
                         const std::shared_ptr<const WorldSpace>& space,
                         std::span<const Value> table, int sample_pairs = 32,
                         std::uint64_t seed = 0x5eedu);

/// Ranking values on the blocks of a partition of a world space: a
/// measure known only on the subalgebra the partition generates.
class PartitionMeasure {
 public:
  /// Blocks must be disjoint, nonempty, and cover the space; values must
  /// be ranking values whose fold is e.
  PartitionMeasure(Algebra alg, std::vector<Event> blocks,
                   std::vector<Value> values);

  const Algebra& algebra() const { return alg_; }
  const std::shared_ptr<const WorldSpace>& space() const { return space_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  const std::vector<Value>& values() const { return values_; }

  /// Fold of the values of all blocks meeting A (the smallest cover of A
  /// within the generated subalgebra).
  Value cover_value(const Event& A) const;

 private:
  Algebra alg_;
  std::shared_ptr<const WorldSpace> space_;
  std::vector<Event> blocks_;
  std::vector<Value> values_;
};

/// Canonical powerset extension: every world gets its block's value, so
/// each event's value is that of its smallest subalgebra cover.  The
/// result is the pointwise-maximal ranking measure agreeing with the
/// partition measure on block unions.
QuasiMeasure extend(const PartitionMeasure& pm);

}  // namespace ucalc
