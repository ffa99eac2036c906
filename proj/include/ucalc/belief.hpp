#pragma once

#include <vector>

#include "ucalc/formula.hpp"
#include "ucalc/measure.hpp"

namespace ucalc {

/// Surface belief structure of an agent: a cumulative measure over the
/// truth assignments of an atom vocabulary, queried through formulas.
class EpistemicState {
 public:
  /// The measure must be cumulative over an assignment space.
  explicit EpistemicState(QuasiMeasure measure);

  const QuasiMeasure& measure() const { return measure_; }
  const std::shared_ptr<const WorldSpace>& space() const {
    return measure_.space();
  }

  /// Event denoted by the formula over this state's vocabulary.
  Event event(const Formula& f) const;

 private:
  QuasiMeasure measure_;
};

/// Revision request: make the formula plainly believed, pushing its
/// complement down by the given rank increment.
struct RevisionInput {
  Formula formula;
  Rational shift;  // > 0; >= 1 when the rank group is the integers
};

/// Plain belief: the formula's event gets the full top value e.
bool believes(const EpistemicState& state, const Formula& f);

/// Measure of the complement; smaller values mean deeper entrenchment.
/// Requires believes(state, f).
Value entrenchment(const EpistemicState& state, const Formula& f);

/// Full conditionalization on the formula's event.  Destructive: the
/// complement becomes impossible and cannot be revived by later
/// revisions.
EpistemicState revise_full(const EpistemicState& state, const Formula& f);

/// Rank-shift revision: conditionals within the formula's event are
/// kept, the complement is conditioned within itself and pushed down by
/// the shift.  Coincides with revise_full when the complement already
/// has measure n.
EpistemicState revise_shift(const EpistemicState& state, const Formula& f,
                            const Rational& shift);

EpistemicState revise(const EpistemicState& state, const RevisionInput& input);

/// Candidates that are plainly believed, in input order.
std::vector<Formula> belief_set(const EpistemicState& state,
                                std::span<const Formula> candidates);

}  // namespace ucalc
