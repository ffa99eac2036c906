#include "ucalc/belief.hpp"

namespace ucalc {

EpistemicState::EpistemicState(QuasiMeasure measure)
    : measure_(std::move(measure)) {
  if (measure_.algebra().kind() != ValueKind::Cumulative)
    throw KindMismatchError("epistemic states take cumulative measures");
  if (!measure_.space()->is_assignment_space())
    throw VocabularyError(
        "epistemic states need a space built from an atom vocabulary");
}

Event EpistemicState::event(const Formula& f) const {
  return eval_event(f, space());
}

bool believes(const EpistemicState& state, const Formula& f) {
  return measure_of(state.measure(), state.event(f)) ==
         state.measure().algebra().e();
}

Value entrenchment(const EpistemicState& state, const Formula& f) {
  if (!believes(state, f))
    throw NotBelievedError("'" + print_formula(f) + "' is not believed");
  return measure_of(state.measure(), state.event(f).complement());
}

EpistemicState revise_full(const EpistemicState& state, const Formula& f) {
  return EpistemicState(conditionalize(state.measure(), state.event(f)));
}

EpistemicState revise_shift(const EpistemicState& state, const Formula& f,
                            const Rational& shift) {
  const Algebra& alg = state.measure().algebra();
  if (shift <= 0) throw BadShiftError("shift must be strictly positive");
  if (alg.group() == RankGroup::Integers &&
      boost::multiprecision::denominator(shift) != 1)
    throw BadShiftError("shift must be a whole rank for the integer group");

  const Event A = state.event(f);
  const QuasiMeasure& m = state.measure();
  const Value ra = measure_of(m, A);
  if (ra == alg.n())
    throw ImpossibleEvidenceError("cannot revise by an impossible formula");
  const Value rna = measure_of(m, A.complement());
  if (rna == alg.n()) return revise_full(state, f);

  const Value lift = CumulativeValue(RankValue::at(shift), Rational(1));
  std::vector<Value> table;
  table.reserve(m.space()->size());
  for (std::size_t w = 0; w < m.space()->size(); ++w) {
    if (A.contains(w)) {
      table.push_back(alg.solve_mul(ra, m.at(w)));
    } else {
      table.push_back(alg.mul(alg.solve_mul(rna, m.at(w)), lift));
    }
  }
  return EpistemicState(QuasiMeasure(alg, m.space(), std::move(table)));
}

EpistemicState revise(const EpistemicState& state,
                      const RevisionInput& input) {
  return revise_shift(state, input.formula, input.shift);
}

std::vector<Formula> belief_set(const EpistemicState& state,
                                std::span<const Formula> candidates) {
  std::vector<Formula> out;
  for (const Formula& f : candidates)
    if (believes(state, f)) out.push_back(f);
  return out;
}

}  // namespace ucalc
