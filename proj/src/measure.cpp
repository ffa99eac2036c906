#include "ucalc/measure.hpp"

#include <random>
#include <string>

namespace ucalc {

namespace {

Value fold_table(const Algebra& alg, const std::vector<Value>& table,
                 const std::vector<bool>* mask) {
  Value acc = alg.n();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    acc = alg.add(acc, table[i]);
  }
  return acc;
}

void require_space(const QuasiMeasure& m, const Event& A) {
  if (!(A.space() == m.space() || *A.space() == *m.space()))
    throw SpaceMismatchError("event does not range over the measure's space");
}

}  // namespace

QuasiMeasure::QuasiMeasure(Algebra alg,
                           std::shared_ptr<const WorldSpace> space,
                           std::vector<Value> table)
    : alg_(alg), space_(std::move(space)), table_(std::move(table)) {
  if (!space_ || table_.size() != space_->size())
    throw SpaceMismatchError("table size does not match the world space");
  for (const Value& v : table_) alg_.require(v);
  if (fold_table(alg_, table_, nullptr) != alg_.e())
    throw PreconditionError(
        "table is not normalized: values do not fold to e");
}

Value measure_of(const QuasiMeasure& m, const Event& A) {
  require_space(m, A);
  Value acc = m.algebra().n();
  for (std::size_t w = 0; w < A.space_size(); ++w)
    if (A.contains(w)) acc = m.algebra().add(acc, m.at(w));
  return acc;
}

Value conditional(const QuasiMeasure& m, const Event& A, const Event& B) {
  const Value rb = measure_of(m, B);
  if (rb == m.algebra().n()) return m.algebra().n();
  return m.algebra().solve_mul(rb, measure_of(m, A.intersect(B)));
}

QuasiMeasure conditionalize(const QuasiMeasure& m, const Event& B) {
  require_space(m, B);
  const Algebra& alg = m.algebra();
  const Value rb = measure_of(m, B);
  if (rb == alg.n())
    throw ImpossibleEvidenceError(
        "cannot conditionalize on an event of measure n");
  std::vector<Value> table;
  table.reserve(m.space()->size());
  for (std::size_t w = 0; w < m.space()->size(); ++w)
    table.push_back(B.contains(w) ? alg.solve_mul(rb, m.at(w)) : alg.n());
  return QuasiMeasure(alg, m.space(), std::move(table));
}

IndependenceReport check_independent(const QuasiMeasure& m,
                                     std::span<const Event> events,
                                     const Event& B) {
  if (events.empty() || events.size() > 10)
    throw PreconditionError("independence check takes 1 to 10 events");
  const Algebra& alg = m.algebra();
  if (measure_of(m, B) == alg.n())
    throw ImpossibleEvidenceError(
        "independence is undefined given an event of measure n");
  std::vector<Value> singles;
  singles.reserve(events.size());
  for (const Event& A : events) singles.push_back(conditional(m, A, B));
  const std::uint32_t subsets = (1u << events.size()) - 1;
  for (std::uint32_t bits = 1; bits <= subsets; ++bits) {
    Event meet = Event::all(B.space());
    Value product = alg.e();
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (!(bits >> i & 1)) continue;
      meet = meet.intersect(events[i]);
      product = alg.mul(product, singles[i]);
      indices.push_back(i);
    }
    const Value joint = conditional(m, meet, B);
    if (joint != product)
      return {false, std::move(indices), joint, product};
  }
  return {};
}

bool independent(const QuasiMeasure& m, std::span<const Event> events,
                 const Event& B) {
  return check_independent(m, events, B).independent;
}

QuasiMeasure normalize(const Algebra& alg,
                       std::shared_ptr<const WorldSpace> space,
                       std::vector<Value> raw) {
  if (!space || raw.size() != space->size())
    throw SpaceMismatchError("table size does not match the world space");
  for (const Value& v : raw) alg.require(v);
  const Value total = fold_table(alg, raw, nullptr);
  if (total == alg.n())
    throw AllImpossibleError("cannot normalize an all-impossible table");
  for (Value& v : raw) v = alg.solve_mul(total, v);
  return QuasiMeasure(alg, std::move(space), std::move(raw));
}

LawReport validate_table(const Algebra& alg,
                         const std::shared_ptr<const WorldSpace>& space,
                         std::span<const Value> table, int sample_pairs,
                         std::uint64_t seed) {
  if (!space || table.size() != space->size())
    throw SpaceMismatchError("table size does not match the world space");
  const std::size_t worlds = space->size();
  auto value_of = [&](const std::vector<bool>& members) {
    Value acc = alg.n();
    for (std::size_t w = 0; w < worlds; ++w)
      if (members[w]) acc = alg.add(acc, table[w]);
    return acc;
  };
  LawReport report;

  {
    LawCheck check{"normalization", true, {}};
    const Value total = value_of(std::vector<bool>(worlds, true));
    if (total != alg.e()) {
      check.passed = false;
      check.counterexample = "fold of all worlds is " + print_value(total);
    }
    report.checks.push_back(std::move(check));
  }
  {
    LawCheck check{"additivity on disjoint events", true, {}};
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < sample_pairs && check.passed; ++trial) {
      std::vector<bool> a(worlds), b(worlds), both(worlds);
      for (std::size_t w = 0; w < worlds; ++w) {
        switch (rng() % 3) {
          case 0: a[w] = both[w] = true; break;
          case 1: b[w] = both[w] = true; break;
          default: break;
        }
      }
      const Value sum = alg.add(value_of(a), value_of(b));
      const Value whole = value_of(both);
      if (whole != sum) {
        check.passed = false;
        check.counterexample = "R(A∪B) = " + print_value(whole) +
                               " but R(A) # R(B) = " + print_value(sum);
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    LawCheck check{"coherence of impossible worlds", true, {}};
    std::vector<bool> impossible(worlds);
    for (std::size_t w = 0; w < worlds; ++w)
      impossible[w] = (table[w] == alg.n());
    const Value folded = value_of(impossible);
    if (folded != alg.n()) {
      check.passed = false;
      check.counterexample =
          "union of impossible worlds has measure " + print_value(folded);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

LawReport validate(const QuasiMeasure& m, int sample_pairs,
                   std::uint64_t seed) {
  return validate_table(m.algebra(), m.space(), m.table(), sample_pairs,
                        seed);
}

PartitionMeasure::PartitionMeasure(Algebra alg, std::vector<Event> blocks,
                                   std::vector<Value> values)
    : alg_(alg), blocks_(std::move(blocks)), values_(std::move(values)) {
  if (alg_.kind() != ValueKind::Ranking)
    throw KindMismatchError("partition measures take ranking values");
  if (blocks_.empty() || blocks_.size() != values_.size())
    throw PartitionError("one value per block required");
  space_ = blocks_.front().space();
  std::vector<bool> covered(space_->size(), false);
  for (const Event& block : blocks_) {
    if (!(block.space() == space_ || *block.space() == *space_))
      throw PartitionError("blocks range over different spaces");
    if (block.empty()) throw PartitionError("empty block");
    for (std::size_t w : block.members()) {
      if (covered[w])
        throw PartitionError("blocks overlap at world '" + space_->id(w) +
                             "'");
      covered[w] = true;
    }
  }
  for (std::size_t w = 0; w < covered.size(); ++w)
    if (!covered[w])
      throw PartitionError("world '" + space_->id(w) + "' is uncovered");
  Value total = alg_.n();
  for (const Value& v : values_) {
    alg_.require(v);
    total = alg_.add(total, v);
  }
  if (total != alg_.e())
    throw PartitionError("block values are not normalized");
}

Value PartitionMeasure::cover_value(const Event& A) const {
  Value acc = alg_.n();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (!blocks_[i].intersect(A).empty()) acc = alg_.add(acc, values_[i]);
  }
  return acc;
}

QuasiMeasure extend(const PartitionMeasure& pm) {
  const std::shared_ptr<const WorldSpace>& space = pm.space();
  std::vector<Value> table(space->size(), pm.algebra().n());
  for (std::size_t i = 0; i < pm.blocks().size(); ++i)
    for (std::size_t w : pm.blocks()[i].members())
      table[w] = pm.values()[i];
  return QuasiMeasure(pm.algebra(), space, std::move(table));
}

}  // namespace ucalc
