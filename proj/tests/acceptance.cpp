// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion holds.  All comparisons are exact rational equalities.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "ucalc/belief.hpp"
#include "ucalc/io.hpp"

using namespace ucalc;
using namespace ucalc::testing;

namespace {

struct Acceptance {
  bool all_ok = true;

  void criterion(const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = std::string("  [") + e.what() + "]";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << detail << "\n";
    all_ok = all_ok && ok;
  }
};

// --- criterion 1 ----------------------------------------------------------

bool axiom_suite() {
  for (const Algebra& alg : all_algebras()) {
    Rng rng(0xA1);
    const auto samples = random_values(rng, alg, 1000);
    const LawReport report = check_axioms(alg, samples);
    if (!report.all_passed()) {
      for (const LawCheck& c : report.checks)
        if (!c.passed)
          std::cout << "      " << algebra_spec(alg) << ": " << c.law << " "
                    << c.counterexample << "\n";
      return false;
    }
  }
  return true;
}

// --- criterion 2 ----------------------------------------------------------

bool trichotomy() {
  const std::map<std::string, MagnitudeClass> expected{
      {"real", MagnitudeClass::SP},
      {"ranking z", MagnitudeClass::SR},
      {"ranking q", MagnitudeClass::SR},
      {"cumulative z", MagnitudeClass::SH},
      {"cumulative q", MagnitudeClass::SH},
  };
  for (const Algebra& alg : all_algebras()) {
    if (alg.classify() != expected.at(algebra_spec(alg))) return false;
    Rng rng(0xA2);
    const auto pool = random_values(rng, alg, 64);
    if (trichotomy_at(alg, alg.e(), pool) != alg.classify()) return false;
    for (int i = 0; i < 50; ++i) {
      Value x = random_value(rng, alg);
      while (x == alg.n()) x = random_value(rng, alg);
      if (trichotomy_at(alg, x, pool) != alg.classify()) return false;
    }
  }
  return true;
}

// --- criterion 3 ----------------------------------------------------------

bool hierarchy() {
  for (const Algebra& alg : all_algebras()) {
    Rng rng(0xA3);
    const auto triples = random_triples(rng, alg, 1000);
    if (!check_modular(alg, triples).ok) return false;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& [a, b, c] = triples[i];
      const Value& d = triples[(i + 1) % triples.size()][0];
      if (alg.negligible(a, b) && alg.negligible(b, c) &&
          !alg.negligible(a, c))
        return false;
      if (alg.negligible(a, b) && alg.negligible(b, a) && !(a == b))
        return false;
      if (alg.negligible(a, b) && !alg.leq(a, b)) return false;
      // v << x <<< x' << v'  must give  v <<< v'
      if (alg.less(a, b) && alg.negligible(b, c) && alg.less(c, d) &&
          !alg.negligible(a, d))
        return false;
    }
  }
  return true;
}

// --- criterion 4 ----------------------------------------------------------

std::vector<Event> all_events(const std::shared_ptr<const WorldSpace>& space) {
  std::vector<Event> out;
  const std::size_t n = space->size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<bool> members(n);
    for (std::size_t w = 0; w < n; ++w) members[w] = bits >> w & 1;
    out.emplace_back(space, std::move(members));
  }
  return out;
}

bool conditioning_oracle() {
  const Algebra alg = Algebra::cumulative(RankGroup::Integers);
  Rng rng(0xA4);
  for (std::size_t worlds = 1; worlds <= 6; ++worlds) {
    std::vector<std::string> ids;
    for (std::size_t w = 0; w < worlds; ++w)
      ids.push_back("w" + std::to_string(w));
    auto space = WorldSpace::labeled(ids);
    const auto events = all_events(space);
    for (int trial = 0; trial < 200; ++trial) {
      const QuasiMeasure m = random_measure(rng, alg, space);
      for (const Event& b : events) {
        if (measure_of(m, b) == alg.n()) continue;
        const QuasiMeasure mb = conditionalize(m, b);
        if (!validate(mb, 8).all_passed()) return false;
        for (const Event& x : events)
          if (measure_of(mb, x) != conditional(m, x, b)) return false;
      }
    }
  }
  return true;
}

// --- criterion 5 ----------------------------------------------------------

// Direct finite-probability oracle on rational world weights.
struct ProbOracle {
  std::vector<Rational> weight;

  Rational of(const Event& a) const {
    Rational sum = 0;
    for (std::size_t w : a.members()) sum += weight[w];
    return sum;
  }

  Rational cond(const Event& a, const Event& b) const {
    const Rational pb = of(b);
    if (pb == 0) return 0;
    return of(a.intersect(b)) / pb;
  }

  bool indep(std::span<const Event> events, const Event& b) const {
    const std::uint32_t subsets = (1u << events.size()) - 1;
    for (std::uint32_t bits = 1; bits <= subsets; ++bits) {
      Event meet = Event::all(b.space());
      Rational product = 1;
      for (std::size_t i = 0; i < events.size(); ++i) {
        if (!(bits >> i & 1)) continue;
        meet = meet.intersect(events[i]);
        product *= cond(events[i], b);
      }
      if (cond(meet, b) != product) return false;
    }
    return true;
  }
};

bool classical_embedding() {
  const Algebra alg = Algebra::cumulative(RankGroup::Integers);
  Rng rng(0xA5);
  auto lift = [&](const Rational& p) -> Value {
    if (p == 0) return alg.n();
    return CumulativeValue(RankValue::at(Rational(0)), p);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t worlds = 1 + trial % 6;
    std::vector<std::string> ids;
    for (std::size_t w = 0; w < worlds; ++w)
      ids.push_back("w" + std::to_string(w));
    auto space = WorldSpace::labeled(ids);

    ProbOracle oracle;
    Rational total = 0;
    std::uniform_int_distribution<int> num(0, 9);
    for (std::size_t w = 0; w < worlds; ++w) {
      oracle.weight.push_back(Rational(num(rng), 7));
      total += oracle.weight.back();
    }
    if (total == 0) {
      oracle.weight[0] = 1;
      total = 1;
    }
    for (Rational& p : oracle.weight) p /= total;

    std::vector<Value> table;
    for (const Rational& p : oracle.weight) table.push_back(lift(p));
    const QuasiMeasure m(alg, space, table);

    const auto events = all_events(space);
    for (const Event& a : events)
      if (measure_of(m, a) != lift(oracle.of(a))) return false;
    for (const Event& b : events)
      for (const Event& a : events)
        if (conditional(m, a, b) != lift(oracle.cond(a, b))) return false;
    if (worlds >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
      for (int fam = 0; fam < 10; ++fam) {
        const std::vector<Event> family{events[pick(rng)],
                                        events[pick(rng)]};
        const Event& b = events[pick(rng)];
        if (oracle.of(b) == 0) continue;
        if (independent(m, family, b) != oracle.indep(family, b))
          return false;
      }
    }
  }
  return true;
}

// --- criterion 6 ----------------------------------------------------------

// All set partitions of {0..n-1}, as block-index assignments.
void for_each_partition(std::size_t n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> assign(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
    if (i == n) {
      fn(assign);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(1, 1);
  if (n == 0) fn(assign);
}

bool extension() {
  const Algebra alg = Algebra::ranking(RankGroup::Integers);
  Rng rng(0xA6);
  for (std::size_t worlds = 1; worlds <= 5; ++worlds) {
    std::vector<std::string> ids;
    for (std::size_t w = 0; w < worlds; ++w)
      ids.push_back("w" + std::to_string(w));
    auto space = WorldSpace::labeled(ids);
    bool failed = false;
    for_each_partition(worlds, [&](const std::vector<int>& assign) {
      if (failed) return;
      const int block_count =
          1 + *std::max_element(assign.begin(), assign.end());
      std::vector<Event> blocks;
      for (int b = 0; b < block_count; ++b) {
        std::vector<bool> bits(worlds, false);
        for (std::size_t w = 0; w < worlds; ++w) bits[w] = assign[w] == b;
        blocks.emplace_back(space, std::move(bits));
      }
      // several normalized depth assignments per partition; depth draw 3
      // stands for an impossible block
      for (int variant = 0; variant < 5; ++variant) {
        std::vector<Value> values;
        std::uniform_int_distribution<int> draw(0, 3);
        bool has_top = false;
        for (int b = 0; b < block_count; ++b) {
          const int d = variant == 0 ? b : draw(rng);
          if (d == 3 && block_count > 1) {
            values.push_back(alg.n());
            continue;
          }
          const int clamped = d == 3 ? 0 : d;
          if (clamped == 0) has_top = true;
          values.push_back(RankValue::at(Rational(clamped)));
        }
        if (!has_top) values[0] = alg.e();
        const PartitionMeasure pm(alg, blocks, values);
        const QuasiMeasure ext = extend(pm);

        // agreement on every block union
        for (std::uint32_t sel = 0;
             sel < (std::uint32_t{1} << block_count); ++sel) {
          Event u = Event::none(space);
          Value folded = alg.n();
          for (int b = 0; b < block_count; ++b) {
            if (!(sel >> b & 1)) continue;
            u = u.unite(blocks[b]);
            folded = alg.add(folded, pm.values()[b]);
          }
          if (measure_of(ext, u) != folded) {
            failed = true;
            return;
          }
        }
        // every event gets the value of its smallest cover
        for (const Event& a : all_events(space)) {
          if (a.empty()) continue;
          if (measure_of(ext, a) != pm.cover_value(a)) {
            failed = true;
            return;
          }
        }
        // pointwise maximality over all alternative extensions drawing
        // per-world values from the block value, one rank deeper, or n
        std::vector<std::vector<Value>> pools(worlds);
        for (std::size_t w = 0; w < worlds; ++w) {
          const Value& bv = pm.values()[assign[w]];
          pools[w].push_back(bv);
          if (!(bv == alg.n())) {
            pools[w].push_back(
                alg.mul(bv, RankValue::at(Rational(1))));
            pools[w].push_back(alg.n());
          }
        }
        std::vector<std::size_t> choice(worlds, 0);
        const auto events = all_events(space);
        while (true) {
          std::vector<Value> alt;
          for (std::size_t w = 0; w < worlds; ++w)
            alt.push_back(pools[w][choice[w]]);
          // keep only genuine extensions: per block, max = block value
          bool agrees = true;
          for (int b = 0; b < block_count && agrees; ++b) {
            Value folded = alg.n();
            for (std::size_t w : blocks[b].members())
              folded = alg.add(folded, alt[w]);
            agrees = folded == pm.values()[b];
          }
          if (agrees) {
            for (const Event& a : events) {
              Value alt_value = alg.n();
              for (std::size_t w : a.members())
                alt_value = alg.add(alt_value, alt[w]);
              if (!alg.leq(alt_value, measure_of(ext, a))) {
                failed = true;
                return;
              }
            }
          }
          std::size_t i = 0;
          while (i < worlds && ++choice[i] == pools[i].size()) {
            choice[i] = 0;
            ++i;
          }
          if (i == worlds) break;
        }
      }
    });
    if (failed) return false;
  }
  return true;
}

// --- criterion 7 ----------------------------------------------------------

Formula random_formula(Rng& rng, std::size_t atom_count, int depth) {
  static const std::vector<std::string> names{"p", "q", "r", "s"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  std::uniform_int_distribution<std::size_t> atom(0, atom_count - 1);
  switch (pick(rng)) {
    case 0: return Formula::atom(names[atom(rng)]);
    case 1:
      return rng() % 8 ? Formula::atom(names[atom(rng)]) : Formula::top();
    case 2:
      return Formula::negation(random_formula(rng, atom_count, depth - 1));
    case 3:
      return Formula::conjunction(random_formula(rng, atom_count, depth - 1),
                                  random_formula(rng, atom_count, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, atom_count, depth - 1),
                                  random_formula(rng, atom_count, depth - 1));
    default:
      return Formula::implication(random_formula(rng, atom_count, depth - 1),
                                  random_formula(rng, atom_count, depth - 1));
  }
}

EpistemicState random_state(Rng& rng, std::size_t atoms) {
  static const std::vector<std::string> names{"p", "q", "r", "s"};
  auto space =
      WorldSpace::assignments({names.begin(), names.begin() + atoms});
  return EpistemicState(random_measure(
      rng, Algebra::cumulative(RankGroup::Integers), std::move(space)));
}

bool belief_layer() {
  Rng rng(0xA7);

  // conjunctive closure over 500 random states
  int closures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t atoms = 1 + trial % 3;
    const EpistemicState s = random_state(rng, atoms);
    const Formula f = random_formula(rng, atoms, 2);
    const Formula g = random_formula(rng, atoms, 2);
    if (believes(s, f) && believes(s, g)) {
      if (!believes(s, Formula::conjunction(f, g))) return false;
      ++closures;
    }
  }
  if (closures < 50) return false;

  // a state believing p without rejecting !p
  {
    const EpistemicState s(example_measure());
    const Algebra& alg = s.measure().algebra();
    if (!believes(s, Formula::atom("p"))) return false;
    const Value not_p =
        measure_of(s.measure(), s.event(Formula::atom("p")).complement());
    if (!(alg.less(alg.n(), not_p) && alg.less(not_p, alg.e())))
      return false;
  }

  // top-conditionalization, exhaustive over events up to 4 atoms
  const Value top_rank = RankValue::at(Rational(0));
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    const int trials = atoms == 4 ? 2 : 8;
    for (int trial = 0; trial < trials; ++trial) {
      const EpistemicState s = random_state(rng, atoms);
      const QuasiMeasure& m = s.measure();
      const Algebra& alg = m.algebra();
      Formula f = random_formula(rng, atoms, 2);
      if (measure_of(m, s.event(f)) == alg.n()) f = Formula::top();
      const Event a = s.event(f);

      std::vector<QuasiMeasure> revised;
      revised.push_back(revise_full(s, f).measure());
      revised.push_back(revise_shift(s, f, 1).measure());
      revised.push_back(revise_shift(s, f, 3).measure());

      const std::size_t worlds = m.space()->size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << worlds);
           ++bits) {
        std::vector<bool> members(worlds);
        for (std::size_t w = 0; w < worlds; ++w) members[w] = bits >> w & 1;
        const Event b(m.space(), members);
        const Value cond = conditional(m, b, a);
        if (cond == alg.n() || !(cond.as_cumulative().rank() == top_rank))
          continue;
        for (const QuasiMeasure& r : revised)
          if (measure_of(r, b) != cond) return false;
      }
    }
  }

  // revise_shift success: believed formula, valid state, entrenchment = δ
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t atoms = 1 + trial % 3;
    const EpistemicState s = random_state(rng, atoms);
    const Formula f = random_formula(rng, atoms, 2);
    const Algebra& alg = s.measure().algebra();
    const Event a = s.event(f);
    if (measure_of(s.measure(), a) == alg.n()) continue;
    const Rational delta(1 + trial % 3);
    const EpistemicState r = revise_shift(s, f, delta);
    if (!believes(r, f)) return false;
    if (!validate(r.measure(), 8).all_passed()) return false;
    if (!(measure_of(s.measure(), a.complement()) == alg.n())) {
      const Value after = entrenchment(r, f);
      if (!(after ==
            Value(CumulativeValue(RankValue::at(delta), Rational(1)))))
        return false;
    }
  }
  return true;
}

// --- criterion 8 ----------------------------------------------------------

bool oracle_eval(const Formula& f, const std::map<std::string, bool>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Atom: return env.at(f.atom_name());
    case K::Not: return !oracle_eval(f.child(), env);
    case K::And:
      return oracle_eval(f.lhs(), env) && oracle_eval(f.rhs(), env);
    case K::Or: return oracle_eval(f.lhs(), env) || oracle_eval(f.rhs(), env);
    case K::Implies:
      return !oracle_eval(f.lhs(), env) || oracle_eval(f.rhs(), env);
    case K::Iff:
      return oracle_eval(f.lhs(), env) == oracle_eval(f.rhs(), env);
  }
  return false;
}

std::uint8_t oracle_mask(const Formula& f,
                         const std::shared_ptr<const WorldSpace>& space) {
  std::uint8_t mask = 0;
  for (std::size_t w = 0; w < space->size(); ++w) {
    std::map<std::string, bool> env;
    for (std::size_t a = 0; a < space->atoms().size(); ++a)
      env[space->atoms()[a]] = space->atom_true_in(w, a);
    if (oracle_eval(f, env)) mask |= std::uint8_t{1} << w;
  }
  return mask;
}

std::uint8_t event_mask(const Event& e) {
  std::uint8_t mask = 0;
  for (std::size_t w = 0; w < e.space_size(); ++w)
    if (e.contains(w)) mask |= std::uint8_t{1} << w;
  return mask;
}

bool parser_oracle() {
  auto space = WorldSpace::assignments({"p", "q"});

  // depth-wise closure with one representative per semantic class:
  // eval_event and the oracle are both compositional in the children's
  // events, so this covers every tree of depth <= 3
  std::vector<Formula> level{Formula::top(), Formula::bottom(),
                             Formula::atom("p"), Formula::atom("q")};
  std::map<std::uint8_t, Formula> classes;
  for (const Formula& f : level) {
    if (event_mask(eval_event(f, space)) != oracle_mask(f, space))
      return false;
    classes.emplace(oracle_mask(f, space), f);
  }
  for (int depth = 1; depth <= 3; ++depth) {
    std::map<std::uint8_t, Formula> next = classes;
    for (const auto& [ma, fa] : classes) {
      const Formula neg = Formula::negation(fa);
      if (event_mask(eval_event(neg, space)) != oracle_mask(neg, space))
        return false;
      next.emplace(oracle_mask(neg, space), neg);
      for (const auto& [mb, fb] : classes) {
        for (const Formula& f :
             {Formula::conjunction(fa, fb), Formula::disjunction(fa, fb),
              Formula::implication(fa, fb), Formula::equivalence(fa, fb)}) {
          if (event_mask(eval_event(f, space)) != oracle_mask(f, space))
            return false;
          next.emplace(oracle_mask(f, space), f);
        }
      }
    }
    classes = std::move(next);
  }
  if (classes.size() != 16) return false;

  // print/parse round trip on 1000 random ASTs
  Rng rng(0xA8);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, 4, 5);
    if (!(parse_formula(print_formula(f)) == f)) return false;
  }
  return true;
}

// --- criterion 9 ----------------------------------------------------------

std::string shell_quote(const std::string& arg) {
  std::string quoted = "'";
  for (char c : arg) {
    if (c == '\'') quoted += "'\\''";
    else quoted += c;
  }
  return quoted + "'";
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::string command = shell_quote(UCALC_CLI_PATH);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buffer[512];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
    out.append(buffer, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool cli_golden() {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() /
      ("ucalc_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() { std::filesystem::remove_all(dir); }
  } cleanup{dir};

  const fs::path state = dir / "ex.qm";
  {
    std::ofstream out(state);
    out << "algebra cumulative z\n"
           "atoms p q\n"
           "pq 0:3/5\n"
           "p!q 0:2/5\n"
           "!pq 1:1\n"
           "!p!q 2:1/2\n";
  }
  if (run_cli({"eval", "-f", state.string(), "p"}) !=
      std::pair{0, std::string("0:1\n")})
    return false;
  if (run_cli({"eval", "-f", state.string(), "q"}) !=
      std::pair{0, std::string("0:3/5\n")})
    return false;
  if (run_cli({"cond", "-f", state.string(), "q", "given", "!p"}) !=
      std::pair{0, std::string("0:1\n")})
    return false;
  if (run_cli({"believe", "-f", state.string(), "q"}) !=
      std::pair{0, std::string("no\n")})
    return false;

  const fs::path out = dir / "revised.qm";
  if (run_cli({"revise", "-f", state.string(), "-o", out.string(), "!p"})
          .first != 0)
    return false;
  if (run_cli({"believe", "-f", out.string(), "q"}) !=
      std::pair{0, std::string("yes\n")})
    return false;
  return true;
}

}  // namespace

int main() {
  Acceptance acc;
  acc.criterion(
      "1. axiom suite: semigroup, order and accessibility laws, derived "
      "bounds, cancellation on 1000 random tuples per algebra",
      axiom_suite);
  acc.criterion(
      "2. trichotomy: SP/SR/SH classification agrees with the "
      "per-element test at 50 random x != n",
      trichotomy);
  acc.criterion(
      "3. hierarchy: modularity, transitivity, anti-symmetry and "
      "extendibility of the magnitude ordering on 1000 triples per algebra",
      hierarchy);
  acc.criterion(
      "4. conditioning: conditionalize validates and matches conditionals "
      "on every event, spaces up to 6 worlds x 200 measures",
      conditioning_oracle);
  acc.criterion(
      "5. classical embedding: rank-zero cumulative measures reproduce "
      "the rational probability oracle exactly",
      classical_embedding);
  acc.criterion(
      "6. extension: block-union agreement and pointwise maximality over "
      "all partitions of spaces up to 5 worlds",
      extension);
  acc.criterion(
      "7. belief layer: conjunctive closure, belief without rejection, "
      "top-conditionalization, revise_shift success",
      belief_layer);
  acc.criterion(
      "8. parser: depth-3 enumeration matches the truth-table oracle; "
      "1000 AST round trips",
      parser_oracle);
  acc.criterion(
      "9. CLI golden files: worked 4-world example and revision by !p",
      cli_golden);
  return acc.all_ok ? 0 : 1;
}
