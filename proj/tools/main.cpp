#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ucalc/belief.hpp"
#include "ucalc/io.hpp"

using namespace ucalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EpistemicState load_state(const std::string& path) {
  return EpistemicState(load_measure(path));
}

/// Splits "φ1 φ2 ... given ψ" positionals into formulas and evidence.
std::pair<std::vector<Formula>, std::optional<Formula>> split_given(
    const std::vector<std::string>& args) {
  std::vector<Formula> formulas;
  std::optional<Formula> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "given") {
      if (i + 2 != args.size())
        throw Usage("'given' takes exactly one trailing formula");
      given = parse_formula(args[i + 1]);
      break;
    }
    formulas.push_back(parse_formula(args[i]));
  }
  if (formulas.empty()) throw Usage("at least one formula is required");
  return {std::move(formulas), std::move(given)};
}

void print_report(const std::string& heading, const LawReport& report) {
  std::cout << heading << "\n";
  for (const LawCheck& check : report.checks) {
    std::cout << (check.passed ? "PASS  " : "FAIL  ") << check.law;
    if (!check.passed) std::cout << "  [" << check.counterexample << "]";
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "valuation algebras, quasi-measures over finite world spaces, and "
      "plain-belief revision"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string state_path;
  std::string out_path;
  std::string mode = "full";
  std::string delta = "1";
  std::string algebra_name;
  std::vector<std::string> formulas;

  auto add_state_flag = [&state_path](CLI::App* cmd) {
    cmd->add_option("-f,--file", state_path, "state file")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "value of a formula's event");
  add_state_flag(eval);
  eval->add_option("formula", formulas, "formula")->required();

  CLI::App* cond =
      app.add_subcommand("cond", "conditional value: φ given ψ");
  add_state_flag(cond);
  cond->add_option("formula", formulas, "φ given ψ")->required();

  CLI::App* indep = app.add_subcommand(
      "indep", "conditional independence of formulas, optionally given ψ");
  add_state_flag(indep);
  indep->add_option("formula", formulas, "φ1 φ2 ... [given ψ]")->required();

  CLI::App* believe = app.add_subcommand("believe", "is φ plainly believed");
  add_state_flag(believe);
  believe->add_option("formula", formulas, "formula")->required();

  CLI::App* entrench =
      app.add_subcommand("entrench", "entrenchment of a belief");
  add_state_flag(entrench);
  entrench->add_option("formula", formulas, "formula")->required();

  CLI::App* revise = app.add_subcommand("revise", "revise the state by φ");
  add_state_flag(revise);
  revise->add_option("--mode", mode, "full or shift")
      ->check(CLI::IsMember({"full", "shift"}));
  revise->add_option("--delta", delta, "rank increment for shift mode");
  revise->add_option("-o,--out", out_path, "output state file")->required();
  revise->add_option("formula", formulas, "formula")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "magnitude class of an algebra");
  classify_cmd
      ->add_option("--algebra", algebra_name,
                   "real | ranking [z|q] | cumulative [z|q]")
      ->required();

  CLI::App* extend_cmd = app.add_subcommand(
      "extend", "extend a partition measure to all worlds");
  extend_cmd->add_option("-f,--file", state_path, "partition file")
      ->required();

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "measure and algebra law report");
  add_state_flag(validate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (eval->parsed()) {
    const QuasiMeasure m = load_measure(state_path);
    if (formulas.size() != 1) throw Usage("eval takes one formula");
    const Event a = eval_event(parse_formula(formulas[0]), m.space());
    std::cout << print_value(measure_of(m, a)) << "\n";
    return kExitOk;
  }

  if (cond->parsed()) {
    const QuasiMeasure m = load_measure(state_path);
    auto [fs, given] = split_given(formulas);
    if (fs.size() != 1 || !given)
      throw Usage("cond takes exactly 'φ given ψ'");
    const Event a = eval_event(fs[0], m.space());
    const Event b = eval_event(*given, m.space());
    std::cout << print_value(conditional(m, a, b)) << "\n";
    return kExitOk;
  }

  if (indep->parsed()) {
    const QuasiMeasure m = load_measure(state_path);
    auto [fs, given] = split_given(formulas);
    std::vector<Event> events;
    events.reserve(fs.size());
    for (const Formula& f : fs) events.push_back(eval_event(f, m.space()));
    const Event b =
        given ? eval_event(*given, m.space()) : Event::all(m.space());
    const IndependenceReport report = check_independent(m, events, b);
    if (report.independent) {
      std::cout << "yes\n";
    } else {
      std::cout << "no";
      for (std::size_t i : report.violating)
        std::cout << " \"" << print_formula(fs[i]) << '"';
      std::cout << "  joint " << print_value(*report.joint)
                << " != product " << print_value(*report.product) << "\n";
    }
    return kExitOk;
  }

  if (believe->parsed()) {
    const EpistemicState state = load_state(state_path);
    if (formulas.size() != 1) throw Usage("believe takes one formula");
    std::cout << (believes(state, parse_formula(formulas[0])) ? "yes" : "no")
              << "\n";
    return kExitOk;
  }

  if (entrench->parsed()) {
    const EpistemicState state = load_state(state_path);
    if (formulas.size() != 1) throw Usage("entrench takes one formula");
    std::cout << print_value(entrenchment(state, parse_formula(formulas[0])))
              << "\n";
    return kExitOk;
  }

  if (revise->parsed()) {
    const EpistemicState state = load_state(state_path);
    if (formulas.size() != 1) throw Usage("revise takes one formula");
    const Formula f = parse_formula(formulas[0]);
    const EpistemicState next =
        mode == "full" ? revise_full(state, f)
                       : revise_shift(state, f, parse_rational(delta));
    save_measure(out_path, next.measure());
    return kExitOk;
  }

  if (classify_cmd->parsed()) {
    std::cout << to_string(parse_algebra_spec(algebra_name).classify())
              << "\n";
    return kExitOk;
  }

  if (extend_cmd->parsed()) {
    const PartitionMeasure pm = load_partition(state_path);
    write_measure(std::cout, extend(pm));
    return kExitOk;
  }

  if (validate_cmd->parsed()) {
    const QuasiMeasure m = load_measure(state_path);
    const LawReport measure_report = validate(m);
    print_report("measure checks", measure_report);
    std::vector<Value> samples(m.table().begin(), m.table().end());
    samples.push_back(measure_of(m, Event::all(m.space())));
    const LawReport axiom_report = check_axioms(m.algebra(), samples);
    print_report("algebra checks", axiom_report);
    return measure_report.all_passed() && axiom_report.all_passed()
               ? kExitOk
               : kExitDomain;
  }

  throw Usage("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
