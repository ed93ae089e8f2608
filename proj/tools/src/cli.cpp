#include "hteq_tools/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <hteq/classical.hpp>
#include <hteq/equivalence.hpp>
#include <hteq/ht.hpp>
#include <hteq/kripke.hpp>
#include <hteq/parser.hpp>
#include <hteq/prover.hpp>
#include <hteq/serialize.hpp>
#include <hteq/stable.hpp>

#include "hteq_tools/paper_suite.hpp"

namespace hteq::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool force = false;
  std::size_t threads = 1;

  Guard guard() const { return Guard{force}; }
};

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_program(text.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

AtomSet atom_list(const std::vector<std::string>& names) {
  AtomSet out;
  for (const auto& n : names) out.insert(Atom(n));
  return out;
}

std::vector<Formula> formulas(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse_formula(t));
  return out;
}

std::string ht_text(const HTModel& m) {
  return "<" + render(m.here()) + ", " + render(m.there()) + ">";
}

void print_countermodel(std::ostream& out, const Countermodel& cm) {
  for (std::size_t w = 0; w < cm.model.world_count(); ++w) {
    out << "world " << w << ": " << render(cm.model.label(w)) << '\n';
  }
  for (auto [a, b] : cm.model.covering_pairs()) out << "order " << a << " < " << b << '\n';
  out << "witness " << cm.witness << '\n';
}

void print_derivation(std::ostream& out, const Derivation& d, std::size_t indent = 0) {
  out << std::string(indent, ' ') << d.rule << ": " << render(d.sequent) << '\n';
  for (const auto& p : d.premises) print_derivation(out, p, indent + 2);
}

int verdict_code(const Verdict& v) {
  if (v.provable()) return exit_code::yes;
  if (v.refuted()) return exit_code::no;
  return exit_code::unknown;
}

Verdict decide(const std::string& logic, const std::vector<Formula>& premises,
               const Formula& goal, std::size_t bound, const Guard& guard) {
  if (logic == "ipl") return ipl_decide(premises, goal, bound, guard);
  if (logic == "kc") return kc_decide(premises, goal, bound, guard);
  return g3_decide(premises, goal, guard);
}

// Each program derives every rule of the other.
int logic_equivalence(std::ostream& out, const Globals& g, const std::string& logic,
                      const Program& a, const Program& b, std::size_t bound) {
  json verdicts = json::array();
  bool refuted = false;
  bool unknown = false;
  auto direction = [&](const Program& from, const Program& to) {
    for (const auto& r : to.rules()) {
      const Verdict v = decide(logic, from.formulas(), r.as_formula(), bound, g.guard());
      refuted = refuted || v.refuted();
      unknown = unknown || v.unknown();
      json j = to_json(v);
      j["goal"] = render(r);
      verdicts.push_back(j);
      if (!g.json) out << kind_name(v.kind) << ": " << render(r) << '\n';
    }
  };
  direction(a, b);
  direction(b, a);
  const int code = refuted ? exit_code::no : unknown ? exit_code::unknown : exit_code::yes;
  if (g.json) {
    json j = {{"logic", logic}, {"verdicts", verdicts}};
    j["equivalent"] = code == exit_code::yes ? json(true) : code == exit_code::no ? json(false) : json();
    out << j.dump(2) << '\n';
  } else {
    out << (code == exit_code::yes ? "equivalent" : code == exit_code::no ? "not equivalent" : "unknown")
        << " in " << logic << '\n';
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Answer sets, strong equivalence and intermediate-logic checks for propositional programs"};
  app.name("hteq");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON");
  app.add_flag("--force", g.force, "Override enumeration guards");
  app.add_option("--threads", g.threads, "Worker threads for the extension oracle")
      ->check(CLI::Range(1, 256));

  std::string file;
  std::string file2;
  std::vector<std::string> universe;
  std::string method = "reduct";
  auto* answersets = app.add_subcommand("answersets", "List the answer sets of a program");
  answersets->add_option("file", file, "Program file")->required();
  answersets->add_option("--method", method, "reduct or equilibrium")
      ->check(CLI::IsMember({"reduct", "equilibrium"}));
  answersets->add_option("--universe", universe, "Extra atoms")->delimiter(',');

  std::vector<std::string> witness;
  auto* reduct_cmd = app.add_subcommand("reduct", "Print the reduct of a program by a set of atoms");
  reduct_cmd->add_option("file", file, "Program file")->required();
  reduct_cmd->add_option("--set", witness, "The set X, comma separated")->delimiter(',');

  auto* ht_cmd = app.add_subcommand("ht-models", "List the here-and-there models of a program");
  ht_cmd->add_option("file", file, "Program file")->required();
  ht_cmd->add_option("--universe", universe, "Extra atoms")->delimiter(',');

  std::string logic = "g3";
  std::size_t bound = 5;
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two programs in a logic");
  equiv->add_option("first", file, "Program file")->required();
  equiv->add_option("second", file2, "Program file")->required();
  equiv->add_option("--logic", logic, "cpl, g3, kc or ipl")
      ->check(CLI::IsMember({"cpl", "g3", "kc", "ipl"}));
  equiv->add_option("--bound", bound, "Model size bound for kc and ipl");

  auto* strong = app.add_subcommand("strong-equiv", "Decide strong equivalence of two programs");
  strong->add_option("first", file, "Program file")->required();
  strong->add_option("second", file2, "Program file")->required();

  std::string frag = "rules:and,or,not";
  std::size_t depth = 2;
  auto* express = app.add_subcommand("expressibility",
                                     "Search a fragment for a program strongly equivalent to the input");
  express->add_option("file", file, "Program file")->required();
  express->add_option("--frag", frag, "Fragment, e.g. rules:and,not or and,imp or normal");
  express->add_option("--depth", depth, "Maximum depth of bodies and heads");

  std::vector<std::string> premises;
  std::string goal;
  bool single_top = false;
  auto* counter = app.add_subcommand("countermodel", "Search for a finite Kripke countermodel");
  counter->add_option("--premise", premises, "Premise formula (repeatable)");
  counter->add_option("--goal", goal, "Goal formula")->required();
  counter->add_flag("--single-top", single_top, "Only models with one terminal node");
  counter->add_option("--bound", bound, "Maximum number of worlds");

  auto* prove = app.add_subcommand("prove", "Decide derivability in IPL, KC or G3");
  prove->add_option("--premise", premises, "Premise formula (repeatable)");
  prove->add_option("--goal", goal, "Goal formula")->required();
  prove->add_option("--logic", logic, "ipl, kc or g3")->check(CLI::IsMember({"ipl", "kc", "g3"}));
  prove->add_option("--bound", bound, "Model size bound for countermodels");

  std::uint64_t seed = suite::default_seed;
  bool timings = false;
  auto* check = app.add_subcommand("check-paper", "Replay every worked example and lemma check");
  check->add_option("--seed", seed, "Seed for the randomized suites");
  check->add_flag("--timings", timings, "Report the time taken by each check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::error;
  }

  try {
    if (*answersets) {
      const Program p = load_program(file);
      AtomSet u = p.universe();
      const AtomSet extra = atom_list(universe);
      u.insert(extra.begin(), extra.end());
      const auto report = method == "reduct" ? answer_sets_reduct(p, u, g.guard())
                                             : answer_sets_ht(p, u, g.guard());
      if (g.json) {
        out << to_json(report).dump() << '\n';
      } else if (report.answer_sets.empty()) {
        out << "no answer sets\n";
      } else {
        for (const auto& s : report.answer_sets) out << render(s) << '\n';
      }
      return report.answer_sets.empty() ? exit_code::no : exit_code::yes;
    }
    if (*reduct_cmd) {
      const Reduct r = reduct(load_program(file), atom_list(witness));
      if (g.json) {
        out << to_json(r).dump(2) << '\n';
      } else {
        out << render(r.rules);
      }
      return exit_code::yes;
    }
    if (*ht_cmd) {
      const Program p = load_program(file);
      AtomSet u = p.universe();
      const AtomSet extra = atom_list(universe);
      u.insert(extra.begin(), extra.end());
      const auto models = ht_models_of(p, u, g.guard());
      if (g.json) {
        json j = json::array();
        for (const auto& m : models) j.push_back(to_json(m));
        out << json{{"ht_models", j}}.dump() << '\n';
      } else {
        for (const auto& m : models) out << ht_text(m) << '\n';
      }
      return exit_code::yes;
    }
    if (*equiv) {
      const Program a = load_program(file);
      const Program b = load_program(file2);
      if (logic == "kc" || logic == "ipl") return logic_equivalence(out, g, logic, a, b, bound);
      json j = {{"logic", logic}};
      bool same = false;
      if (logic == "cpl") {
        const auto w = cpl_separating_world(a, b, g.guard());
        same = !w;
        if (w) j["separating_world"] = to_json(*w);
        if (!g.json) out << (same ? "equivalent in cpl\n" : "not equivalent in cpl, separated by " + render(*w) + "\n");
      } else {
        const auto m = g3_separating_model(a, b, g.guard());
        same = !m;
        if (m) j["separating_ht_model"] = to_json(*m);
        if (!g.json) out << (same ? "equivalent in g3\n" : "not equivalent in g3, separated by " + ht_text(*m) + "\n");
      }
      j["equivalent"] = same;
      if (g.json) out << j.dump(2) << '\n';
      return same ? exit_code::yes : exit_code::no;
    }
    if (*strong) {
      const auto r = classify(load_program(file), load_program(file2), g.guard(), g.threads);
      if (g.json) {
        out << to_json(r).dump(2) << '\n';
      } else {
        out << (r.strongly_equivalent ? "strongly equivalent" : "not strongly equivalent") << '\n';
        out << "cpl: " << (r.cpl ? "equivalent" : "not equivalent") << '\n';
        out << "g3: " << (r.g3 ? "equivalent" : "not equivalent") << '\n';
        if (r.kc_on_fragment) out << "kc: " << (*r.kc_on_fragment ? "equivalent" : "not equivalent") << '\n';
        out << "answer sets: " << (r.same_answer_sets ? "same" : "different") << '\n';
        if (r.separating_world) out << "classical witness: " << render(*r.separating_world) << '\n';
        if (r.separating_ht_model) out << "HT witness: " << ht_text(*r.separating_ht_model) << '\n';
        if (r.separating_extension) {
          std::string rules;
          for (const auto& rule : r.separating_extension->rules()) rules += (rules.empty() ? "" : " ") + render(rule);
          out << "separating extension: " << (rules.empty() ? "(empty program)" : rules) << '\n';
        }
      }
      return r.strongly_equivalent ? exit_code::yes : exit_code::no;
    }
    if (*express) {
      const auto r = expressibility_search(load_program(file), FragmentDescriptor::parse(frag), depth,
                                           g.guard());
      if (g.json) {
        json j = {{"found", r.program.has_value()},
                  {"distinct_formulas", r.distinct_formulas},
                  {"distinct_rules", r.distinct_rules}};
        if (r.program) {
          json rules = json::array();
          for (const auto& rule : r.program->rules()) rules.push_back(render(rule));
          j["program"] = rules;
        }
        out << j.dump(2) << '\n';
      } else if (r.program) {
        out << render(*r.program);
      } else {
        out << "none found\n";
      }
      return r.program ? exit_code::yes : exit_code::no;
    }
    if (*counter) {
      const auto cm = countermodel_search(formulas(premises), parse_formula(goal),
                                          single_top ? FrameClass::single_top : FrameClass::any,
                                          bound, g.guard());
      if (g.json) {
        out << (cm ? json{{"found", true}, {"countermodel", to_json(*cm)}} : json{{"found", false}}).dump(2)
            << '\n';
      } else if (cm) {
        print_countermodel(out, *cm);
      } else {
        out << "no countermodel with at most " << bound << " worlds\n";
      }
      return cm ? exit_code::yes : exit_code::no;
    }
    if (*prove) {
      const Verdict v = decide(logic, formulas(premises), parse_formula(goal), bound, g.guard());
      if (g.json) {
        out << to_json(v).dump(2) << '\n';
      } else {
        out << kind_name(v.kind) << '\n';
        if (!v.note.empty()) out << v.note << '\n';
        if (v.derivation) print_derivation(out, *v.derivation);
        if (v.countermodel) print_countermodel(out, *v.countermodel);
      }
      return verdict_code(v);
    }
    if (*check) {
      const auto results = suite::run_paper_suite({seed, g.threads});
      if (g.json) {
        out << suite::format_json(results, timings).dump(2) << '\n';
      } else {
        out << suite::format_text(results, timings);
      }
      const bool all = std::all_of(results.begin(), results.end(),
                                   [](const suite::CheckResult& r) { return r.passed; });
      return all ? exit_code::yes : exit_code::no;
    }
  } catch (const GuardExceeded& e) {
    err << "hteq: " << e.what() << '\n';
    return exit_code::unknown;
  } catch (const std::exception& e) {
    err << "hteq: " << e.what() << '\n';
    return exit_code::error;
  }
  return exit_code::error;
}

}  // namespace hteq::cli
