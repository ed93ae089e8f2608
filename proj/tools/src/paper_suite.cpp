#include "hteq_tools/paper_suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <hteq/classical.hpp>
#include <hteq/equivalence.hpp>
#include <hteq/evaluation.hpp>
#include <hteq/generate.hpp>
#include <hteq/ht.hpp>
#include <hteq/kripke.hpp>
#include <hteq/parser.hpp>
#include <hteq/prover.hpp>
#include <hteq/stable.hpp>

namespace hteq::suite {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

std::pair<bool, std::string> from(const Outcome& o) {
  std::string detail = std::to_string(o.checked) + " checked";
  if (!o.info.empty()) detail += ", " + o.info;
  if (o.violations) {
    detail += ", " + std::to_string(o.violations) + " violations, first: " + o.first_violation;
  }
  return {o.passed(), detail};
}

Program prog(const char* text) { return parse_program(text); }
Formula fml(const char* text) { return parse_formula(text); }

std::vector<AtomSet> sets(std::initializer_list<std::initializer_list<std::string_view>> xs) {
  std::vector<AtomSet> out;
  for (auto x : xs) out.push_back(make_atoms(x));
  return out;
}

bool both_methods(const Program& p, const std::vector<AtomSet>& expected) {
  return answer_sets(p, AnswerSetMethod::reduct).answer_sets == expected &&
         answer_sets(p, AnswerSetMethod::equilibrium).answer_sets == expected;
}

std::string listing(const std::vector<AtomSet>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + render(x);
  return out.empty() ? "none" : out;
}

}  // namespace

std::vector<CheckResult> run_paper_suite(const SuiteOptions& options) {
  std::vector<CheckResult> results;
  auto add = [&](std::string name, std::string claim, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{std::move(name), std::move(claim), false, {}, 0};
    try {
      std::tie(r.passed, r.detail) = check();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  };
  const std::uint64_t seed = options.seed;

  // Syntax.
  add("parse/negated-bodies", "'not p -> q. not not p -> q.' has two rules with negated bodies", [] {
    const Program expected{Rule(fml("not p"), fml("q")), Rule(fml("not not p"), fml("q"))};
    return std::make_pair(prog("not p -> q. not not p -> q.") == expected, std::string());
  });
  add("parse/normal-rule", "p & r -> s parses as a normal rule", [] {
    const Program p = prog("p & r -> s.");
    const bool ok = p == Program{Rule(fml("p & r"), fml("s"))} &&
                    fragment_check(p, FragmentDescriptor::normal());
    return std::make_pair(ok, std::string());
  });
  add("fragment/disjunctive-head", "p | q is not a rule over [and, not]", [] {
    const bool in = fragment_check(prog("p | q."), FragmentDescriptor::parse("rules:and,not"));
    return std::make_pair(!in, std::string());
  });

  // Answer sets.
  add("answer-sets/not-not-p", "{not not p} has no answer set; {not not p, p} has {p}", [] {
    const bool ok = both_methods(prog("not not p."), {}) &&
                    both_methods(prog("not not p. p."), sets({{"p"}})) &&
                    is_answer_set(prog("not not p. p."), make_atoms({"p"}));
    return std::make_pair(ok, std::string());
  });
  add("answer-sets/disjunction", "p | q has the answer sets {p} and {q}", [] {
    const auto got = answer_sets(prog("p | q.")).answer_sets;
    return std::make_pair(both_methods(prog("p | q."), sets({{"p"}, {"q"}})), listing(got));
  });
  add("answer-sets/implications", "p -> q and q -> p both have only the empty answer set", [] {
    const bool ok = both_methods(prog("p -> q."), sets({{}})) &&
                    both_methods(prog("q -> p."), sets({{}}));
    return std::make_pair(ok, std::string());
  });
  add("reduct/negation-free", "the reduct leaves negation-free programs unchanged", [] {
    const Program p = prog("p | q. p & r -> s. top -> r. s -> bot | p.");
    bool ok = true;
    for_each_submask((1U << 4) - 1, [&](std::uint32_t mask) {
      AtomSet x;
      const char* names[] = {"p", "q", "r", "s"};
      for (int i = 0; i < 4; ++i) {
        if ((mask >> i) & 1U) x.insert(Atom(names[i]));
      }
      ok = ok && reduct(p, x).rules == p;
    });
    return std::make_pair(ok, std::string());
  });
  add("answer-sets/definitions-coincide",
      "on negation-free programs the reduct definition is the direct one and matches equilibria",
      [seed] {
        Generator gen(seed + 1);
        const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction,
                                    Connective::top, Connective::bot};
        Outcome o;
        for (int i = 0; i < 300; ++i) {
          const AtomSet atoms = Generator::atoms(1 + gen.below(4));
          const Program p = gen.rule_program(atoms, allowed, 4, 3);
          ++o.checked;
          // Direct definition: X is an answer set iff X is the only subset of X modelling p.
          std::vector<AtomSet> direct;
          const auto models = classical_models(p, atoms);
          for (const auto& x : models) {
            bool minimal = true;
            for (const auto& y : models) {
              if (y != x && std::includes(x.begin(), x.end(), y.begin(), y.end())) minimal = false;
            }
            if (minimal) direct.push_back(x);
          }
          if (answer_sets_reduct(p, atoms).answer_sets != direct ||
              answer_sets_ht(p, atoms).answer_sets != direct) {
            o.fail(render(p));
          }
        }
        return from(o);
      });
  add("answer-sets/method-agreement",
      "reduct answer sets equal equilibrium models on 1000 random programs",
      [seed] { return from(method_agreement(seed + 2, 1000)); });
  add("lemma/reduct-ht", "<Y, X> forces A iff it forces A^X (exhaustive, depth <= 4)",
      [] { return from(reduct_preserves_ht_forcing()); });

  // Kripke semantics.
  add("kripke/one-world", "one-world models evaluate classically",
      [] { return from(one_world_matches_classical()); });
  add("kripke/persistence", "forcing is persistent on models of <= 3 worlds",
      [] { return from(persistence()); });
  add("lemma/positive-forcing",
      "[and, or, bot, top] formulas are forced exactly where classically true",
      [] { return from(forcing_matches_classical_on_positive_fragment()); });
  add("diamond/disjunction", "in the diamond, u and v force p | q but w does not", [] {
    const KripkeModel m = diamond_model();
    const Formula f = fml("p | q");
    const bool ok = validate(m).ok() && !forces(m, diamond::w, f) && forces(m, diamond::u, f) &&
                    forces(m, diamond::v, f) &&
                    m.terminal_nodes() == std::vector<WorldId>{diamond::t};
    return std::make_pair(ok, std::string());
  });
  add("diamond/depth-3", "in the diamond, w forces A iff u and v do, for A in [and, ->, not]",
      [] { return from(diamond_property()); });
  add("kc/single-top-wem", "single-top models force not A | not not A",
      [] { return from(single_top_forces_weak_excluded_middle()); });
  add("kc/wem-no-countermodel",
      "no single-top model with <= 5 worlds refutes not p | not not p", [] {
        const bool none = !countermodel_search({}, fml("not p | not not p"),
                                               FrameClass::single_top, 5)
                               .has_value();
        return std::make_pair(none, std::string());
      });

  // G3.
  add("g3/axiom-3-value", "p | (p -> q) | not q is one at p = 1/2, q = 0", [] {
    const G3Valuation v{{Atom("p"), G3Value::half}, {Atom("q"), G3Value::zero}};
    return std::make_pair(matrix_eval(v, fml("p | (p -> q) | not q")) == G3Value::one,
                          std::string());
  });
  add("g3/axioms", "the four G3 axiom schemes are matrix-valid and not intuitionistic",
      [] { return from(g3_axioms()); });
  add("g3/matrix-kripke", "three-valued tables agree with here-and-there forcing",
      [] { return from(matrix_matches_ht()); });
  add("lemma/ht-implication",
      "for positive A, B: <Y, X> forces A -> B iff <X> and <Y> satisfy it",
      [] { return from(ht_implication_splits()); });
  add("g3/wem", "not p | not not p is G3-valid", [] {
    return std::make_pair(g3_entails({}, fml("not p | not not p")), std::string());
  });
  add("g3/disjunction-definable", "p | q is G3-equivalent to ((p -> q) -> q) & ((q -> p) -> p)",
      [] {
        const bool ok = g3_equivalent(prog("p | q."), prog("((p -> q) -> q) & ((q -> p) -> p)."));
        return std::make_pair(ok, std::string());
      });
  add("g3/normal-lemma", "a & c -> d, not a -> b, not c -> b entail not d -> b in G3", [] {
    const bool ok =
        g3_entails({fml("a & c -> d"), fml("not a -> b"), fml("not c -> b")}, fml("not d -> b"));
    return std::make_pair(ok, std::string());
  });

  // Strong equivalence.
  add("strong-equiv/wem-top", "{not p | not not p} is strongly equivalent to {top}", [] {
    return std::make_pair(strongly_equivalent(prog("not p | not not p."), prog("top.")).equivalent,
                          std::string());
  });
  add("strong-equiv/normal-programs",
      "{p & r -> s, not p -> q, not r -> q} is strongly equivalent to it plus not s -> q", [] {
        const Program p1 = prog("p & r -> s. not p -> q. not r -> q.");
        const Program p2 = prog("p & r -> s. not p -> q. not r -> q. not s -> q.");
        return std::make_pair(strongly_equivalent(p1, p2).equivalent, std::string());
      });
  add("strong-equiv/q", "{q} and {not p -> q, not not p -> q} are strongly equivalent", [] {
    const Program p1 = prog("q.");
    const Program p2 = prog("not p -> q. not not p -> q.");
    const auto r = classify(p1, p2);
    const bool ok = r.cpl && r.g3 && r.kc_on_fragment == true && r.same_answer_sets &&
                    r.strongly_equivalent && strong_equiv_oracle(p1, p2, p2.atoms()).equivalent;
    return std::make_pair(ok, std::string());
  });
  add("separation/not-not-p",
      "{not not p} and {p} are classically but not strongly equivalent", [] {
        const Program p1 = prog("not not p.");
        const Program p2 = prog("p.");
        const auto r = classify(p1, p2);
        const bool ok = r.cpl && !r.g3 && !r.strongly_equivalent && r.separating_ht_model &&
                        ht_satisfies(*r.separating_ht_model, p1) !=
                            ht_satisfies(*r.separating_ht_model, p2);
        std::string detail;
        if (r.separating_ht_model) {
          detail = "witness <" + render(r.separating_ht_model->here()) + ", " +
                   render(r.separating_ht_model->there()) + ">";
        }
        return std::make_pair(ok, detail);
      });
  add("separation/implications",
      "p -> q and q -> p have equal answer sets but {p} separates them", [] {
        const auto r = classify(prog("p -> q."), prog("q -> p."));
        const bool ok = !r.cpl && !r.g3 && r.same_answer_sets && !r.strongly_equivalent &&
                        r.separating_extension == prog("p.");
        std::string detail;
        if (r.separating_extension) detail = "extension " + render(*r.separating_extension);
        return std::make_pair(ok, detail);
      });
  add("expressibility/and-not", "no [and, not] rule program is strongly equivalent to {p | q}",
      [] {
        const auto r = expressibility_search(prog("p | q."), FragmentDescriptor::parse("rules:and,not"), 2);
        return std::make_pair(!r.program.has_value(),
                              std::to_string(r.distinct_rules) + " rule classes searched");
      });
  add("expressibility/and-imp", "an [and, ->] formula expresses p | q in G3", [] {
    const Program target = prog("p | q.");
    const auto r = expressibility_search(target, FragmentDescriptor::parse("and,imp"), 3);
    const bool ok = r.program && g3_equivalent(*r.program, target) &&
                    fragment_check(*r.program, FragmentDescriptor::parse("and,imp"));
    return std::make_pair(ok, r.program ? render(*r.program) : std::string("none found"));
  });
  add("strong-equiv/oracle-agreement",
      "G3 strong equivalence matches the unary extension oracle on 500 random pairs",
      [seed, &options] { return from(oracle_agreement(seed + 3, 500, options.threads)); });
  add("lemma/cpl-ipl-negation-free", "CPL and IPL entailment coincide on negation-free rules",
      [seed] { return from(cpl_matches_ipl_on_negation_free(seed + 4, 300)); });
  add("kc/g3-fragment", "KC and G3 agree on the program fragment (500 random queries)",
      [seed] { return from(kc_matches_g3_on_fragment(seed + 5, 500)); });

  // Provers.
  add("kc/normal-lemma", "a & c -> d, not a -> b, not c -> b derive not d -> b in KC", [] {
    const auto v = kc_decide({fml("a & c -> d"), fml("not a -> b"), fml("not c -> b")},
                             fml("not d -> b"));
    return std::make_pair(v.provable(), std::string(kind_name(v.kind)));
  });
  add("kc/alternative-axiom", "((not p -> q) & (not not p -> q)) -> q is a KC theorem", [] {
    const auto v = kc_decide({}, fml("(not p -> q) & (not not p -> q) -> q"));
    const bool ok = v.provable() && v.derivation && replay(*v.derivation);
    return std::make_pair(ok, std::string(kind_name(v.kind)));
  });
  add("kc/normal-axiom", "the normal-program axiom instance yields not p | not not p",
      [] { return std::make_pair(check_normkc_instance(), std::string()); });
  add("kc/peirce", "Peirce's law fails on a two-world single-top chain", [] {
    const Formula goal = fml("((p -> q) -> p) -> p");
    const auto v = kc_decide({}, goal, 2);
    const bool ok = v.refuted() && v.countermodel && v.countermodel->model.world_count() <= 2 &&
                    v.countermodel->model.single_top() && is_countermodel(*v.countermodel, {}, goal);
    return std::make_pair(ok, std::string(kind_name(v.kind)));
  });
  add("ipl/wem", "not p | not not p is not intuitionistic but is G3-valid", [] {
    const Formula goal = fml("not p | not not p");
    const auto v = ipl_decide({}, goal);
    const bool ok = v.refuted() && v.countermodel && v.countermodel->model.world_count() <= 3 &&
                    is_countermodel(*v.countermodel, {}, goal) && g3_valid(goal);
    return std::make_pair(ok, std::string(kind_name(v.kind)));
  });

  // Horn programs.
  add("horn/least-model", "the intersection of the models of a satisfiable Horn program is a model",
      [seed] { return from(horn_intersection_is_model(seed + 6, 500)); });
  return results;
}

std::string format_text(const std::vector<CheckResult>& results, bool timings) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.claim;
    if (!r.detail.empty()) out << " [" << r.detail << "]";
    if (timings) out << " (" << r.seconds << " s)";
    out << '\n';
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

nlohmann::json format_json(const std::vector<CheckResult>& results, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    nlohmann::json j = {{"name", r.name}, {"claim", r.claim}, {"passed", r.passed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (timings) j["seconds"] = r.seconds;
    checks.push_back(j);
  }
  return {{"checks", checks}, {"passed", passed}, {"total", results.size()}};
}

}  // namespace hteq::suite
