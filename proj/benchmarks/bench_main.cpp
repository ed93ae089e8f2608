#include <benchmark/benchmark.h>

#include <hteq/equivalence.hpp>
#include <hteq/generate.hpp>
#include <hteq/ht.hpp>
#include <hteq/kripke.hpp>
#include <hteq/parser.hpp>
#include <hteq/prover.hpp>
#include <hteq/stable.hpp>

using namespace hteq;

namespace {

const ConnectiveSet rule_connectives{Connective::conjunction, Connective::disjunction,
                                     Connective::negation};

std::vector<Program> programs(std::size_t atoms, std::size_t count) {
  Generator gen(1729);
  std::vector<Program> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(gen.rule_program(Generator::atoms(atoms), rule_connectives, 4, 3));
  }
  return out;
}

void BM_AnswerSetsReduct(benchmark::State& state) {
  const auto ps = programs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Program& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(answer_sets_reduct(p, p.universe()));
  }
}
BENCHMARK(BM_AnswerSetsReduct)->DenseRange(2, 8, 2);

void BM_AnswerSetsEquilibrium(benchmark::State& state) {
  const auto ps = programs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Program& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(answer_sets_ht(p, p.universe()));
  }
}
BENCHMARK(BM_AnswerSetsEquilibrium)->DenseRange(2, 8, 2);

void BM_StrongEquivalenceG3(benchmark::State& state) {
  const auto ps = programs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(strongly_equivalent(ps[i % ps.size()], ps[(i + 1) % ps.size()]));
    ++i;
  }
}
BENCHMARK(BM_StrongEquivalenceG3)->DenseRange(2, 8, 2);

void BM_ExtensionOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ps = programs(n, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    // Same program twice: the oracle has to try every extension.
    const Program& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(strong_equiv_oracle(p, p, Generator::atoms(n)));
  }
}
BENCHMARK(BM_ExtensionOracle)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_KripkeEnumeration(benchmark::State& state) {
  const auto worlds = static_cast<std::size_t>(state.range(0));
  const AtomSet atoms = Generator::atoms(2);
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_models(worlds, atoms, FrameClass::any, [&](const KripkeModel&) { return ++count, true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_KripkeEnumeration)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_IplDecide(benchmark::State& state) {
  const std::vector<Formula> goals = {
      parse_formula("(p -> q) -> (q -> r) -> p -> r"), parse_formula("not not (p | not p)"),
      parse_formula("((p -> q) -> p) -> p"), parse_formula("not p | not not p"),
      parse_formula("(p | q) & r -> p & r | q & r")};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ipl_decide({}, goals[i++ % goals.size()]));
}
BENCHMARK(BM_IplDecide);

void BM_KcDecideOutsideFragment(benchmark::State& state) {
  const Formula goal = parse_formula("((not p -> q) & (not not p -> q)) -> q");
  for (auto _ : state) benchmark::DoNotOptimize(kc_decide({}, goal));
}
BENCHMARK(BM_KcDecideOutsideFragment);

void BM_Expressibility(benchmark::State& state) {
  const Program target = parse_program("p | q.");
  const auto frag = FragmentDescriptor::parse("rules:and,not");
  for (auto _ : state) benchmark::DoNotOptimize(expressibility_search(target, frag, 2));
}
BENCHMARK(BM_Expressibility)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
