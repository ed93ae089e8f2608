#include "hteq/ht.hpp"

#include <algorithm>
#include <stdexcept>

#include "hteq/evaluation.hpp"

namespace hteq {

namespace {

struct G3Domain {
  using value_type = G3Value;
  const G3Value* atoms;

  static G3Value from(unsigned x) { return static_cast<G3Value>(x); }
  static unsigned raw(G3Value x) { return static_cast<unsigned>(x); }

  G3Value atom(std::size_t i) const { return atoms[i]; }
  G3Value top() const { return G3Value::one; }
  G3Value bot() const { return G3Value::zero; }
  G3Value negate(G3Value a) const { return a == G3Value::zero ? G3Value::one : G3Value::zero; }
  G3Value conj(G3Value a, G3Value b) const { return from(std::min(raw(a), raw(b))); }
  G3Value disj(G3Value a, G3Value b) const { return from(std::max(raw(a), raw(b))); }
  G3Value implies(G3Value a, G3Value b) const { return raw(a) <= raw(b) ? G3Value::one : b; }
};

bool set_less(const AtomSet& a, const AtomSet& b) { return canonical_less(a, b); }

AtomSet joint_atoms(const std::vector<Formula>& fs) {
  AtomSet out;
  for (const auto& f : fs) f.collect_atoms(out);
  return out;
}

/// Visits (here, there) mask pairs in HTModel order until `visit` returns false.
template <class Visit>
void for_each_ht_pair(std::size_t n, Visit&& visit) {
  const auto order = canonical_masks(n);
  for (AtomMask x : order) {
    for (AtomMask y : order) {
      if ((y & ~x) != 0) continue;
      if (!visit(y, x)) return;
    }
  }
}

}  // namespace

HTModel::HTModel(AtomSet here, AtomSet there) : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(), here_.end())) {
    throw std::invalid_argument("HT model requires here to be a subset of there");
  }
}

KripkeModel HTModel::as_kripke() const { return KripkeModel({here_, there_}, {{0, 1}}); }

std::strong_ordering operator<=>(const HTModel& a, const HTModel& b) {
  if (a.there_ != b.there_) {
    return set_less(a.there_, b.there_) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.here_ != b.here_) {
    return set_less(a.here_, b.here_) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool ht_forces(const HTModel& m, HtWorld at, const Formula& f) {
  const Universe u(f.atoms());
  const HtValue v = CompiledFormula(f, u).evaluate(HtDomain{u.mask_of(m.here()), u.mask_of(m.there())});
  return at == HtWorld::here ? v.here : v.there;
}

bool ht_satisfies(const HTModel& m, const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [&](const Rule& r) { return ht_forces(m, HtWorld::here, r.as_formula()); });
}

G3Value matrix_eval(const G3Valuation& v, const Formula& f) {
  const Universe u(f.atoms());
  std::vector<G3Value> values(u.size(), G3Value::zero);
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto it = v.find(u.atoms()[i]);
    if (it != v.end()) values[i] = it->second;
  }
  return CompiledFormula(f, u).evaluate(G3Domain{values.data()});
}

G3Valuation valuation_of(const HTModel& m) {
  G3Valuation v;
  for (const auto& a : m.there()) v[a] = G3Value::half;
  for (const auto& a : m.here()) v[a] = G3Value::one;
  return v;
}

HTModel model_of(const G3Valuation& v) {
  AtomSet here;
  AtomSet there;
  for (const auto& [a, value] : v) {
    if (value != G3Value::zero) there.insert(a);
    if (value == G3Value::one) here.insert(a);
  }
  return HTModel(std::move(here), std::move(there));
}

std::vector<HTModel> ht_models_of(const Program& p, const AtomSet& universe, const Guard& guard) {
  const AtomSet atoms = p.atoms();
  if (!std::includes(universe.begin(), universe.end(), atoms.begin(), atoms.end())) {
    throw std::invalid_argument("universe does not contain every atom of the program");
  }
  guard.check("HT universe size", universe.size(), limits::ht_atoms);
  const Universe u(universe);
  const auto rules = compile_program(p, u);
  std::vector<HTModel> out;
  for_each_ht_pair(u.size(), [&](AtomMask y, AtomMask x) {
    if (all_forced_here(rules, HtDomain{y, x})) out.emplace_back(u.set_of(y), u.set_of(x));
    return true;
  });
  return out;
}

std::optional<HTModel> g3_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                                       const Guard& guard) {
  AtomSet joint = joint_atoms(premises);
  goal.collect_atoms(joint);
  guard.check("HT universe size", joint.size(), limits::ht_atoms);
  const Universe u(joint);
  std::vector<CompiledFormula> prem;
  for (const auto& f : premises) prem.emplace_back(f, u);
  const CompiledFormula g(goal, u);
  std::optional<HTModel> found;
  for_each_ht_pair(u.size(), [&](AtomMask y, AtomMask x) {
    const HtDomain d{y, x};
    if (all_forced_here(prem, d) && !g.evaluate(d).here) {
      found.emplace(u.set_of(y), u.set_of(x));
      return false;
    }
    return true;
  });
  return found;
}

bool g3_entails(const std::vector<Formula>& premises, const Formula& goal, const Guard& guard) {
  return !g3_countermodel(premises, goal, guard).has_value();
}

bool g3_valid(const Formula& f, const Guard& guard) { return g3_entails({}, f, guard); }

std::optional<HTModel> g3_separating_model(const Program& p1, const Program& p2,
                                           const Guard& guard) {
  AtomSet joint = p1.atoms();
  const AtomSet a2 = p2.atoms();
  joint.insert(a2.begin(), a2.end());
  guard.check("HT universe size", joint.size(), limits::ht_atoms);
  const Universe u(joint);
  const auto r1 = compile_program(p1, u);
  const auto r2 = compile_program(p2, u);
  // Total models first: a classical difference is reported as one.
  for (const AtomMask x : canonical_masks(u.size())) {
    const HtDomain d{x, x};
    if (all_forced_here(r1, d) != all_forced_here(r2, d)) return HTModel(u.set_of(x), u.set_of(x));
  }
  std::optional<HTModel> found;
  for_each_ht_pair(u.size(), [&](AtomMask y, AtomMask x) {
    const HtDomain d{y, x};
    if (all_forced_here(r1, d) != all_forced_here(r2, d)) {
      found.emplace(u.set_of(y), u.set_of(x));
      return false;
    }
    return true;
  });
  return found;
}

bool g3_equivalent(const Program& p1, const Program& p2, const Guard& guard) {
  return !g3_separating_model(p1, p2, guard).has_value();
}

}  // namespace hteq
