#include "hteq/kripke.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hteq/evaluation.hpp"

namespace hteq {

namespace {

constexpr WorldMask bit(WorldId w) { return WorldMask{1} << w; }

WorldMask full_mask(std::size_t n) {
  return n == 0 ? 0U : static_cast<WorldMask>((std::uint64_t{1} << n) - 1);
}

/// Forcing sets over a fixed order: each value is the set of worlds forcing a
/// formula.
struct KripkeDomain {
  using value_type = WorldMask;
  const WorldMask* up;
  std::size_t worlds;
  const WorldMask* atom_worlds;

  WorldMask atom(std::size_t i) const { return atom_worlds[i]; }
  WorldMask top() const { return full_mask(worlds); }
  WorldMask bot() const { return 0; }
  WorldMask negate(WorldMask a) const {
    WorldMask out = 0;
    for (std::size_t w = 0; w < worlds; ++w) {
      if ((up[w] & a) == 0) out |= bit(w);
    }
    return out;
  }
  WorldMask conj(WorldMask a, WorldMask b) const { return a & b; }
  WorldMask disj(WorldMask a, WorldMask b) const { return a | b; }
  WorldMask implies(WorldMask a, WorldMask b) const {
    WorldMask out = 0;
    for (std::size_t w = 0; w < worlds; ++w) {
      if ((up[w] & a & ~b) == 0) out |= bit(w);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Rooted frames up to isomorphism.

struct Frame {
  std::size_t size = 0;
  std::vector<WorldMask> up;
  std::vector<WorldMask> upsets;  // ascending, starting with the empty set
  std::vector<std::vector<WorldId>> automorphisms;
  bool single_top = false;
};

std::uint64_t relation_code(const std::vector<WorldMask>& up, const std::vector<WorldId>& perm) {
  const std::size_t n = up.size();
  std::uint64_t code = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && (up[a] & bit(b))) code |= std::uint64_t{1} << ((n - 1 - perm[a]) * n + (n - 1 - perm[b]));
    }
  }
  return code;
}

// Canonical code: the maximum over all relabelings. World 0's row holds the
// most significant bits, so maximising puts the root at world 0.
std::uint64_t canonical_code(const std::vector<WorldMask>& up) {
  std::vector<WorldId> perm(up.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do {
    best = std::max(best, relation_code(up, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Relabels so that the identity achieves the canonical code.
std::vector<WorldMask> canonical_relabel(const std::vector<WorldMask>& up) {
  const std::size_t n = up.size();
  std::vector<WorldId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  std::vector<WorldId> best_perm = perm;
  do {
    auto c = relation_code(up, perm);
    if (c > best) {
      best = c;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<WorldMask> out(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (up[a] & bit(b)) out[best_perm[a]] |= bit(best_perm[b]);
    }
  }
  return out;
}

Frame finish_frame(std::vector<WorldMask> up) {
  Frame f;
  f.size = up.size();
  f.up = std::move(up);
  const WorldMask all = full_mask(f.size);
  for (WorldMask s = 0;; ++s) {
    bool closed = true;
    for (std::size_t w = 0; w < f.size && closed; ++w) {
      if ((s & bit(w)) && (f.up[w] & ~s)) closed = false;
    }
    if (closed) f.upsets.push_back(s);
    if (s == all) break;
  }
  std::vector<WorldId> perm(f.size);
  std::iota(perm.begin(), perm.end(), 0);
  const auto identity = relation_code(f.up, perm);
  do {
    if (relation_code(f.up, perm) == identity) f.automorphisms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::size_t tops = 0;
  for (std::size_t w = 0; w < f.size; ++w) {
    if (f.up[w] == bit(w)) ++tops;
  }
  f.single_top = tops == 1;
  return f;
}

std::vector<Frame> build_frames(std::size_t n, const std::vector<Frame>& smaller) {
  if (n == 1) return {finish_frame({bit(0)})};
  std::map<std::uint64_t, std::vector<WorldMask>, std::greater<>> found;
  for (const auto& base : smaller) {
    // The new world n-1 sits above a nonempty down-closed set containing the root.
    const WorldMask all = full_mask(n - 1);
    for (WorldMask below = 1; below <= all; ++below) {
      if (!(below & bit(0))) continue;
      bool down_closed = true;
      for (std::size_t w = 0; w < n - 1 && down_closed; ++w) {
        if (below & bit(w)) continue;
        if (base.up[w] & below) down_closed = false;
      }
      if (!down_closed) continue;
      std::vector<WorldMask> up(base.up.begin(), base.up.end());
      up.push_back(bit(n - 1));
      for (std::size_t w = 0; w < n - 1; ++w) {
        if (below & bit(w)) up[w] |= bit(n - 1);
      }
      auto code = canonical_code(up);
      if (!found.count(code)) found.emplace(code, canonical_relabel(up));
    }
  }
  std::vector<Frame> out;
  for (auto& [code, up] : found) out.push_back(finish_frame(std::move(up)));
  return out;
}

const std::vector<Frame>& rooted_frames(std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::vector<Frame>> cache{{}};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const std::size_t k = cache.size();
    cache.push_back(build_frames(k, cache[k - 1]));
  }
  return cache[n];
}

WorldMask apply(const std::vector<WorldId>& perm, WorldMask s) {
  WorldMask out = 0;
  for (std::size_t w = 0; w < perm.size(); ++w) {
    if (s & bit(w)) out |= bit(perm[w]);
  }
  return out;
}

bool is_orbit_minimum(const Frame& frame, const std::vector<WorldMask>& labels) {
  for (const auto& perm : frame.automorphisms) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const WorldMask image = apply(perm, labels[i]);
      if (image < labels[i]) return false;
      if (image > labels[i]) break;
    }
  }
  return true;
}

KripkeModel to_model(const Frame& frame, const std::vector<WorldMask>& atom_worlds,
                     const std::vector<Atom>& atoms) {
  std::vector<AtomSet> labels(frame.size);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t w = 0; w < frame.size; ++w) {
      if (atom_worlds[i] & bit(w)) labels[w].insert(atoms[i]);
    }
  }
  std::vector<std::pair<WorldId, WorldId>> order;
  for (std::size_t a = 0; a < frame.size; ++a) {
    for (std::size_t b = 0; b < frame.size; ++b) {
      if (a != b && (frame.up[a] & bit(b))) order.emplace_back(a, b);
    }
  }
  return KripkeModel(std::move(labels), order);
}

/// Visits each labeling (one upset per atom), first atom varying slowest.
/// Returns false if the visitor stopped the enumeration.
template <class Visit>
bool for_each_labeling(const Frame& frame, std::size_t atom_count, bool dedupe, Visit&& visit) {
  std::vector<std::size_t> digit(atom_count, 0);
  std::vector<WorldMask> labels(atom_count, 0);
  const std::size_t radix = frame.upsets.size();
  while (true) {
    for (std::size_t i = 0; i < atom_count; ++i) labels[i] = frame.upsets[digit[i]];
    if (!dedupe || is_orbit_minimum(frame, labels)) {
      if (!visit(labels)) return false;
    }
    std::size_t i = atom_count;
    while (i > 0) {
      --i;
      if (++digit[i] < radix) break;
      digit[i] = 0;
      if (i == 0) return true;
    }
    if (atom_count == 0) return true;
  }
}

void check_enumeration_guard(std::size_t max_worlds, std::size_t atom_count, const Guard& guard) {
  guard.check("Kripke model size", max_worlds, limits::kripke_worlds);
  guard.check("Kripke atom count", atom_count, limits::kripke_atoms);
  if (max_worlds > limits::max_worlds) {
    throw std::invalid_argument("model enumeration supports at most " +
                                std::to_string(limits::max_worlds) + " worlds");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// KripkeModel

KripkeModel::KripkeModel(std::vector<AtomSet> labels,
                         const std::vector<std::pair<WorldId, WorldId>>& order)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n > max_size) throw std::invalid_argument("Kripke model has too many worlds");
  up_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) up_[w] = bit(w);
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw std::out_of_range("order pair names an unknown world");
    up_[a] |= bit(b);
  }
  // Transitive closure (Warshall on rows).
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (up_[a] & bit(k)) up_[a] |= up_[k];
    }
  }
}

const AtomSet& KripkeModel::label(WorldId w) const {
  if (w >= labels_.size()) throw std::out_of_range("unknown world " + std::to_string(w));
  return labels_[w];
}

bool KripkeModel::leq(WorldId a, WorldId b) const { return (up(a) & bit(b)) != 0; }

WorldMask KripkeModel::up(WorldId w) const {
  if (w >= up_.size()) throw std::out_of_range("unknown world " + std::to_string(w));
  return up_[w];
}

WorldMask KripkeModel::all_worlds() const noexcept { return full_mask(labels_.size()); }

std::vector<WorldId> KripkeModel::terminal_nodes() const {
  std::vector<WorldId> out;
  for (std::size_t w = 0; w < up_.size(); ++w) {
    bool maximal = true;
    for (std::size_t v = 0; v < up_.size(); ++v) {
      if (v != w && (up_[w] & bit(v)) && !(up_[v] & bit(w))) maximal = false;
    }
    if (maximal) out.push_back(w);
  }
  return out;
}

std::optional<WorldId> KripkeModel::root() const {
  for (std::size_t w = 0; w < up_.size(); ++w) {
    if (up_[w] == all_worlds()) return w;
  }
  return std::nullopt;
}

std::vector<std::pair<WorldId, WorldId>> KripkeModel::covering_pairs() const {
  std::vector<std::pair<WorldId, WorldId>> out;
  const std::size_t n = up_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !(up_[a] & bit(b))) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c != a && c != b && (up_[a] & bit(c)) && (up_[c] & bit(b))) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

AtomSet KripkeModel::atoms() const {
  AtomSet out;
  for (const auto& l : labels_) out.insert(l.begin(), l.end());
  return out;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::reflexivity: out << "order is not reflexive at world " << first; break;
    case Kind::antisymmetry:
      out << "worlds " << first << " and " << second << " are mutually related";
      break;
    case Kind::transitivity:
      out << "order is not transitive through " << first << " <= " << second;
      break;
    case Kind::monotonicity:
      out << "label of world " << first << " is not contained in the label of world " << second;
      break;
  }
  return out.str();
}

ValidationReport validate(const KripkeModel& m) {
  const std::size_t n = m.world_count();
  for (std::size_t a = 0; a < n; ++a) {
    if (!m.leq(a, a)) return {Violation{Violation::Kind::reflexivity, a, a}};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!m.leq(a, b)) continue;
      if (a != b && m.leq(b, a)) return {Violation{Violation::Kind::antisymmetry, a, b}};
      if ((m.up(b) & ~m.up(a)) != 0) return {Violation{Violation::Kind::transitivity, a, b}};
      const auto& la = m.label(a);
      const auto& lb = m.label(b);
      if (!std::includes(lb.begin(), lb.end(), la.begin(), la.end())) {
        return {Violation{Violation::Kind::monotonicity, a, b}};
      }
    }
  }
  return {};
}

WorldMask forcing_set(const KripkeModel& m, const Formula& f) {
  const Universe u(f.atoms());
  std::vector<WorldMask> atom_worlds(u.size(), 0);
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    const AtomMask present = u.mask_of(m.label(w));
    for (std::size_t i = 0; i < u.size(); ++i) {
      if ((present >> i) & 1U) atom_worlds[i] |= bit(w);
    }
  }
  std::vector<WorldMask> up(m.world_count());
  for (std::size_t w = 0; w < up.size(); ++w) up[w] = m.up(w);
  const KripkeDomain d{up.data(), up.size(), atom_worlds.data()};
  return CompiledFormula(f, u).evaluate(d);
}

bool forces(const KripkeModel& m, WorldId w, const Formula& f) {
  if (w >= m.world_count()) throw std::out_of_range("unknown world " + std::to_string(w));
  return (forcing_set(m, f) & bit(w)) != 0;
}

KripkeModel diamond_model() {
  using namespace diamond;
  std::vector<AtomSet> labels(4);
  labels[u] = make_atoms({"p"});
  labels[v] = make_atoms({"q"});
  labels[t] = make_atoms({"p", "q"});
  return KripkeModel(std::move(labels), {{w, u}, {w, v}, {u, t}, {v, t}});
}

// ---------------------------------------------------------------------------
// Enumeration and search

std::size_t rooted_frame_count(std::size_t worlds, FrameClass frames) {
  if (worlds == 0 || worlds > limits::max_worlds) {
    throw std::invalid_argument("rooted_frame_count: world count out of range");
  }
  const auto& all = rooted_frames(worlds);
  if (frames == FrameClass::any) return all.size();
  return static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [](const Frame& f) { return f.single_top; }));
}

void enumerate_models(std::size_t max_worlds, const AtomSet& atoms, FrameClass frames,
                      const std::function<bool(const KripkeModel&)>& visit, const Guard& guard) {
  if (max_worlds == 0) throw std::invalid_argument("enumerate_models: max_worlds must be >= 1");
  check_enumeration_guard(max_worlds, atoms.size(), guard);
  const std::vector<Atom> atom_list(atoms.begin(), atoms.end());
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& frame : rooted_frames(n)) {
      if (frames == FrameClass::single_top && !frame.single_top) continue;
      const bool go_on = for_each_labeling(frame, atom_list.size(), true, [&](const auto& labels) {
        return visit(to_model(frame, labels, atom_list));
      });
      if (!go_on) return;
    }
  }
}

std::vector<KripkeModel> all_models(std::size_t max_worlds, const AtomSet& atoms,
                                    FrameClass frames, const Guard& guard) {
  std::vector<KripkeModel> out;
  enumerate_models(
      max_worlds, atoms, frames,
      [&](const KripkeModel& m) {
        out.push_back(m);
        return true;
      },
      guard);
  return out;
}

std::optional<Countermodel> countermodel_search(const std::vector<Formula>& premises,
                                                const Formula& goal, FrameClass frames,
                                                std::size_t max_worlds, const Guard& guard) {
  AtomSet atoms = goal.atoms();
  for (const auto& p : premises) p.collect_atoms(atoms);
  check_enumeration_guard(max_worlds, atoms.size(), guard);
  const Universe u(atoms);
  std::vector<CompiledFormula> prem;
  for (const auto& p : premises) prem.emplace_back(p, u);
  const CompiledFormula g(goal, u);

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& frame : rooted_frames(n)) {
      if (frames == FrameClass::single_top && !frame.single_top) continue;
      std::optional<Countermodel> found;
      for_each_labeling(frame, u.size(), true, [&](const std::vector<WorldMask>& labels) {
        const KripkeDomain d{frame.up.data(), frame.size, labels.data()};
        // Forcing is local to the upward cone, so checking the root suffices.
        if (!(g.evaluate(d) & bit(0)) &&
            std::all_of(prem.begin(), prem.end(),
                        [&](const CompiledFormula& p) { return (p.evaluate(d) & bit(0)) != 0; })) {
          found = Countermodel{to_model(frame, labels, u.atoms()), 0};
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

bool is_countermodel(const Countermodel& cm, const std::vector<Formula>& premises,
                     const Formula& goal) {
  if (!validate(cm.model).ok() || cm.witness >= cm.model.world_count()) return false;
  for (const auto& p : premises) {
    if (!forces(cm.model, cm.witness, p)) return false;
  }
  return !forces(cm.model, cm.witness, goal);
}

}  // namespace hteq
