#pragma once

#include <string_view>
#include <vector>

#include "hteq/classical.hpp"
#include "hteq/error.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

/// A^X: atoms, constants and binary connectives are kept; each `not A`
/// becomes bot if <X> satisfies A and top otherwise. Implications into bot
/// are left alone.
Formula reduct(const Formula& f, const ClassicalWorld& x);
Rule reduct(const Rule& r, const ClassicalWorld& x);

struct Reduct {
  Program source;
  ClassicalWorld witness;
  Program rules;  ///< over the universe of `source`
};

Reduct reduct(const Program& p, const ClassicalWorld& x);

enum class AnswerSetMethod { reduct, equilibrium };

std::string_view method_name(AnswerSetMethod m) noexcept;

struct AnswerSetReport {
  Program program;
  AtomSet universe;
  std::vector<AtomSet> answer_sets;  ///< canonical order: by size, then lexicographic
  AnswerSetMethod method;
};

/// X is an answer set iff among the subsets Y of X exactly X classically
/// satisfies the reduct of `p` by X. `universe` must contain atoms(p).
AnswerSetReport answer_sets_reduct(const Program& p, const AtomSet& universe,
                                   const Guard& guard = {});

/// X is an answer set iff <X, X> forces `p` and no <Y, X> with Y a proper
/// subset of X does.
AnswerSetReport answer_sets_ht(const Program& p, const AtomSet& universe,
                               const Guard& guard = {});

/// Answer sets over the program's own universe.
AnswerSetReport answer_sets(const Program& p, AnswerSetMethod method = AnswerSetMethod::reduct,
                            const Guard& guard = {});

/// The reduct test for a single candidate; only subsets of `x` are visited.
bool is_answer_set(const Program& p, const ClassicalWorld& x);

}  // namespace hteq
