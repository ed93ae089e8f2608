#pragma once

#include <nlohmann/json.hpp>

#include "hteq/equivalence.hpp"
#include "hteq/ht.hpp"
#include "hteq/kripke.hpp"
#include "hteq/prover.hpp"
#include "hteq/stable.hpp"

namespace hteq {

// JSON views of result types. Atom sets are sorted arrays of names; formulas
// and programs are rendered in the text syntax.

nlohmann::json to_json(const AtomSet& atoms);
nlohmann::json to_json(const HTModel& m);
/// {"worlds": [{"id", "atoms"}], "order": covering pairs, "witness": id}
nlohmann::json to_json(const Countermodel& cm);
nlohmann::json to_json(const KripkeModel& m);
nlohmann::json to_json(const AnswerSetReport& r);
nlohmann::json to_json(const Reduct& r);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const Derivation& d);
nlohmann::json to_json(const Verdict& v);

AtomSet atom_set_from_json(const nlohmann::json& j);
HTModel ht_model_from_json(const nlohmann::json& j);
Countermodel countermodel_from_json(const nlohmann::json& j);

}  // namespace hteq
