#include "hteq/serialize.hpp"

#include "hteq/parser.hpp"

namespace hteq {

using nlohmann::json;

json to_json(const AtomSet& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back(a.name());
  return out;
}

json to_json(const HTModel& m) { return {{"here", to_json(m.here())}, {"there", to_json(m.there())}}; }

json to_json(const KripkeModel& m) {
  json worlds = json::array();
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    worlds.push_back({{"id", w}, {"atoms", to_json(m.label(w))}});
  }
  json order = json::array();
  for (auto [a, b] : m.covering_pairs()) order.push_back({a, b});
  return {{"worlds", worlds}, {"order", order}};
}

json to_json(const Countermodel& cm) {
  json out = to_json(cm.model);
  out["witness"] = cm.witness;
  return out;
}

json to_json(const AnswerSetReport& r) {
  json sets = json::array();
  for (const auto& s : r.answer_sets) sets.push_back(to_json(s));
  return {{"answer_sets", sets}, {"method", std::string(method_name(r.method))}};
}

json to_json(const Reduct& r) {
  json rules = json::array();
  for (const auto& rule : r.rules.rules()) rules.push_back(render(rule));
  return {{"witness", to_json(r.witness)}, {"rules", rules}};
}

json to_json(const EquivalenceReport& r) {
  json out = {
      {"cpl", r.cpl},
      {"g3", r.g3},
      {"same_answer_sets", r.same_answer_sets},
      {"strongly_equivalent", r.strongly_equivalent},
  };
  if (r.kc_on_fragment) out["kc_on_fragment"] = *r.kc_on_fragment;
  if (r.separating_world) out["separating_world"] = to_json(*r.separating_world);
  if (r.separating_ht_model) out["separating_ht_model"] = to_json(*r.separating_ht_model);
  if (r.separating_extension) {
    json rules = json::array();
    for (const auto& rule : r.separating_extension->rules()) rules.push_back(render(rule));
    out["separating_extension"] = rules;
  }
  return out;
}

json to_json(const Derivation& d) {
  json out = {{"rule", d.rule}, {"sequent", render(d.sequent)}};
  if (d.principal) out["principal"] = render(*d.principal);
  if (!d.premises.empty()) {
    json premises = json::array();
    for (const auto& p : d.premises) premises.push_back(to_json(p));
    out["premises"] = premises;
  }
  return out;
}

json to_json(const Verdict& v) {
  json out = {{"verdict", std::string(kind_name(v.kind))}};
  if (v.derivation) out["derivation"] = to_json(*v.derivation);
  if (v.countermodel) out["countermodel"] = to_json(*v.countermodel);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

AtomSet atom_set_from_json(const json& j) {
  AtomSet out;
  for (const auto& name : j) out.insert(Atom(name.get<std::string>()));
  return out;
}

HTModel ht_model_from_json(const json& j) {
  return HTModel(atom_set_from_json(j.at("here")), atom_set_from_json(j.at("there")));
}

Countermodel countermodel_from_json(const json& j) {
  std::vector<AtomSet> labels;
  for (const auto& w : j.at("worlds")) {
    const auto id = w.at("id").get<std::size_t>();
    if (id >= labels.size()) labels.resize(id + 1);
    labels[id] = atom_set_from_json(w.at("atoms"));
  }
  std::vector<std::pair<WorldId, WorldId>> order;
  for (const auto& pair : j.at("order")) {
    order.emplace_back(pair.at(0).get<WorldId>(), pair.at(1).get<WorldId>());
  }
  return Countermodel{KripkeModel(std::move(labels), order), j.at("witness").get<WorldId>()};
}

}  // namespace hteq
