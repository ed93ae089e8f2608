#include <gtest/gtest.h>

#include <hteq/equivalence.hpp>
#include <hteq/parser.hpp>
#include <hteq/prover.hpp>
#include <hteq/serialize.hpp>
#include <hteq/stable.hpp>

using namespace hteq;
using nlohmann::json;

TEST(Serialize, AtomSetsRoundTrip) {
  const AtomSet s = make_atoms({"q", "p"});
  EXPECT_EQ(to_json(s), json::parse(R"(["p","q"])"));
  EXPECT_EQ(atom_set_from_json(to_json(s)), s);
  EXPECT_THROW(atom_set_from_json(json::parse(R"(["P"])")), std::exception);
}

TEST(Serialize, HtModelRoundTrip) {
  const HTModel m(make_atoms({"p"}), make_atoms({"p", "q"}));
  EXPECT_EQ(to_json(m), json::parse(R"({"here":["p"],"there":["p","q"]})"));
  EXPECT_EQ(ht_model_from_json(to_json(m)), m);
  EXPECT_THROW(ht_model_from_json(json::parse(R"({"here":["q"],"there":["p"]})")), std::exception);
}

TEST(Serialize, CountermodelRoundTrip) {
  const auto v = ipl_decide({}, parse_formula("not p | not not p"));
  ASSERT_TRUE(v.countermodel);
  const json j = to_json(*v.countermodel);
  EXPECT_EQ(j.at("worlds").size(), 3u);
  EXPECT_EQ(j.at("order").size(), 2u);
  const Countermodel back = countermodel_from_json(j);
  EXPECT_EQ(back.model, v.countermodel->model);
  EXPECT_EQ(back.witness, v.countermodel->witness);
  EXPECT_TRUE(is_countermodel(back, {}, parse_formula("not p | not not p")));
}

TEST(Serialize, Reports) {
  const auto report = answer_sets(parse_program("p | q."));
  EXPECT_EQ(to_json(report), json::parse(R"({"answer_sets":[["p"],["q"]],"method":"reduct"})"));

  const json eq = to_json(classify(parse_program("p -> q."), parse_program("q -> p.")));
  EXPECT_EQ(eq.at("separating_extension"), json::parse(R"(["p."])"));
  EXPECT_FALSE(eq.at("strongly_equivalent").get<bool>());
  EXPECT_TRUE(eq.at("same_answer_sets").get<bool>());

  const json same = to_json(classify(parse_program("q."), parse_program("not p -> q. not not p -> q.")));
  EXPECT_FALSE(same.contains("separating_extension"));
  EXPECT_FALSE(same.contains("separating_ht_model"));

  const json r = to_json(reduct(parse_program("not q -> p."), make_atoms({"p"})));
  EXPECT_EQ(r.at("witness"), json::parse(R"(["p"])"));
  EXPECT_EQ(r.at("rules"), json::parse(R"(["p."])"));
}

TEST(Serialize, Verdicts) {
  const json proof = to_json(ipl_decide({}, parse_formula("p -> p")));
  EXPECT_EQ(proof.at("verdict"), "provable");
  EXPECT_EQ(proof.at("derivation").at("rule"), "impR");
  EXPECT_FALSE(proof.contains("countermodel"));
  const json refuted = to_json(ipl_decide({}, parse_formula("p | not p")));
  EXPECT_EQ(refuted.at("verdict"), "refuted");
  EXPECT_TRUE(refuted.contains("countermodel"));
}
