#include <gtest/gtest.h>

#include "sphplanks/io.hpp"

using namespace sphplanks;

TEST(ParseAngle, Forms) {
  EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(parse_angle("-pi/3"), -kPi / 3);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle(" 2 * pi "), 2 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi*0.25"), kPi * 0.25);
  EXPECT_DOUBLE_EQ(parse_angle("0.5"), 0.5);
  EXPECT_THROW(parse_angle("p"), InputError);
  EXPECT_THROW(parse_angle("pi/0"), InputError);
  EXPECT_THROW(parse_angle("1.0x"), InputError);
  EXPECT_THROW(parse_angle(""), InputError);
}

TEST(BodyJson, RoundTrip) {
  const ConvexBody k = octant(3);
  const Json j = body_to_json(k, Json{{"kind", "octant"}});
  const ConvexBody back = body_from_json(parse_json_text(j.dump(), "mem"));
  EXPECT_EQ(back.normals(), k.normals());
  EXPECT_EQ(back.generators(), k.generators());
  EXPECT_EQ(j["tags"]["kind"], "octant");
}

TEST(BodyJson, FieldDiagnostics) {
  try {
    body_from_json(parse_json_text(R"({"dim": 2, "rep": "H", "normals": [[1, 0, 0], [0, 1]]})", "mem"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.where(), "normals[1]");
  }
  try {
    body_from_json(parse_json_text(R"({"dim": 2, "rep": "V", "generators": [[1, 0, 0.5]]})", "mem"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.where(), "generators[0]");
  }
  EXPECT_THROW(body_from_json(parse_json_text(R"({"dim": 2, "rep": "Q"})", "mem")), InputError);
  EXPECT_THROW(body_from_json(parse_json_text(R"({"rep": "H"})", "mem")), InputError);
  try {
    parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "f.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.where().substr(0, 9), "f.json:3:");
  }
}

TEST(BodyJson, SymbolicEntriesAccepted) {
  const ConvexBody k = body_from_json(parse_json_text(R"({"dim": 2, "rep": "H", "normals": [[-1, 0, 0], [0, -1, 0]]})", "m"));
  EXPECT_TRUE(k.is_body());
}

TEST(CoveringJson, FanRoundTrip) {
  const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(3, 3);
  const CoveringInstance f =
      widen_fan(make_lune_fan(2, q.leftCols(2), q.rightCols(1), {0.0, 0.5 * kPi, kPi, 1.5 * kPi, 2 * kPi}), 0.01);
  const Json j = covering_to_json(f);
  const CoveringInstance back = covering_from_json(parse_json_text(j.dump(), "mem"));
  EXPECT_EQ(back.construction, Construction::PerturbedFan);
  EXPECT_EQ(back.fan->inradius_sum(), f.fan->inradius_sum());
  EXPECT_EQ(back.bodies.size(), 4u);
}

TEST(CoveringJson, CustomBodies) {
  const Json j = parse_json_text(R"({"dim": 2, "ball": {"center": [0, 0, 1], "radius": "pi/2"},
    "bodies": [{"dim": 2, "rep": "H", "normals": [[0, 0, -1]]}]})", "mem");
  const CoveringInstance c = covering_from_json(j);
  EXPECT_EQ(c.construction, Construction::Custom);
  EXPECT_NEAR(c.ball.radius, kPi / 2, 0.0);
  const Json bad = parse_json_text(R"({"dim": 2, "ball": {"center": [0, 0, 1], "radius": 1.0}, "bodies": []})", "m");
  EXPECT_THROW(covering_from_json(bad), InputError);
}

TEST(ReportJson, StableKeysAndCsv) {
  VerificationReport r;
  r.claim = "demo";
  r.lhs = Estimate{1.0, 0.1, 10, 3, Quantity::Volume};
  r.rhs = Estimate::exact(2.0);
  r.slack = 1.0;
  r.extras = {{"b", 2.0}, {"a", 1.0}};
  r.finalize();
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys.front(), "claim");
  EXPECT_EQ(keys[1], "pass");
  EXPECT_EQ(j["extras"].begin().key(), "b");
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, 10), "claim,pass");
  EXPECT_NE(csv.find("\ndemo,true,1,0.10000000000000001,2,"), std::string::npos);
}

TEST(WeightParse, Forms) {
  EXPECT_EQ(parse_weight("spherical", 3).name(), "spherical(3)");
  EXPECT_EQ(parse_weight("spherical:2", 3).name(), "spherical(2)");
  EXPECT_DOUBLE_EQ(parse_weight("constant:2.5", 2)(7.0), 2.5);
  EXPECT_THROW(parse_weight("gaussian", 2), InputError);
}
