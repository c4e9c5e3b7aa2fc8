#include <doctest.h>

#include <cmath>
#include <string>

#include "atiyah/json_io.hpp"

using namespace atiyah;
using nlohmann::json;

namespace {

const Configuration kTetrahedron{{Vector3(1, 1, 1), Vector3(1, -1, -1),
                                  Vector3(-1, 1, -1), Vector3(-1, -1, 1)}};

}  // namespace

TEST_CASE("configuration JSON round trip") {
  const json j = to_json(kTetrahedron);
  const Configuration back = config_from_json(j);
  REQUIRE(back.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(back.points[static_cast<std::size_t>(i)] ==
          kTetrahedron.points[static_cast<std::size_t>(i)]);
  }

  // Reparse through text.
  const Configuration back2 = config_from_json(json::parse(j.dump()));
  CHECK(back2.points[3] == kTetrahedron.points[3]);
}

TEST_CASE("malformed configuration JSON names the offending point") {
  CHECK_THROWS_AS((void)config_from_json(json::parse("{}")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)config_from_json(json::parse("[1,2,3]")),
                  std::invalid_argument);

  try {
    (void)config_from_json(json::parse(R"({"points": [[0,0,0], [1,2]]})"));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("point 1") != std::string::npos);
  }

  try {
    (void)config_from_json(
        json::parse(R"({"points": [[0,0,0], [1,2,"x"]]})"));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("point 1") != std::string::npos);
  }
}

TEST_CASE("analysis report JSON schema") {
  const json j = to_json(analyze(kTetrahedron));
  for (const char* key : {"n", "D", "absD", "detH", "minEig", "cn",
                          "conj1_margin", "conj2_margin"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["D"].is_array());
  CHECK(j["D"].size() == 2);
  CHECK(std::isfinite(j["absD"].get<double>()));
  CHECK(j["n"].get<int>() == 4);
  CHECK(j.size() == 8);  // exactly the documented keys
}

TEST_CASE("certificate JSON") {
  const json j = to_json(pd_certificate(kTetrahedron));
  for (const char* key : {"collinear4", "tripleA", "tripleB", "detA_tripleA",
                          "detA_tripleB", "minEigH4", "verdictPD"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j["collinear4"].get<bool>());
  CHECK(j["tripleA"] == json::array({1, 2, 3}));  // 1-based in the schema

  const Configuration collinear{
      {Vector3(0, 0, 0), Vector3(0, 0, 1), Vector3(0, 0, 2),
       Vector3(0, 0, 3)}};
  const json jc = to_json(pd_certificate(collinear));
  CHECK(jc["collinear4"].get<bool>());
  CHECK(jc["tripleA"].is_null());
  CHECK(jc["verdictPD"].get<bool>());
}

TEST_CASE("verify record and summary serialization") {
  VerifyRecord rec;
  rec.index = 3;
  rec.n = 4;
  rec.absD = 1.5;
  rec.detH = 324.0;
  rec.minEig = 0.25;
  rec.conj1_margin = 0.25;
  rec.conj2_margin = 0.5;
  rec.max_residual = 1e-12;

  const json j = to_json(rec);
  CHECK(j["index"] == 3);
  CHECK(j["absD"] == 1.5);

  CHECK(csv_header() ==
        "n,absD,detH,minEig,conj1_margin,conj2_margin,max_residual");
  const std::string row = csv_row(rec);
  CHECK(row.substr(0, 6) == "4,1.5,");
  // The 17-significant-digit formatting round-trips doubles losslessly.
  const std::string last = row.substr(row.rfind(',') + 1);
  CHECK(std::stod(last) == 1e-12);

  VerifyRecord bad;
  bad.index = 1;
  bad.error = true;
  bad.message = "points 0 and 1 coincide";
  CHECK(to_json(bad).contains("error"));
}

TEST_CASE("minimize result serialization") {
  MinimizeResult r;
  r.bestConfig = kTetrahedron;
  r.bestAbsD = 1.0;
  r.iterations = 12;
  r.restarts = 2;
  r.converged = true;
  const json j = to_json(r);
  CHECK(j["bestConfig"]["points"].size() == 4);
  CHECK(j["converged"] == true);
  CHECK(j["iterations"] == 12);
}
