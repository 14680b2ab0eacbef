#include "doctest.h"

#include "freyd/errors.hpp"
#include "freyd/example112.hpp"
#include "freyd/report.hpp"

using namespace freyd;

TEST_CASE("report keys come out in a fixed order") {
  Report r("demo");
  r.add({"a", Status::Pass, "fine", Json::object()});
  Json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "command", "checks", "overall"});
  CHECK(j["overall"] == "pass");
  CHECK(r.exit_code() == 0);
  CHECK(r.dump().back() == '\n');
}

TEST_CASE("round trip through json") {
  Report r("x");
  r.add({"one", Status::Pass, "ok", Json::object()});
  Json w;
  w["matrix"] = to_json(Mat::from_rows(CoeffRing::mod(4), {{2, 1}}));
  r.add({"two", Status::Fail, "bad", w});
  r.add(guarded("three", []() -> Check { throw ShapeError("wrong shape"); }));
  CHECK(r.checks()[2].status == Status::Error);
  CHECK(r.exit_code() == 1);
  Report back = Report::from_json(r.to_json());
  CHECK(back.dump() == r.dump());
  CHECK_THROWS_AS(Report::from_json(Json::parse(R"({"version": "0.1.0"})")), Error);
}

TEST_CASE("one check per claim of the Z/4 example") {
  Report r = run_example112({});
  REQUIRE(r.checks().size() == 10);
  CHECK(r.passed());
  CHECK(run_example112({}).dump() == r.dump());

  Example112Options faulty;
  faulty.engine.fault = "tensor-flat";
  Report f = run_example112(faulty);
  CHECK_FALSE(f.passed());
  std::size_t failing = 0;
  for (const auto& c : f.checks())
    if (c.status == Status::Fail) ++failing;
  CHECK(failing >= 1);
}
