#include "freyd/report.hpp"

#include "freyd/errors.hpp"

namespace freyd {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "error";
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (c.status != Status::Pass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["version"] = kVersion;
  j["command"] = command_;
  j["checks"] = Json::array();
  for (const auto& c : checks_) {
    Json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["summary"] = c.summary;
    e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  j["overall"] = passed() ? "pass" : "fail";
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Report Report::from_json(const Json& j) {
  try {
    Report r(j.at("command").get<std::string>());
    for (const auto& e : j.at("checks")) {
      Check c;
      c.name = e.at("name").get<std::string>();
      std::string s = e.at("status").get<std::string>();
      if (s == "pass")
        c.status = Status::Pass;
      else if (s == "fail")
        c.status = Status::Fail;
      else if (s == "error")
        c.status = Status::Error;
      else
        throw Error("unknown status '" + s + "'");
      c.summary = e.at("summary").get<std::string>();
      c.witness = e.at("witness");
      r.add(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

Check guarded(const std::string& name, const std::function<Check()>& f) {
  try {
    Check c = f();
    c.name = name;
    return c;
  } catch (const Error& e) {
    return Check{name, Status::Error, e.what(), Json::object()};
  }
}

Json to_json(const Mat& a) { return linalg::to_string(a); }

Json to_json(const FPMod& m) { return m.to_string(); }

Json to_json(const FPFunctor& f) {
  Json j;
  j["presentation"] = f.to_string();
  Json values = Json::array();
  for (const FPMod& x : test_modules(f.ring())) {
    FPMod v = evaluate(f, x);
    values.push_back(Json{{"at", x.to_string()}, {"value", v.to_string()}, {"size", v.cardinality()}});
  }
  j["values"] = values;
  return j;
}

}  // namespace freyd
