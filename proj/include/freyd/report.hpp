#pragma once

// Machine-readable reports: {version, command, checks: [{name, status,
// summary, witness}], overall}, keys in that order.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "freyd/functor.hpp"

namespace freyd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class Status { Pass, Fail, Error };

std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string summary;
  Json witness = Json::object();
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }
  bool passed() const;
  // 0 when every check passes, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }

  Json to_json() const;
  // Two-space indented, newline terminated.
  std::string dump() const;
  // Throws Error on a malformed document.
  static Report from_json(const Json& j);

 private:
  std::string command_;
  std::vector<Check> checks_;
};

// Runs f and turns an escaping Error into an error check.
Check guarded(const std::string& name, const std::function<Check()>& f);

Json to_json(const Mat& a);
Json to_json(const FPMod& m);
// Presentation plus the value at every test module.
Json to_json(const FPFunctor& f);

}  // namespace freyd
