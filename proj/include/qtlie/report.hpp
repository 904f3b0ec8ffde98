#pragma once

// {claim, status, witness} reports shared by the verifiers and the CLI.

#include <string>
#include <utility>

#include <json.hpp>

#include "qtlie/quotient.hpp"

namespace qtlie {

struct Report {
  std::string claim;
  bool pass = true;
  std::string witness;  // first failure only
  nlohmann::json details = nlohmann::json::object();

  explicit Report(std::string c = "") : claim(std::move(c)) {}

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void absorb(const CheckList& checks, const std::string& prefix = "") {
    for (const auto& [name, ok] : checks.items) check(ok, prefix + name);
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"claim", claim}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
    for (const auto& [k, v] : details.items()) j[k] = v;
    return j;
  }
};

}  // namespace qtlie
