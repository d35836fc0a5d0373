// Certificate batteries per module, reported as JSON.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace riley {

struct Check {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double resolution = 0;
  bool pass = false;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  double residual = 0;
};

// core, moduli, spheres, ford, limit, all
const std::vector<std::string>& suite_names();
// throws DomainError for an unknown suite
std::vector<Check> run_suite(const std::string& suite);
nlohmann::ordered_json checks_json(const std::string& suite, const std::vector<Check>& checks);

}  // namespace riley
