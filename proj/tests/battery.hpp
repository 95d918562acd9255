#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace battery {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Re-checks an array of certificates; returns a process-style exit code (0 = all verified).
using VerifyPath = std::function<int(const nlohmann::json& certs)>;
int verify_in_process(const nlohmann::json& certs);

// The ten acceptance criteria, in order.
std::vector<Result> run(std::uint64_t seed, long search_bound, const VerifyPath& verify = verify_in_process);
std::string format(const Result& r);

}  // namespace battery
