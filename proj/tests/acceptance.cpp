#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include "battery.hpp"

// Usage: acceptance [path/to/qm]. With a CLI path the certificate round trip goes through `qm verify`.
int main(int argc, char** argv) {
  battery::VerifyPath verify = battery::verify_in_process;
  if (argc > 1) {
    std::string cli = argv[1];
    verify = [cli](const nlohmann::json& certs) {
      auto dir = std::filesystem::temp_directory_path();
      std::string file = (dir / "qm_acceptance_certificates.json").string();
      std::ofstream(file) << certs.dump();
      std::string log = (dir / "qm_acceptance_verify.log").string();
      int status = std::system((cli + " verify " + file + " > " + log).c_str());
      return WIFEXITED(status) ? WEXITSTATUS(status) : 1;
    };
  }
  bool ok = true;
  for (const auto& r : battery::run(20261017, 10000, verify)) {
    std::cout << battery::format(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
