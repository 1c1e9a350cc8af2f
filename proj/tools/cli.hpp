#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace supertab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kSearchLimit = 3,
};

inline constexpr std::uint64_t kDefaultMaxNodes = 10'000'000;

// Runs one command. args excludes the program name. `max_nodes_env` is the
// raw value of SUPERTAB_MAX_NODES, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_nodes_env = std::nullopt);

}  // namespace supertab::cli
