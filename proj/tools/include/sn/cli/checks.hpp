#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sn::cli {

struct CheckResult {
  std::string tag;
  bool passed = true;
  std::vector<std::string> lines;
};

struct CheckInfo {
  std::string tag;
  std::string summary;
};

/// Every verify tag, in suite order ("all" excluded).
const std::vector<CheckInfo>& check_catalog();

/// Runs one check. `quick` shrinks the sample sizes and ranges; the output
/// depends only on (tag, seed, quick).
CheckResult run_check(const std::string& tag, std::uint64_t seed, bool quick);

}  // namespace sn::cli
