#pragma once

// Named verification checks over the standard group suite, shared by the
// command-line tool and the acceptance binary.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mackey/decomp.hpp"

namespace mackey {

struct SuiteMember {
  std::string group;
  int p;
};

/// {C2, C3, C4, C6, S3, D4, Q8, A4, SL(2,3)} x {2, 3}.
std::vector<SuiteMember> standard_suite();

/// Pipelines shared between checks, one per (group, p).
class VerifyContext {
 public:
  explicit VerifyContext(std::string cache_dir = default_cache_dir()) : cache_dir_(std::move(cache_dir)) {}
  Pipeline& pipeline(const std::string& group, int p);
  const std::string& cache_dir() const { return cache_dir_; }

 private:
  std::string cache_dir_;
  std::map<std::pair<std::string, int>, std::unique_ptr<Pipeline>> pipelines_;
};

/// Check names in canonical order.
const std::vector<std::string>& check_names();

/// Runs one named check; errors inside the check become a failing result.
CheckResult run_check(const std::string& name, VerifyContext& ctx);

/// Runs the named checks (all when `only` is empty) in canonical order.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only, VerifyContext& ctx);

}  // namespace mackey
