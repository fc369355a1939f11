#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lfrep/limits.hpp"

namespace lfrep {

enum class CheckStatus {
  pass,
  fail,   // the identity does not hold, or two engines disagree
  error,  // a guard or another exception stopped the check
};

struct CheckResult {
  std::string suite;
  std::string label;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  Limits limits;
  /// Also run checks that take minutes.
  bool slow = false;
};

/// duality, recursion, tutte, orientation, preprojective, fourier, tables,
/// counterexample.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". Each result is passed to
/// `on_result` as soon as it is known. Throws InvalidArgument for an
/// unknown suite name.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opts = {},
                                    const std::function<void(const CheckResult&)>& on_result = {});

std::string to_string(CheckStatus s);

}  // namespace lfrep
