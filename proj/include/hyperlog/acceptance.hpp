#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperlog/evaluator.hpp"

namespace hyperlog {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int number;
  std::string title;
  std::function<CriterionResult(const EvalConfig&)> run;
};

// The eight exit criteria of the project, in order. Each run() is
// self-contained and deterministic.
const std::vector<Criterion>& acceptance_criteria();

std::vector<CriterionResult> run_acceptance(const EvalConfig& cfg = {});

std::string format_criterion_line(const CriterionResult& result);

}  // namespace hyperlog
