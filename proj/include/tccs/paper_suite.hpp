#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tccs {

/// The bundled regression corpus, as a program in the concrete syntax.
std::string_view suite_corpus();

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;  // observed value, or the error text
};

/// Runs every corpus item in a fixed order.
std::vector<SuiteResult> run_paper_suite();

}  // namespace tccs
