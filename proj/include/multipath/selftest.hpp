#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace multipath {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // at most a handful are kept
  double seconds = 0;
};

/// Brute-force property suites over every digraph with at most
/// `max_vertices` vertices (one per isomorphism class):
///   d_squared          d^2 = 0 on every multipath and chromatic complex built
///   sigma_parity       sigma signs pass the square test
///   sign_independence  sigma and lex signs give equal cohomology
///   boolean_posets     Boolean path posets are lines; 2^n - 1 posets are polygons
///   morse_shortcut     conclusive greedy matchings agree with direct cohomology
///   projection         projections are chain maps and compose
std::vector<SuiteResult> run_selftest(std::size_t max_vertices = 4);

SuiteResult suite_d_squared(std::size_t max_vertices);
SuiteResult suite_sigma_parity(std::size_t max_vertices);
SuiteResult suite_sign_independence(std::size_t max_vertices);
SuiteResult suite_boolean_posets(std::size_t max_vertices);
SuiteResult suite_morse_shortcut(std::size_t max_vertices);
SuiteResult suite_projection();

}  // namespace multipath
