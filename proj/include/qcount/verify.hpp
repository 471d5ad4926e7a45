#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qcount {

/// Invariant families checkable at a finite bound. The bound is a
/// denominator cap for the rational families, an index cap for
/// `enumeration`, and a level/depth cap for `measure` and `odometer_cover`.
enum class Suite {
  action,
  conjugacy,
  qmark,
  jump,
  measure,
  odometer_cover,
  enumeration,
  all,
};

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct VerifyReport {
  std::string suite;
  unsigned long long checked = 0;
  bool ok = true;
  std::string counterexample;  // first failing identity: input and both sides
};

std::vector<VerifyReport> run_suite(Suite s, unsigned long bound);

}  // namespace qcount
