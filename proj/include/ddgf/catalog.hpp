#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddgf {

struct CheckRecord {
  int criterion = 0;
  std::string name;
  std::string instance;
  std::string expected;
  std::string observed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct Report {
  int max_q = 0;
  std::vector<CheckRecord> records;
  bool all_pass() const;
};

/// Runs the full reproduction grid in a fixed order. max_q in {3,5,7}
/// selects how far the symplectic instances go; every record is guarded, so
/// a failure never stops the remaining records.
Report run_catalog(int max_q);

void write_report_json(std::ostream& os, const Report& report);

}  // namespace ddgf
