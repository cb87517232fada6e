#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dkf {

/// One verification check: pass iff max_residual <= tolerance.
struct CheckResult {
  std::string suite;
  std::string check;
  double max_residual = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
  bool pass() const { return max_residual <= tolerance; }
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass()) return false;
  return true;
}

inline std::string format_residual(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << v;
  return os.str();
}

/// Human-readable table, includes timings.
inline void print_report(std::ostream& os, const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << r.suite << "." << r.check
       << "  max_residual=" << format_residual(r.max_residual)
       << "  tolerance=" << format_residual(r.tolerance) << "  (" << std::fixed
       << std::setprecision(1) << r.elapsed_ms << " ms)\n";
}

/// Machine-readable JSON report. Timings are deliberately omitted so that
/// identical config and seed produce byte-identical files.
inline void write_report_json(std::ostream& os, const std::string& command,
                              const std::vector<CheckResult>& rs) {
  os << "{\n  \"command\": \"" << command << "\",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    os << "    {\"suite\": \"" << r.suite << "\", \"check\": \"" << r.check
       << "\", \"max_residual\": " << format_residual(r.max_residual)
       << ", \"tolerance\": " << format_residual(r.tolerance)
       << ", \"pass\": " << (r.pass() ? "true" : "false") << "}"
       << (i + 1 < rs.size() ? "," : "") << "\n";
  }
  os << "  ],\n  \"pass\": " << (all_pass(rs) ? "true" : "false") << "\n}\n";
}

}  // namespace dkf
