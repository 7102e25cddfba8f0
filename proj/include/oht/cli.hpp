#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace oht::cli {

/// Entry point of the `oht` binary. Returns the process exit code: 0 on
/// success, 1 on evaluation failure, 2 on bad usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of v.
[[nodiscard]] std::string format_number(double v);
/// Scientific notation with 3 significant digits, e.g. 1.30e-14.
[[nodiscard]] std::string format_error(double v);

/// One reproduced error table.
struct Table {
  int id = 0;
  std::vector<std::string> columns;       // "delta=1" or "omega=5"
  std::vector<std::pair<int, int>> rows;  // (n, N)
  std::vector<std::vector<double>> error;
  std::vector<std::vector<double>> published;
  std::vector<std::vector<double>> threshold;
  std::vector<std::vector<bool>> flagged;
};

/// Acceptance threshold for a cell with the given published error:
/// 5e-12 below 1e-13, max(5 x published, 1e-11) otherwise.
[[nodiscard]] double cell_threshold(double published);
/// True if the computed error passes; published errors >= 1e-7 must also be
/// reproduced to within a factor of 5 from below.
[[nodiscard]] bool cell_passes(double computed, double published);

/// Computes table 1..4 (ParamError otherwise).
[[nodiscard]] Table compute_table(int id);
[[nodiscard]] std::string table_csv(const Table& t);

}  // namespace oht::cli
