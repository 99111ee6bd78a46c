#pragma once

#include <string>
#include <vector>

namespace crystal {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Skew RSK bijectivity and biword properties on randomized instances.
SuiteResult verify_rsk(int instances = 2000, unsigned seed = 20240811);

// apply_direct == apply_tensor: exhaustive for n = 4 (all sinks, coordinates
// <= 2) plus `samples` randomized data with n <= 7, coordinates <= 4.
SuiteResult verify_thm44(int samples = 10000, unsigned seed = 7);

// embed is a crystal embedding on full B(lambda) graphs: n = 4, all
// partitions with at most `max_cells` cells, every sink.
SuiteResult verify_thm54(int max_cells = 6);

std::vector<SuiteResult> verify_all();

}  // namespace crystal
