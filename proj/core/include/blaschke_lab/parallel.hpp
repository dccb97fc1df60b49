#pragma once

#include <cstddef>
#include <functional>

namespace blaschke_lab {

/// Worker count for internal loops: BLASCHKE_LAB_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
unsigned thread_budget();

/// Runs body(i) for i in [0, n) over contiguous chunks. Results must be
/// written to per-index slots; no ordering between indices is implied.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace blaschke_lab
