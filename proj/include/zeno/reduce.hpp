#pragma once

// Deterministic parallel reduction for the thermal ensemble sums.
//
// The contract: the result is bit-identical for any worker count.  Items are
// processed in fixed-size chunks; each chunk owns a compensated accumulator
// and is evaluated by whichever worker grabs it, but chunk boundaries depend
// only on the item count, and the per-chunk partials are merged sequentially
// in chunk order.  Workers therefore never influence any floating-point
// operation order.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace zeno {

// Neumaier-compensated accumulator over a fixed number of slots (one slot
// per time-grid point in practice).
class CompensatedVector {
 public:
  explicit CompensatedVector(std::size_t slots)
      : sum_(slots, 0.0), comp_(slots, 0.0) {}

  void add(std::size_t slot, double x) {
    double& s = sum_[slot];
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      comp_[slot] += (s - t) + x;
    else
      comp_[slot] += (x - t) + s;
    s = t;
  }

  // Folds another accumulator in (its sums first, then its compensations),
  // preserving the deterministic order of operations.
  void merge(const CompensatedVector& other) {
    for (std::size_t j = 0; j < sum_.size(); ++j) {
      add(j, other.sum_[j]);
      add(j, other.comp_[j]);
    }
  }

  std::vector<double> values() const {
    std::vector<double> out(sum_.size());
    for (std::size_t j = 0; j < sum_.size(); ++j) out[j] = sum_[j] + comp_[j];
    return out;
  }

  std::size_t slots() const { return sum_.size(); }

 private:
  std::vector<double> sum_;
  std::vector<double> comp_;
};

// Chunk size is a fixed constant, never derived from the worker count.
inline constexpr long kReduceChunk = 1024;

// Evaluates item(i, acc) for i in [0, n_items) and returns the per-slot
// totals.  workers <= 0 means one thread per hardware core.
std::vector<double> deterministic_reduce(
    long n_items, std::size_t slots, int workers,
    const std::function<void(long, CompensatedVector&)>& item);

}  // namespace zeno
