#pragma once

#include <vector>

namespace mflip {

// Tensor-factor dimensions d_s >= 2 for subsystems s = 0..n-1.
class Dims {
 public:
  // Default cap on the total Hilbert-space dimension; dense storage only.
  static constexpr long kMaxTotal = 4096;

  explicit Dims(std::vector<int> local_dims, long max_total = kMaxTotal);

  int n() const { return static_cast<int>(local_.size()); }
  int dim(int s) const { return local_[static_cast<std::size_t>(s)]; }
  long total() const { return total_; }
  const std::vector<int>& local() const { return local_; }

  bool operator==(const Dims& other) const { return local_ == other.local_; }
  bool operator!=(const Dims& other) const { return !(*this == other); }

 private:
  std::vector<int> local_;
  long total_ = 0;
};

// Row-major linearization, subsystem 0 most significant:
// flat = sum_s a_s * prod_{t>s} d_t.
long flat_index(const std::vector<int>& coords, const Dims& dims);
std::vector<int> coords_of(long flat, const Dims& dims);

}  // namespace mflip
