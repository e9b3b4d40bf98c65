#include "mflip/multi_index.hpp"

#include <string>

#include "mflip/errors.hpp"

namespace mflip {

Dims::Dims(std::vector<int> local_dims, long max_total)
    : local_(std::move(local_dims)) {
  if (local_.empty()) throw invalid_input("dims: need at least one subsystem");
  total_ = 1;
  for (int d : local_) {
    if (d < 2)
      throw invalid_input("dims: every local dimension must be >= 2, got " +
                          std::to_string(d));
    if (total_ > max_total / d)
      throw invalid_input("dims: total dimension exceeds cap " +
                          std::to_string(max_total));
    total_ *= d;
  }
}

long flat_index(const std::vector<int>& coords, const Dims& dims) {
  if (static_cast<int>(coords.size()) != dims.n())
    throw invalid_input("flat_index: coordinate count mismatch");
  long flat = 0;
  for (int s = 0; s < dims.n(); ++s) {
    const int a = coords[static_cast<std::size_t>(s)];
    if (a < 0 || a >= dims.dim(s))
      throw invalid_input("flat_index: coordinate out of range");
    flat = flat * dims.dim(s) + a;
  }
  return flat;
}

std::vector<int> coords_of(long flat, const Dims& dims) {
  if (flat < 0 || flat >= dims.total())
    throw invalid_input("coords_of: flat index out of range");
  std::vector<int> coords(static_cast<std::size_t>(dims.n()));
  for (int s = dims.n() - 1; s >= 0; --s) {
    coords[static_cast<std::size_t>(s)] = static_cast<int>(flat % dims.dim(s));
    flat /= dims.dim(s);
  }
  return coords;
}

}  // namespace mflip
