#pragma once

#include <cstddef>

namespace rackcolor {

/// RACKCOLOR_WORKERS if set to a positive integer, else hardware concurrency.
unsigned default_workers();

struct SolverOptions {
  unsigned workers = default_workers();
};

}  // namespace rackcolor
