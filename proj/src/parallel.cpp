#include "rackcolor/parallel.hpp"

#include <cstdlib>
#include <thread>

#include "rackcolor/text.hpp"

namespace rackcolor {

unsigned default_workers() {
  if (const char* env = std::getenv("RACKCOLOR_WORKERS")) {
    long long n = 0;
    if (text::parse_int(env, n) && n > 0 && n <= 256) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rackcolor
