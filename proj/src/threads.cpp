#include "cornerforge/threads.hpp"

#include <cstdlib>
#include <thread>

namespace cornerforge {

int thread_count() {
  static const int cached = [] {
    int n = 0;
    if (const char* env = std::getenv("CORNERFORGE_THREADS")) {
      n = std::atoi(env);
      if (n < 0) n = 0;
    }
    if (n == 0) {
      n = static_cast<int>(std::thread::hardware_concurrency());
      if (n <= 0) n = 1;
    }
    return n;
  }();
  return cached;
}

}  // namespace cornerforge
