#pragma once

namespace cornerforge {

// Worker count from CORNERFORGE_THREADS (0 or unset = auto). Read once.
int thread_count();

}  // namespace cornerforge
