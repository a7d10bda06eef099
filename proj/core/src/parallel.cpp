#include "xbmat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace xbmat {

int default_worker_count() {
  const char* env = std::getenv("XBMAT_WORKERS");
  if (env == nullptr) return 1;
  try {
    const int n = std::stoi(env);
    return n > 0 ? n : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace xbmat
