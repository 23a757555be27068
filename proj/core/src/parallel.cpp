#include "dho/parallel.hpp"

#include <cstdlib>
#include <string>

#include "dho/errors.hpp"

namespace dho {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("DHO_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1) throw InvalidInput("DHO_THREADS must be a positive integer, got '" + std::string(env) + "'");
  return std::min<unsigned>(hw, static_cast<unsigned>(cap));
}

}  // namespace dho
