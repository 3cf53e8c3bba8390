#include "posetsym/config.hpp"

#include <cstdlib>
#include <string>

#include "posetsym/error.hpp"

namespace posetsym {

int degree_bound() {
  static const int bound = [] {
    const char* env = std::getenv("POSETSYM_DEGREE_BOUND");
    if (env == nullptr || *env == '\0') return kDefaultDegreeBound;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxDegreeBound) {
      throw SizeError("POSETSYM_DEGREE_BOUND must be an integer in [1, 12], got '" + std::string(env) + "'");
    }
    return static_cast<int>(v);
  }();
  return bound;
}

void check_degree(int n, const char* what) {
  if (n > degree_bound()) {
    throw SizeError(std::string(what) + ": size " + std::to_string(n) + " exceeds the degree bound " +
                    std::to_string(degree_bound()));
  }
}

}  // namespace posetsym
