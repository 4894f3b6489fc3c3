#ifndef EQUIPAGE_GUARD_HPP
#define EQUIPAGE_GUARD_HPP

#include <cstdint>
#include <string>

#include "equipage/errors.hpp"

namespace equipage {

// Every exhaustive search accepts a guard; exceeding it raises resource_error
// naming the bound, so a caller can distinguish "absent" from "not searched".
struct SizeGuard {
  std::uint64_t limit = 1000000;

  void check(std::uint64_t candidates, const std::string& what) const {
    if (candidates > limit) {
      throw resource_error(what + ": search space of " + std::to_string(candidates) +
                           " candidates exceeds guard " + std::to_string(limit));
    }
  }

  // Saturating product for counting candidate spaces without overflow.
  static std::uint64_t times(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
  }
};

inline const SizeGuard& default_guard() {
  static const SizeGuard g{};
  return g;
}

}  // namespace equipage

#endif
