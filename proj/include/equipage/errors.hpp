#ifndef EQUIPAGE_ERRORS_HPP
#define EQUIPAGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equipage {

// Malformed input data: dangling identifiers, non-total action tables, ...
// Distinct from a law violation, which is reported, not thrown.
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Sources/targets of the inputs of an operation do not line up.
struct boundary_error : std::runtime_error {
  explicit boundary_error(const std::string& what) : std::runtime_error(what) {}
};

// A search space exceeded the configured size guard.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A category over the walking arrow that is not one-directional.
struct not_a_correspondence_error : structural_error {
  explicit not_a_correspondence_error(const std::string& what) : structural_error(what) {}
};

// A replayed certificate failed to validate.
struct invalid_certificate_error : std::runtime_error {
  explicit invalid_certificate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equipage

#endif
