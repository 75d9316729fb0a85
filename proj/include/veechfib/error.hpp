#pragma once

#include <stdexcept>
#include <string>

namespace veechfib {

enum class ErrorKind {
  invalid_argument,
  no_real_root,
  mixed_modulus,
  unsupported_family,
  inapplicable,
  inadmissible_prime,
  cap_exceeded,
  inconsistent_cover_data,
  invalid_root_data,
  invalid_discriminant,
  spin_required,
  missing_external_data,
  inconsistency,
};

const char* kind_name(ErrorKind k);

// True for errors that mean "the mathematics does not close up" rather than
// "the caller asked for something malformed". The CLI maps these to exit 1.
bool is_mathematical(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace veechfib
