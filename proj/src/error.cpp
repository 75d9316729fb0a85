#include "veechfib/error.hpp"

namespace veechfib {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::no_real_root: return "no-real-root";
    case ErrorKind::mixed_modulus: return "mixed-modulus";
    case ErrorKind::unsupported_family: return "unsupported-family";
    case ErrorKind::inapplicable: return "inapplicable";
    case ErrorKind::inadmissible_prime: return "inadmissible-prime";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::inconsistent_cover_data: return "inconsistent-cover-data";
    case ErrorKind::invalid_root_data: return "invalid-root-data";
    case ErrorKind::invalid_discriminant: return "invalid-discriminant";
    case ErrorKind::spin_required: return "spin-required";
    case ErrorKind::missing_external_data: return "missing-external-data";
    case ErrorKind::inconsistency: return "inconsistency";
  }
  return "unknown";
}

bool is_mathematical(ErrorKind k) {
  switch (k) {
    case ErrorKind::inconsistent_cover_data:
    case ErrorKind::invalid_root_data:
    case ErrorKind::inconsistency:
    case ErrorKind::cap_exceeded:
    case ErrorKind::no_real_root:
      return true;
    default:
      return false;
  }
}

}  // namespace veechfib
