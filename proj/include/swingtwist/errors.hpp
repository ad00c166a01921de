#pragma once

#include <stdexcept>
#include <string>

namespace swingtwist {

// Failure kinds raised by operations with checked preconditions.
enum class errc {
  zero_vector,
  zero_pinor,
  non_unit_spinor,
  non_unit_quaternion,
  length_mismatch,
  antipodal_vectors,
  not_decomposable,
  degenerate_twist,
  non_bivector,
  bad_config,
};

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_vector: return "ZeroVector";
    case errc::zero_pinor: return "ZeroPinor";
    case errc::non_unit_spinor: return "NonUnitSpinor";
    case errc::non_unit_quaternion: return "NonUnitQuaternion";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::antipodal_vectors: return "AntipodalVectors";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::degenerate_twist: return "DegenerateTwist";
    case errc::non_bivector: return "NonBivector";
    case errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace swingtwist
