#pragma once

#include <stdexcept>
#include <string>

namespace syt {

enum class Errc {
  invalid_argument,
  strictness_violation,
  not_contained,
  invalid_truncation,
  label_set_mismatch,
  not_an_integer,
  part_too_small,
  unsupported_region,
  incompatible_shapes,
  not_on_boundary,
  invalid_spec,
  no_formula,
  unknown_identity,
  unknown_family,
  range_too_large,
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::strictness_violation: return "StrictnessViolation";
    case Errc::not_contained: return "NotContained";
    case Errc::invalid_truncation: return "InvalidTruncation";
    case Errc::label_set_mismatch: return "LabelSetMismatch";
    case Errc::not_an_integer: return "NotAnInteger";
    case Errc::part_too_small: return "PartTooSmall";
    case Errc::unsupported_region: return "UnsupportedRegion";
    case Errc::incompatible_shapes: return "IncompatibleShapes";
    case Errc::not_on_boundary: return "NotOnBoundary";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::no_formula: return "NoFormulaAvailable";
    case Errc::unknown_identity: return "UnknownIdentity";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::range_too_large: return "RangeTooLarge";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above; the
// C API maps them one-to-one onto syt_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace syt
