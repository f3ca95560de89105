#pragma once

#include <stdexcept>
#include <string>

namespace ec {

/// Error kinds raised by the library. The names returned by errc_name are
/// stable and appear verbatim in CLI error objects.
enum class errc {
  incompatible_fields,
  division_by_zero,
  parse_error,
  invalid_field,
  dimension_mismatch,
  degenerate_space,
  redundant_generator,
  duplicate_generator,
  wrong_extreme_count,
  degenerate_dependence,
  zero_operator,
  norm_exceeds_one,
  norm_not_one,
  unbounded_region,
  too_large,
  precondition_violated,
  unknown_name,
  internal_geometry,
  falsification,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::incompatible_fields: return "IncompatibleFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::parse_error: return "ParseError";
    case errc::invalid_field: return "InvalidField";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degenerate_space: return "DegenerateSpace";
    case errc::redundant_generator: return "RedundantGenerator";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::wrong_extreme_count: return "WrongExtremeCount";
    case errc::degenerate_dependence: return "DegenerateDependence";
    case errc::zero_operator: return "ZeroOperator";
    case errc::norm_exceeds_one: return "NormExceedsOne";
    case errc::norm_not_one: return "NormNotOne";
    case errc::unbounded_region: return "UnboundedRegion";
    case errc::too_large: return "TooLarge";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::unknown_name: return "UnknownName";
    case errc::internal_geometry: return "InternalGeometry";
    case errc::falsification: return "Falsification";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace ec
