#ifndef SPHPLANKS_ERROR_HPP
#define SPHPLANKS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sphplanks {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotUnit,
  NotInHemisphere,
  NonBody,
  InconsistentReps,
  UnsupportedDimension,
  OutsideOpenHemisphere,
  Degenerate,
  NotCovering,
  GenerationFailed,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sphplanks

#endif  // SPHPLANKS_ERROR_HPP
