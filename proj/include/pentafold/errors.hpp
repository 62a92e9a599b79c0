#ifndef PENTAFOLD_ERRORS_HPP
#define PENTAFOLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pentafold {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ClosureOverflow : Error {
  explicit ClosureOverflow(const std::string& m) : Error(m) {}
};
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& m) : Error(m) {}
};
struct DegenerateQuadruple : Error {
  explicit DegenerateQuadruple(const std::string& m) : Error(m) {}
};
struct DegenerateParams : Error {
  explicit DegenerateParams(const std::string& m) : Error(m) {}
};
struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& m) : Error(m) {}
};
struct NotClosedSurface : Error {
  explicit NotClosedSurface(const std::string& m) : Error(m) {}
};
struct NonPositiveNorm : Error {
  explicit NonPositiveNorm(const std::string& m) : Error(m) {}
};
struct BranchLocus : Error {
  explicit BranchLocus(const std::string& m) : Error(m) {}
};
struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& m) : Error(m) {}
};
struct PoleDetected : Error {
  explicit PoleDetected(const std::string& m) : Error(m) {}
};
struct PoleAtNonPositiveInteger : PoleDetected {
  explicit PoleAtNonPositiveInteger(const std::string& m) : PoleDetected(m) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(m) {}
};
struct NotUnit : Error {
  explicit NotUnit(const std::string& m) : Error(m) {}
};
struct BadAxes : Error {
  explicit BadAxes(const std::string& m) : Error(m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(m) {}
};

}  // namespace pentafold

#endif
