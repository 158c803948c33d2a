#ifndef EHI_ERRORS_HPP
#define EHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ehi {

struct EhiError : std::runtime_error {
  explicit EhiError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter outside the convergence domain of a series/product.
struct DivergentParameter : EhiError {
  using EhiError::EhiError;
};

// Evaluation requested within 1e-12 of a pole; all digits would be lost.
struct PoleHit : EhiError {
  using EhiError::EhiError;
};

struct QuadratureFailure : EhiError {
  using EhiError::EhiError;
};

// Line-integral descriptor whose integrand does not decay at the cutoff.
struct TailBoundViolated : EhiError {
  using EhiError::EhiError;
};

struct UnknownGroup : EhiError {
  using EhiError::EhiError;
};

struct RankZero : EhiError {
  using EhiError::EhiError;
};

struct UnknownRepresentation : EhiError {
  using EhiError::EhiError;
};

struct RankTooLarge : EhiError {
  using EhiError::EhiError;
};

struct ChargeWindowViolation : EhiError {
  using EhiError::EhiError;
};

struct MissingFlavorData : EhiError {
  using EhiError::EhiError;
};

struct FlavorAnomalyViolation : EhiError {
  using EhiError::EhiError;
};

// Operation defined only for non-chiral matter content.
struct ChiralTheory : EhiError {
  using EhiError::EhiError;
};

struct LengthMismatch : EhiError {
  using EhiError::EhiError;
};

struct DomainViolation : EhiError {
  using EhiError::EhiError;
};

struct ParseError : EhiError {
  using EhiError::EhiError;
};

// Exact arithmetic left the 64-bit range; result would be silently wrong.
struct OverflowError : EhiError {
  using EhiError::EhiError;
};

}  // namespace ehi

#endif
