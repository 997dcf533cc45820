#ifndef CURVSCALE_ERRORS_HPP
#define CURVSCALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvscale {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularDecompositionFailure : Error { using Error::Error; };
struct AmbiguousProjection : Error { using Error::Error; };
struct NotSPD : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct OutsideChart : Error { using Error::Error; };
struct InvertedCell : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct IndefiniteGram : Error { using Error::Error; };
struct DegenerateFit : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

}  // namespace curvscale

#endif
