#pragma once

#include <stdexcept>
#include <string>

namespace pd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// flag map construction / surgery
struct NotInvolution : Error { using Error::Error; };
struct FixedPoint : Error { using Error::Error; };
struct BadEdgeOrbit : Error { using Error::Error; };
struct MaskOutOfRange : Error { using Error::Error; };
struct NonOrientable : Error { using Error::Error; };

// rotation parsing and edge lookup
struct BadToken : Error { using Error::Error; };
struct LabelCountNotTwo : Error { using Error::Error; };
struct DoubleNegative : Error { using Error::Error; };
struct NoSuchEdge : Error { using Error::Error; };

// polynomials
struct OddExponent : Error { using Error::Error; };
struct MalformedPolynomial : Error { using Error::Error; };

// enumeration limits
struct CapExceeded : Error { using Error::Error; };

} // namespace pd
