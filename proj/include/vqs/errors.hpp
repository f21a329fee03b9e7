#pragma once

#include <stdexcept>
#include <string>

namespace vqs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// field_arith
struct CompositeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct MixedFields : Error { using Error::Error; };
struct NotASquare : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };

// exact_linalg
struct ShapeMismatch : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };

// embedding
struct NotTotallyIsotropic : Error { using Error::Error; };
struct DegenerateAmbient : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct DegenerateGram : Error { using Error::Error; };

// classify
struct NonTrivialRadical : Error { using Error::Error; };
struct NotSingular : Error { using Error::Error; };
struct InRadical : Error { using Error::Error; };

// iso_groups
struct BudgetExceeded : Error { using Error::Error; };
struct ParityMismatch : Error { using Error::Error; };
struct NotMinimal : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace vqs
