#include "modcone/error.hpp"

namespace modcone {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::UnsupportedRecenter: return "UnsupportedRecenter";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::DivisionBySingularSeries: return "DivisionBySingularSeries";
    case ErrorCode::LocallyConstant: return "LocallyConstant";
    case ErrorCode::ZeroNotBracketed: return "ZeroNotBracketed";
  }
  return "Unknown";
}

}  // namespace modcone
