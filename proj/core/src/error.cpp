#include "rghw/error.hpp"

namespace rghw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPrimePower: return "NotAPrimePower";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidBand: return "InvalidBand";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::CountOutOfRange: return "CountOutOfRange";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::PointOutOfBox: return "PointOutOfBox";
    case ErrorCode::SubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::DuplicateElements: return "DuplicateElements";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InvalidNesting: return "InvalidNesting";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rghw
