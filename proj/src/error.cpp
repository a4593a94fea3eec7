#include "infcc/error.hpp"

namespace infcc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kFlipTargetNotMember: return "FlipTargetNotMember";
    case ErrorCode::kNotAMember: return "NotAMember";
    case ErrorCode::kUnboundedQuad: return "UnboundedQuad";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kInfiniteCrossers: return "InfiniteCrossers";
    case ErrorCode::kNotLocallyFinite: return "NotLocallyFinite";
    case ErrorCode::kNotAPolygon: return "NotAPolygon";
    case ErrorCode::kArcOutsideModel: return "ArcOutsideModel";
    case ErrorCode::kSupportMeetsU: return "SupportMeetsU";
    case ErrorCode::kNonAdmissibleFrontier: return "NonAdmissibleFrontier";
    case ErrorCode::kExactnessFailure: return "ExactnessFailure";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

bool Error::is_refusal() const {
  return code_ == ErrorCode::kUnreachable || code_ == ErrorCode::kNotLocallyFinite ||
         code_ == ErrorCode::kInfiniteCrossers;
}

}  // namespace infcc
