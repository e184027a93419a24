#include "toroidal/errors.hpp"

namespace toroidal {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedGerm: return "MalformedGerm";
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::InvalidCenterForm: return "InvalidCenterForm";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotACone: return "NotACone";
    case ErrorCode::InvalidPreRelation: return "InvalidPreRelation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace toroidal
