#include "recipart/errors.hpp"

namespace recipart {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicatePart: return "DuplicatePart";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::MissingTable: return "MissingTable";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::BelowThreshold: return "BelowThreshold";
    case ErrorCode::CongruenceViolation: return "CongruenceViolation";
    case ErrorCode::MissingBaseCertificate: return "MissingBaseCertificate";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NoCandidateFound: return "NoCandidateFound";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
  }
  return "Unknown";
}

}  // namespace recipart
