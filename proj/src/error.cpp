#include "conjdiam/error.hpp"

namespace conjdiam {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotNormallyGenerating: return "NotNormallyGenerating";
    case ErrorCode::NoGeneratingSet: return "NoGeneratingSet";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::FactorNotInX: return "FactorNotInX";
    case ErrorCode::SuiteNotApplicable: return "SuiteNotApplicable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TokenNotInFamily: return "TokenNotInFamily";
  }
  return "Unknown";
}

}  // namespace conjdiam
