#include "qspace/error.hpp"

namespace qspace {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SystemMismatch: return "E_SYSTEM_MISMATCH";
    case ErrorCode::Domain: return "E_DOMAIN";
    case ErrorCode::ZeroInverse: return "E_ZERO_INVERSE";
    case ErrorCode::UnsupportedNegation: return "E_UNSUPPORTED_NEGATION";
    case ErrorCode::UnsupportedZero: return "E_UNSUPPORTED_ZERO";
    case ErrorCode::Incommensurable: return "E_INCOMMENSURABLE";
    case ErrorCode::NonInvertible: return "E_NON_INVERTIBLE";
    case ErrorCode::ExponentOverflow: return "E_EXPONENT_OVERFLOW";
    case ErrorCode::DuplicateSymbol: return "E_DUPLICATE_SYMBOL";
    case ErrorCode::EmptyBasis: return "E_EMPTY_BASIS";
    case ErrorCode::RankMismatch: return "E_RANK_MISMATCH";
    case ErrorCode::NonUnimodular: return "E_NON_UNIMODULAR";
    case ErrorCode::NonSquare: return "E_NON_SQUARE";
    case ErrorCode::UnknownSymbol: return "E_UNKNOWN_SYMBOL";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::EmptyList: return "E_EMPTY_LIST";
    case ErrorCode::BadFile: return "E_BAD_FILE";
  }
  return "E_UNKNOWN";
}

}  // namespace qspace
