#include "seqlrc/error.hpp"

namespace seqlrc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedGraph: return "MalformedGraph";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::InvalidR: return "InvalidR";
    case ErrorKind::WrongT: return "WrongT";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RowTooHeavy: return "RowTooHeavy";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace seqlrc
