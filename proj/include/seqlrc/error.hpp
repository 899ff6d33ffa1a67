#pragma once

#include <stdexcept>
#include <string>

namespace seqlrc {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  MalformedGraph,
  NotPrime,
  SearchExhausted,
  InvalidGraph,
  RankDeficient,
  InvalidR,
  WrongT,
  BudgetExceeded,
  RowTooHeavy,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace seqlrc
