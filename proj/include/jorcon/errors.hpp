#pragma once

#include <stdexcept>
#include <string>

namespace jorcon {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  PoleAtQ1,
  DimensionMismatch,
  SingularMatrix,
  UnsupportedDimension,
  InternalMismatch,
  MissingRewriteRule,
  InvalidLabel,
  InvalidCutoff,
  TruncationTooSmall,
  Parse,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Location of a coefficient that has no q -> 1 limit. Rows and columns are
// 1-based when set; `context` names the object (matrix entry, relation).
struct PoleInfo {
  std::string context;
  int row = 0;
  int col = 0;
  std::string coefficient;
};

class PoleAtQ1 : public Error {
public:
  explicit PoleAtQ1(PoleInfo info);

  const PoleInfo& info() const noexcept { return info_; }

private:
  PoleInfo info_;
};

} // namespace jorcon
