#pragma once

#include <stdexcept>
#include <string>

namespace conjdiam {

enum class ErrorCode {
  InvalidSpec,
  OrderCapExceeded,
  EmptySet,
  NotNormallyGenerating,
  NoGeneratingSet,
  NotFound,
  FactorNotInX,
  SuiteNotApplicable,
  SyntaxError,
  TokenNotInFamily,
};

const char* to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conjdiam
