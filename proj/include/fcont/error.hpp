#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcont {

enum class ErrorCode {
  invalid_parameter,
  unsupported_order,
  domain_violation,
  order_mismatch,
  unsupported_stencil,
  insufficient_samples,
  undersampling,
  empty_input,
  derivative_unavailable,
  unknown_name,
  unknown_format,
  io_error,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::unsupported_order: return "unsupported-order";
    case ErrorCode::domain_violation: return "domain-violation";
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::unsupported_stencil: return "unsupported-stencil";
    case ErrorCode::insufficient_samples: return "insufficient-samples";
    case ErrorCode::undersampling: return "undersampling";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::derivative_unavailable: return "derivative-unavailable";
    case ErrorCode::unknown_name: return "unknown-name";
    case ErrorCode::unknown_format: return "unknown-format";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {
inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}
}  // namespace detail

}  // namespace fcont
