#ifndef OTTOQFT_ERROR_HPP
#define OTTOQFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ottoqft {

enum class ErrorKind {
  invalid_kernel,
  contract_violation,
  domain,
  range,
  kernel_inconsistency,
  truncation,
  accuracy,
  validation,
  io,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::invalid_kernel: return "invalid kernel";
    case ErrorKind::contract_violation: return "contract violation";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::range: return "range error";
    case ErrorKind::kernel_inconsistency: return "kernel inconsistency";
    case ErrorKind::truncation: return "truncation error";
    case ErrorKind::accuracy: return "accuracy error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::io: return "I/O error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ottoqft

#endif
