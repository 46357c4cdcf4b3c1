#ifndef FSV_ERROR_HPP
#define FSV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fsv {

enum class ErrorCode {
  invalid_argument,
  io,
  parse,
  schema_mismatch,
  unknown_item,
  duplicate_item,
  node_already_visited,
  pool_too_small,
  budget_exceeded,
  instance_too_large,
  invalid_spec,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace fsv

#endif
