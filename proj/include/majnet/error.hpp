#pragma once

#include <stdexcept>
#include <string>

namespace majnet {

enum class ErrorKind {
  kValidation,  // an input violates a structural invariant
  kParse,       // malformed JSON / text format
  kRefusal,     // request exceeds a configured cap and was declined
  kIo,          // file system failure
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& message) {
  throw Error(ErrorKind::kValidation, message);
}

[[noreturn]] inline void fail_parse(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}

[[noreturn]] inline void fail_refusal(const std::string& message) {
  throw Error(ErrorKind::kRefusal, message);
}

[[noreturn]] inline void fail_io(const std::string& message) {
  throw Error(ErrorKind::kIo, message);
}

}  // namespace majnet
