#pragma once

#include <stdexcept>
#include <string>

namespace qle {

// Error classes shared by all modules. Messages are prefixed with the module
// that raised them so callers can report where a failure came from.
enum class errc {
  invalid_argument,  // bad parameter, malformed input, precondition violated
  io,                // filesystem and parse failures
  numeric,           // a computation left its validated domain
  size_cap,          // desk-scale limits exceeded
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace qle
