#pragma once

#include <stdexcept>
#include <string>

namespace cladder {

// Error categories, aligned with the CLI exit codes.
enum class errc {
  usage = 2,     // bad flags / bad arguments
  schema = 3,    // malformed or mismatched input files
  capacity = 4,  // configured size limits exceeded
  domain = 5,    // math-domain failures (non-interval-decomposable input, ...)
  internal = 70,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) { throw error(errc::usage, msg); }
[[noreturn]] inline void throw_schema(const std::string& msg) { throw error(errc::schema, msg); }
[[noreturn]] inline void throw_capacity(const std::string& msg) { throw error(errc::capacity, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw error(errc::domain, msg); }

}  // namespace cladder
