#pragma once

#include <stdexcept>
#include <string>

namespace lojax {

/// Error taxonomy. Internal errors indicate invariant breaches (bugs), never
/// expected outcomes; the others map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Code {
    InvalidInput,        // malformed input, precondition violation by caller
    NotFiniteColength,   // a convenient Newton polyhedron was required
    LimitExceeded,       // dimension cap, sigma stabilization cap
    NotApplicable,       // requested result does not exist for this input
    Internal,            // invariant breach; a bug, never rounded over
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(Error::Code::InvalidInput, what);
}
[[noreturn]] inline void throw_not_finite_colength(const std::string& what) {
  throw Error(Error::Code::NotFiniteColength, what);
}
[[noreturn]] inline void throw_limit(const std::string& what) {
  throw Error(Error::Code::LimitExceeded, what);
}
[[noreturn]] inline void throw_not_applicable(const std::string& what) {
  throw Error(Error::Code::NotApplicable, what);
}
[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(Error::Code::Internal, "internal error: " + what);
}

/// Always-on invariant check; exactness makes these cheap relative to the
/// surrounding arithmetic, so they are not compiled out in release builds.
inline void check_internal(bool cond, const char* what) {
  if (!cond) throw_internal(what);
}

}  // namespace lojax
