#pragma once

#include <stdexcept>
#include <string>

namespace jaccomb {

// Failure categories surfaced by the library.  The CLI maps not_general to
// exit code 1 (negative verdict) and everything else to exit code 2.
enum class errc {
  invalid_input,     // malformed JSON, bad matrix, parse failure
  invalid_subcurve,  // empty or full mask where a proper subcurve is required
  degree_mismatch,   // |d| != |q| (or |d1| != |d2|)
  missing_points,    // separating-point query without point records
  dagger_violation,  // a separating point record with more than two incidences
  not_general,       // operation requires a general polarization
  limit_exceeded,    // gamma or enumeration size beyond the supported scale
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace jaccomb
