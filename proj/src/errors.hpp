#pragma once

#include <stdexcept>
#include <string>

namespace capcone {

// Failure classes surfaced across the library boundary. Plain codes so the
// C wrapper can translate without inspecting exception types.
enum class errc {
  ok = 0,
  invalid_input,
  non_convergence,
  numerical_failure,
  no_zero,
  not_reaching_zero,
  out_of_domain,
  ambiguous_near_lawson,
  condition_failed,
  no_tau,
  wrong_side,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace capcone
