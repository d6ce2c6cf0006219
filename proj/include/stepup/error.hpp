#pragma once

#include <stdexcept>
#include <string>

namespace stepup {

// Failure kinds surfaced by the library. The CLI maps these onto exit codes.
enum class Errc {
  equal_vertices,
  too_short,
  not_sorted,
  wrong_arity,
  empty_profile,
  equal_arguments,
  out_of_range,
  bad_arity,
  domain_too_small,
  width_mismatch,
  too_large,
  insufficient_maxima,
  bad_parameters,
  boundary_element,
  not_in_layer,
  not_monotone,
  insufficient_size,
  internal_inconsistency,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }

  // Layer level for insufficient_maxima, -1 otherwise.
  int detail() const noexcept { return detail_; }

 private:
  Errc code_;
  int detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what,
                              int detail = -1) {
  throw Error(code, what, detail);
}

}  // namespace stepup
