#pragma once

#include <stdexcept>
#include <string>

namespace tvalue {

enum class ErrorKind {
  invalid_index,    // empty index or nonpositive part
  divergent,        // series does not converge (non-admissible index, pFq condition)
  domain,           // argument outside the supported domain
  pole,             // parameter sits on a pole of a Gamma / Pochhammer quotient
  shape,            // mismatched truncation caps or lengths
  non_invertible,   // series with zero constant term
  out_of_range,     // coefficient requested beyond the truncation cap
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tvalue
