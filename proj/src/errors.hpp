#pragma once

#include <stdexcept>
#include <string>

namespace zs {

enum class Errc {
  invalid_argument = 1,
  not_farey = 2,
  duplicate = 3,
  parse = 4,
  domain = 5,
  no_convergence = 6,
  overflow = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::string field = {}, long line = 0)
      : std::runtime_error(what), code_(code), field_(std::move(field)), line_(line) {}
  Errc code() const { return code_; }
  const std::string& field() const { return field_; }
  long line() const { return line_; }

 private:
  Errc code_;
  std::string field_;
  long line_;
};

}  // namespace zs
