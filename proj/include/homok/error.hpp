#pragma once

#include <stdexcept>
#include <string>

namespace homok {

enum class Errc {
  parse = 1,
  invalid_argument,
  cap_exceeded,
  not_stabilized,
  overflow,
  compute,
  io,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace homok
