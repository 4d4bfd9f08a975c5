#pragma once

#include <stdexcept>
#include <string>

namespace linmap {

enum class Errc {
  NonPrime,
  NotPrimePower,
  TooLarge,
  ZeroModulus,
  DimensionMismatch,
  NotCoprime,
  NotCoprimeToX,
  NonIntegralCount,
  NotAProduct,
  NotNilpotent,
  ParseError,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace linmap
