#pragma once

#include <stdexcept>
#include <string>

namespace ropelab {

enum class Errc {
  NonPrimeCharacteristic,
  DivisionByZero,
  FieldMismatch,
  AllZero,
  BoundTooSmall,
  InternalError,
  CodimTooSmall,
  ShapeError,
  RankDeficient,
  GenerationFailed,
  DegenerateRope,
  SizeLimit,
  PreconditionViolated,
  CharMismatch,
  RangeError,
  ParseError,
  NotBlockForm,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ropelab
