#pragma once

#include <stdexcept>
#include <string>

namespace qpa {

enum class Errc {
  InversionOfZero,
  OrderLimitExceeded,
  NotExactFactorization,
  CompatibilityFailure,
  NoAntipode,
  NotSplitExtension,
  IncompatibleCocycles,
  NotAbelian,
  NotBicharacter,
  NotClosed,
  NotCoideal,
  NotRightCoideal,
  EigenvalueOutsideCyclotomic,
  MagicRelationFailure,
  RelationFailure,
  GenerationFailure,
  PreconditionViolated,
  StructureMismatch,
  ConditionFails,
  InvalidCocycle,
  NotHopfSurjection,
  ParseError,
  InternalError,
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

}  // namespace qpa
