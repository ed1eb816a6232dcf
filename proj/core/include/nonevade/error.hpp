#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonevade {

enum class ErrorCode {
  ParseError,
  InvalidLabel,
  InvalidOrder,
  CycleDetected,
  NoUniqueBottom,
  NoUniqueTop,
  NotALattice,
  UnknownElement,
  NotComparable,
  NotAnAtom,
  NotACoatom,
  UnknownFamily,
  ParamOutOfRange,
  EmptyInterior,
  UnknownVertex,
  EmptyLink,
  LastVertex,
  ComplexTooLarge,
  InvalidComplex,
  NotFreePair,
  ReplayMismatch,
  ElementOnBoundary,
  InternalAssertion,
  TraceMismatch,
  VerificationFailed,
  GroundMismatch,
  CapExceeded,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

// Base of every error the library throws. `code()` is stable and appears in
// the CLI's machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Some pair of elements has no unique greatest lower bound or least upper
// bound; `witnesses` are the competing maximal lower (or minimal upper) bounds.
class NotALatticeError : public Error {
 public:
  NotALatticeError(std::string u, std::string v, std::vector<std::string> witnesses,
                   bool missing_join);

  const std::string& first() const noexcept { return u_; }
  const std::string& second() const noexcept { return v_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }
  bool missing_join() const noexcept { return missing_join_; }

 private:
  std::string u_;
  std::string v_;
  std::vector<std::string> witnesses_;
  bool missing_join_;
};

enum class FreePairFailure { NotAFace, MultipleCofaces, WrongCoface };

std::string_view free_pair_failure_name(FreePairFailure reason);

class NotFreePairError : public Error {
 public:
  NotFreePairError(std::size_t index, FreePairFailure reason);

  std::size_t index() const noexcept { return index_; }
  FreePairFailure reason() const noexcept { return reason_; }

 private:
  std::size_t index_;
  FreePairFailure reason_;
};

}  // namespace nonevade
