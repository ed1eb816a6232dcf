#include "nonevade/error.hpp"

namespace nonevade {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoUniqueBottom: return "NoUniqueBottom";
    case ErrorCode::NoUniqueTop: return "NoUniqueTop";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAnAtom: return "NotAnAtom";
    case ErrorCode::NotACoatom: return "NotACoatom";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EmptyLink: return "EmptyLink";
    case ErrorCode::LastVertex: return "LastVertex";
    case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NotFreePair: return "NotFreePair";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
    case ErrorCode::ElementOnBoundary: return "ElementOnBoundary";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string describe_not_a_lattice(const std::string& u, const std::string& v,
                                   const std::vector<std::string>& witnesses,
                                   bool missing_join) {
  std::string msg = "NotALattice(" + u + ", " + v + ", {";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (i) msg += ",";
    msg += witnesses[i];
  }
  msg += "}): no unique ";
  msg += missing_join ? "least upper bound" : "greatest lower bound";
  return msg;
}

}  // namespace

NotALatticeError::NotALatticeError(std::string u, std::string v,
                                   std::vector<std::string> witnesses, bool missing_join)
    : Error(ErrorCode::NotALattice, describe_not_a_lattice(u, v, witnesses, missing_join)),
      u_(std::move(u)),
      v_(std::move(v)),
      witnesses_(std::move(witnesses)),
      missing_join_(missing_join) {}

std::string_view free_pair_failure_name(FreePairFailure reason) {
  switch (reason) {
    case FreePairFailure::NotAFace: return "not-a-face";
    case FreePairFailure::MultipleCofaces: return "multiple-cofaces";
    case FreePairFailure::WrongCoface: return "wrong-coface";
  }
  return "unknown";
}

NotFreePairError::NotFreePairError(std::size_t index, FreePairFailure reason)
    : Error(ErrorCode::NotFreePair, "NotFreePair at step " + std::to_string(index) + " (" +
                                        std::string(free_pair_failure_name(reason)) + ")"),
      index_(index),
      reason_(reason) {}

}  // namespace nonevade
