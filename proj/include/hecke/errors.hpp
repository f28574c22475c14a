#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class Errc {
  NonCartan,
  InfiniteType,
  NoIntegralLift,
  BadPartition,
  GroupTooLarge,
  NotDominantOrAntiDominant,
  NotInLattice,
  ExtensionRequired,
  NotDominant,
  InconsistentOracle,
  CorootNotContained,
  SearchSpaceTooLarge,
  IncompatibleWeights,
  IdentityFailed,
  InvalidParameter,
  NotSimplyConnected,
  WindowViolated,
  SchemaError,
  InternalCheckFailed,
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

}  // namespace hecke
