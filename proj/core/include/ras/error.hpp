#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ras {

enum class ErrorCode {
  // universes and subsets
  EmptyUniverse,
  DuplicateLabel,
  UnknownElement,
  UniverseMismatch,
  // partitions / spaces
  EmptyBlock,
  Overlap,
  Incomplete,
  // tables
  EmptyCarrier,
  MissingEntry,
  ExtraEntry,
  UnknownResultLabel,
  NotInCarrier,
  CarrierNotFull,
  EmptySubset,
  // mappings
  MissingPair,
  DuplicatePair,
  UnknownCodomainLabel,
  CarrierMismatch,
  DomainNotUpper,
  DomainMismatch,
  EmptySet,
  // enumeration
  SizeOutOfRange,
  InvalidSearchSpec,
  UnknownRelation,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

/// Every validation failure in the library is reported with one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ras
