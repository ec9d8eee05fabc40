#include "ras/error.hpp"

namespace ras {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::ExtraEntry: return "ExtraEntry";
    case ErrorCode::UnknownResultLabel: return "UnknownResultLabel";
    case ErrorCode::NotInCarrier: return "NotInCarrier";
    case ErrorCode::CarrierNotFull: return "CarrierNotFull";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::UnknownCodomainLabel: return "UnknownCodomainLabel";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::DomainNotUpper: return "DomainNotUpper";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::InvalidSearchSpec: return "InvalidSearchSpec";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace ras
