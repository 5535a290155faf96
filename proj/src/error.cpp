#include "glyphnet/error.hpp"

namespace glyphnet {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::IndivisibleSize: return "IndivisibleSize";
    case ErrorKind::CellCountMismatch: return "CellCountMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::MissingLetter: return "MissingLetter";
    case ErrorKind::WrongRowCount: return "WrongRowCount";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedData: return "TruncatedData";
    case ErrorKind::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::InvalidBit: return "InvalidBit";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace glyphnet
