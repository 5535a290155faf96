#ifndef GLYPHNET_ERROR_HPP
#define GLYPHNET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace glyphnet {

/// Failure categories raised across the library. Each operation documents
/// which of these it may throw.
enum class ErrorKind {
  EmptyImage,
  IndivisibleSize,
  CellCountMismatch,
  DimensionMismatch,
  EmptyDataset,
  InvalidEpsilon,
  InvalidArgument,
  UnknownLetter,
  MissingLetter,
  WrongRowCount,
  MalformedHeader,
  TruncatedData,
  UnsupportedMaxval,
  RaggedRows,
  InvalidCharacter,
  EmptyInput,
  BadMagic,
  ShapeMismatch,
  NonFiniteValue,
  WrongArity,
  InvalidBit,
  InvalidLabel,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace glyphnet

#endif  // GLYPHNET_ERROR_HPP
