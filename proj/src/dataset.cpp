#include "glyphnet/letters.hpp"

#include "glyphnet/dataset.hpp"
#include "glyphnet/error.hpp"

namespace glyphnet {

Letter Letter::from_char(char c) {
  if (c < 'a' || c > 'z') {
    throw Error(ErrorKind::UnknownLetter, std::string("not a lowercase letter: '") + c + "'");
  }
  return Letter(static_cast<std::size_t>(c - 'a'));
}

Letter Letter::from_index(std::size_t index) {
  if (index >= kLetterCount) {
    throw Error(ErrorKind::UnknownLetter, "letter index out of range: " + std::to_string(index));
  }
  return Letter(index);
}

std::string_view to_string(Split s) noexcept { return s == Split::Train ? "train" : "test"; }

Split parse_split(std::string_view text) {
  if (text == "train") return Split::Train;
  if (text == "test") return Split::Test;
  throw Error(ErrorKind::InvalidArgument, "unknown split '" + std::string(text) + "'");
}

std::string CorpusSample::relative_path() const {
  return label.str() + "/" + std::string(to_string(split)) + "_" + std::to_string(index) + ".pgm";
}

}  // namespace glyphnet
