#ifndef GLYPHNET_LETTERS_HPP
#define GLYPHNET_LETTERS_HPP

#include <cstddef>
#include <string>

namespace glyphnet {

inline constexpr std::size_t kLetterCount = 26;

/// One of the lowercase letters a-z, stored as its alphabet index.
class Letter {
 public:
  constexpr Letter() = default;

  /// Throws UnknownLetter outside a-z.
  static Letter from_char(char c);
  /// Throws UnknownLetter when index >= 26.
  static Letter from_index(std::size_t index);

  constexpr std::size_t index() const noexcept { return index_; }
  constexpr char to_char() const noexcept { return static_cast<char>('a' + index_); }
  std::string str() const { return std::string(1, to_char()); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::size_t index) : index_(index) {}
  std::size_t index_ = 0;
};

}  // namespace glyphnet

#endif  // GLYPHNET_LETTERS_HPP
