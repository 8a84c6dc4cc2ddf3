#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcgcoh {

struct Letter {
  std::size_t generator = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group as a literal sequence of letters. No free
/// reduction is ever performed.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(std::size_t index, bool inverse = false) {
    return Word({Letter{index, inverse}});
  }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  Word& operator*=(const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);
Word concat(const Word& w1, const Word& w2);
inline Word operator*(Word a, const Word& b) { return a *= b; }
/// w repeated `times` times.
Word power(const Word& w, std::size_t times);

/// Parses whitespace-separated `name` / `name^-1` tokens.
Word parse_word(std::string_view text, std::span<const std::string> generators);
std::string to_string(const Word& w, std::span<const std::string> generators);

class Presentation {
 public:
  Presentation() = default;
  /// Validates names (distinct, nonempty, no whitespace or '^') and relators.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// index_of that throws UnknownGenerator.
  std::size_t require(std::string_view name) const;

  Word word(std::string_view text) const { return parse_word(text, generators_); }

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// First non-comment line: generator names. Each later non-blank line: one
/// relator. '#' starts a comment anywhere on a line.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation; `annotations`, when given, are written as
/// trailing comments on the relator lines.
std::string format_presentation(const Presentation& p,
                                std::span<const std::string> annotations = {});

}  // namespace mcgcoh
