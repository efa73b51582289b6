#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvw/errors.hpp"
#include "mvw/limits.hpp"

namespace mvw {

using Letter = int;

/// A word is a sequence of alphabet indices; the empty vector is the empty
/// word, written "1" in display form.
using Word = std::vector<Letter>;

/// An ordered set of distinct display characters; letters are referred to by
/// their index. At most limits::max_alphabet letters so that contents fit in
/// a 32-bit mask.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  int size() const { return static_cast<int>(letters_.size()); }
  char display(Letter a) const;
  std::optional<Letter> index_of(char c) const;
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

/// Parses a word over the given alphabet. "1" denotes the empty word.
Word word_from_string(const Alphabet& alphabet, std::string_view text);
std::string word_to_string(const Alphabet& alphabet, const Word& w);

/// Letter-set of a word (or of the slice [begin, end)) as a bitmask.
std::uint32_t content(const Word& w);
std::uint32_t content(const Word& w, std::size_t begin, std::size_t end);

inline bool contains_letter(std::uint32_t mask, Letter a) {
  return (mask >> a) & 1u;
}

Word reversed(const Word& w);
Word concat(const Word& u, const Word& v);
Word repeat(const Word& w, int times);

/// The unique factorization w = prefix . a . suffix with a not occurring in
/// the prefix. Throws letter_absent if a does not occur at all.
std::pair<Word, Word> split_first(const Word& w, Letter a);
/// Dual: a does not occur in the suffix.
std::pair<Word, Word> split_last(const Word& w, Letter a);

}  // namespace mvw
