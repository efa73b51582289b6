#include "mvw/words.hpp"

#include <algorithm>

namespace mvw {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.size() > static_cast<std::size_t>(limits::max_alphabet)) {
    throw Error(ErrorKind::format_error,
                "alphabet has " + std::to_string(letters_.size()) +
                    " letters, cap is " + std::to_string(limits::max_alphabet));
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    for (std::size_t j = i + 1; j < letters_.size(); ++j) {
      if (letters_[i] == letters_[j]) {
        throw Error(ErrorKind::format_error,
                    std::string("duplicate letter '") + letters_[i] +
                        "' in alphabet");
      }
    }
  }
}

char Alphabet::display(Letter a) const {
  if (a < 0 || a >= size()) {
    throw Error(ErrorKind::range_error,
                "letter index " + std::to_string(a) + " out of range");
  }
  return letters_[static_cast<std::size_t>(a)];
}

std::optional<Letter> Alphabet::index_of(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Word word_from_string(const Alphabet& alphabet, std::string_view text) {
  if (text == "1") return {};
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto idx = alphabet.index_of(c);
    if (!idx) {
      throw Error(ErrorKind::format_error,
                  std::string("letter '") + c + "' not in alphabet \"" +
                      alphabet.letters() + "\"");
    }
    w.push_back(*idx);
  }
  return w;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (Letter a : w) s.push_back(alphabet.display(a));
  return s;
}

std::uint32_t content(const Word& w) { return content(w, 0, w.size()); }

std::uint32_t content(const Word& w, std::size_t begin, std::size_t end) {
  std::uint32_t mask = 0;
  for (std::size_t i = begin; i < end; ++i) mask |= 1u << w[i];
  return mask;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word repeat(const Word& w, int times) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(std::max(times, 0)));
  for (int i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::pair<Word, Word> split_first(const Word& w, Letter a) {
  auto it = std::find(w.begin(), w.end(), a);
  if (it == w.end()) {
    throw Error(ErrorKind::letter_absent,
                "letter " + std::to_string(a) + " does not occur in the word");
  }
  return {Word(w.begin(), it), Word(it + 1, w.end())};
}

std::pair<Word, Word> split_last(const Word& w, Letter a) {
  auto it = std::find(w.rbegin(), w.rend(), a);
  if (it == w.rend()) {
    throw Error(ErrorKind::letter_absent,
                "letter " + std::to_string(a) + " does not occur in the word");
  }
  auto pos = w.rend() - it - 1;
  return {Word(w.begin(), w.begin() + pos), Word(w.begin() + pos + 1, w.end())};
}

}  // namespace mvw
