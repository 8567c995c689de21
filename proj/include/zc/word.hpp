#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zc {

/// A binary word of integration letters. Letter 0 of the word is the
/// innermost integration variable's form, the last letter the outermost.
/// Letter 1 stands for the form with the pole at 1, letter 0 for dt/t.
///
/// Admissible words start with 1 and end with 0 (the empty word counts as
/// admissible: it is the unit of the shuffle algebra). Weight = length.
class Word {
 public:
  static constexpr int kMaxLetters = 31;

  Word() = default;

  static Word from_letters(const std::vector<int>& letters);
  static Word from_string(const std::string& text);  // e.g. "11010"

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  int letter(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  bool admissible() const {
    if (len_ == 0) return true;
    return len_ >= 2 && letter(0) == 1 && letter(len_ - 1) == 0;
  }

  /// New word with `l` appended as the outermost letter.
  Word append(int l) const;
  /// New word with `l` prepended as the innermost letter.
  Word prepend(int l) const;
  /// Suffix starting at position `from` (letters from..size-1).
  Word suffix(int from) const;

  std::string str() const;

  uint64_t key() const { return (static_cast<uint64_t>(len_) << 32) | bits_; }

  friend bool operator==(const Word& a, const Word& b) { return a.key() == b.key(); }
  friend bool operator!=(const Word& a, const Word& b) { return a.key() != b.key(); }
  /// Lexicographic with 0 < 1; a proper prefix sorts before its extensions.
  friend bool operator<(const Word& a, const Word& b);

 private:
  Word(uint32_t bits, uint8_t len) : bits_(bits), len_(len) {}

  uint32_t bits_ = 0;
  uint8_t len_ = 0;
};

/// Reversed complement (1-e_k, ..., 1-e_1); an involution that preserves
/// weight and admissibility.
Word dual(const Word& w);

/// Lexicographic minimum of {w, dual(w)}; constant on duality classes.
Word canonical_rep(const Word& w);

/// All admissible words of weight n in ascending lexicographic order.
/// Count: 1 for n = 0, 0 for n = 1, 2^(n-2) for n >= 2.
std::vector<Word> enumerate_admissible(int n);

/// Number of duality classes among admissible words of weight n.
long duality_class_count(int n);

/// Position of an admissible word inside enumerate_admissible(its weight).
int admissible_position(const Word& w);

/// A composition (k_1, ..., k_r); admissible iff nonempty, all parts >= 1
/// and the last part >= 2.
struct Index {
  std::vector<int> parts;

  Index() = default;
  explicit Index(std::vector<int> p) : parts(std::move(p)) {}

  int weight() const;
  bool admissible() const;
  std::string str() const;  // "1,1,3"
  static Index from_string(const std::string& text);

  friend bool operator==(const Index& a, const Index& b) { return a.parts == b.parts; }
};

/// (k_1,...,k_r) -> 1 0^(k_1-1) ... 1 0^(k_r-1). Throws on inadmissible input.
Word index_to_word(const Index& idx);

/// Exact inverse of index_to_word. Throws unless the word is admissible and
/// nonempty.
Index word_to_index(const Word& w);

Index dual(const Index& idx);

}  // namespace zc
