#include "zc/word.hpp"

#include <set>
#include <stdexcept>

namespace zc {

Word Word::from_letters(const std::vector<int>& letters) {
  if (letters.size() > kMaxLetters) throw std::invalid_argument("word too long");
  Word w;
  for (int l : letters) {
    if (l != 0 && l != 1) throw std::invalid_argument("letters must be 0 or 1");
    w = w.append(l);
  }
  return w;
}

Word Word::from_string(const std::string& text) {
  if (text.size() > kMaxLetters) throw std::invalid_argument("word too long: '" + text + "'");
  Word w;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("word must consist of 0/1 characters: '" + text + "'");
    }
    w = w.append(ch - '0');
  }
  return w;
}

Word Word::append(int l) const {
  if (len_ >= kMaxLetters) throw std::invalid_argument("word too long");
  return Word(bits_ | (static_cast<uint32_t>(l & 1) << len_), static_cast<uint8_t>(len_ + 1));
}

Word Word::prepend(int l) const {
  if (len_ >= kMaxLetters) throw std::invalid_argument("word too long");
  return Word((bits_ << 1) | static_cast<uint32_t>(l & 1), static_cast<uint8_t>(len_ + 1));
}

Word Word::suffix(int from) const {
  if (from < 0 || from > len_) throw std::out_of_range("suffix start out of range");
  return Word(bits_ >> from, static_cast<uint8_t>(len_ - from));
}

std::string Word::str() const {
  std::string s;
  s.reserve(len_);
  for (int i = 0; i < len_; ++i) s.push_back(static_cast<char>('0' + letter(i)));
  return s;
}

bool operator<(const Word& a, const Word& b) {
  int n = a.size() < b.size() ? a.size() : b.size();
  for (int i = 0; i < n; ++i) {
    int la = a.letter(i), lb = b.letter(i);
    if (la != lb) return la < lb;
  }
  return a.size() < b.size();
}

Word dual(const Word& w) {
  Word d;
  for (int i = w.size() - 1; i >= 0; --i) d = d.append(1 - w.letter(i));
  return d;
}

Word canonical_rep(const Word& w) {
  Word d = dual(w);
  return d < w ? d : w;
}

std::vector<Word> enumerate_admissible(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  if (n == 0) return {Word()};
  if (n == 1) return {};
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(1) << (n - 2));
  const uint32_t count = static_cast<uint32_t>(1) << (n - 2);
  for (uint32_t m = 0; m < count; ++m) {
    Word w = Word().append(1);
    // Most significant interior bit first keeps the output lexicographic.
    for (int j = n - 3; j >= 0; --j) w = w.append(static_cast<int>((m >> j) & 1));
    w = w.append(0);
    out.push_back(w);
  }
  return out;
}

long duality_class_count(int n) {
  std::set<uint64_t> reps;
  for (const Word& w : enumerate_admissible(n)) reps.insert(canonical_rep(w).key());
  return static_cast<long>(reps.size());
}

int admissible_position(const Word& w) {
  if (!w.admissible() || w.empty()) throw std::invalid_argument("not a nonempty admissible word");
  const int n = w.size();
  int pos = 0;
  for (int j = 1; j <= n - 2; ++j) pos = (pos << 1) | w.letter(j);
  return pos;
}

int Index::weight() const {
  int s = 0;
  for (int k : parts) s += k;
  return s;
}

bool Index::admissible() const {
  if (parts.empty()) return false;
  for (int k : parts) {
    if (k < 1) return false;
  }
  return parts.back() >= 2;
}

std::string Index::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

Index Index::from_string(const std::string& text) {
  Index idx;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed index '" + text + "'");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed index '" + text + "'");
    }
    if (used != tok.size() || v <= 0) throw std::invalid_argument("malformed index '" + text + "'");
    idx.parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return idx;
}

Word index_to_word(const Index& idx) {
  if (!idx.admissible()) {
    throw std::invalid_argument("inadmissible index (" + idx.str() +
                                "): need r >= 1, parts >= 1, last part >= 2");
  }
  Word w;
  for (int k : idx.parts) {
    w = w.append(1);
    for (int i = 1; i < k; ++i) w = w.append(0);
  }
  return w;
}

Index word_to_index(const Word& w) {
  if (w.empty() || !w.admissible()) {
    throw std::invalid_argument("word '" + w.str() + "' is not a nonempty admissible word");
  }
  Index idx;
  int i = 0;
  while (i < w.size()) {
    // Each part starts at a 1 and swallows the run of 0s after it.
    int k = 1;
    ++i;
    while (i < w.size() && w.letter(i) == 0) {
      ++k;
      ++i;
    }
    idx.parts.push_back(k);
  }
  return idx;
}

Index dual(const Index& idx) { return word_to_index(dual(index_to_word(idx))); }

}  // namespace zc
