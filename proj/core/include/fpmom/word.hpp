#ifndef FPMOM_WORD_HPP_
#define FPMOM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fpmom {

// One signed generator g_i or g_i^{-1}, i >= 1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign)
      : code_(sign < 0 ? -generator : generator) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int generator() const { return code_ < 0 ? -code_ : code_; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  // Orders by generator index, then g_i before g_i^{-1}.
  constexpr std::uint32_t order_key() const {
    return static_cast<std::uint32_t>(generator()) * 2u + (code_ < 0 ? 1u : 0u);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }

 private:
  std::int32_t code_ = 1;
};

// A reduced word in the free group of the given rank. Every constructor
// reduces, so two Words are equal as group elements iff they compare equal.
class Word {
 public:
  // The identity of F_rank.
  explicit Word(int rank = 1);

  // Freely reduces `letters`. Throws std::out_of_range when a generator index
  // lies outside [1, rank].
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  // Shortlex: length first, then letters by Letter ordering.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  int rank_;
  std::vector<Letter> letters_;
};

// Reduced product; throws RankMismatch.
Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }
inline Word invert(const Word& w) { return w.inverse(); }

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Number of reduced words of length n in F_rank: 1 for n = 0, otherwise
// 2N (2N-1)^{n-1}.
mpz_class reduced_word_count(int rank, unsigned n);

// All reduced words of length n in shortlex order.
std::vector<Word> enumerate_words(int rank, unsigned n);

enum class WordSyntax {
  kAuto,     // compact when rank <= 26, else indexed
  kCompact,  // "abAB"
  kIndexed,  // "g1 g2 G1 G2"
};

// Grammar: compact form uses the i-th lowercase letter for g_i and the
// uppercase letter for its inverse; indexed form uses whitespace-separated
// tokens g<i> / G<i>. "e" or the empty string is the identity. Input
// containing a digit is read as indexed form. The result is reduced.
Word parse_word(std::string_view text, int rank);

// Inverse of parse_word. The identity prints as "e"; a bare g5 prints in
// indexed form since the compact "e" is reserved for the identity.
std::string format_word(const Word& w, WordSyntax syntax = WordSyntax::kAuto);

}  // namespace fpmom

#endif  // FPMOM_WORD_HPP_
