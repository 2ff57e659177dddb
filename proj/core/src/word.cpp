#include "fpmom/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fpmom/error.hpp"

namespace fpmom {

namespace {

void check_letter(int rank, Letter l) {
  if (l.generator() < 1 || l.generator() > rank) {
    throw std::out_of_range("generator index " + std::to_string(l.generator()) +
                            " outside [1, " + std::to_string(rank) + "]");
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
}

Word Word::reduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(rank, l);
    if (!w.letters_.empty() && w.letters_.back().cancels(l)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int rank, int index, int sign) {
  const Letter l(index, sign);
  return reduce(rank, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverse());
  }
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
  }
  return a.rank_ <=> b.rank_;
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  const auto& lu = u.letters();
  const auto& lv = v.letters();
  std::size_t cancel = 0;
  const std::size_t bound = std::min(lu.size(), lv.size());
  while (cancel < bound && lu[lu.size() - 1 - cancel].cancels(lv[cancel])) {
    ++cancel;
  }
  std::vector<Letter> joined;
  joined.reserve(lu.size() + lv.size() - 2 * cancel);
  joined.insert(joined.end(), lu.begin(), lu.end() - static_cast<std::ptrdiff_t>(cancel));
  joined.insert(joined.end(), lv.begin() + static_cast<std::ptrdiff_t>(cancel), lv.end());
  // Both halves are reduced and the junction no longer cancels.
  return Word::reduce(u.rank(), joined);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(w.rank());
  for (Letter l : w.letters()) {
    h ^= static_cast<std::uint32_t>(l.code());
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

mpz_class reduced_word_count(int rank, unsigned n) {
  if (n == 0) return 1;
  mpz_class branch = 2 * rank - 1;
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), branch.get_mpz_t(), n - 1);
  return out * (2 * rank);
}

std::vector<Word> enumerate_words(int rank, unsigned n) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= rank; ++i) {
    alphabet.emplace_back(i, 1);
    alphabet.emplace_back(i, -1);
  }
  std::vector<Word> out;
  std::vector<Letter> prefix;
  prefix.reserve(n);
  // Alphabet is already in Letter order, so depth-first emission is shortlex.
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.push_back(Word::reduce(rank, prefix));
      return;
    }
    for (Letter l : alphabet) {
      if (!prefix.empty() && prefix.back().cancels(l)) continue;
      prefix.push_back(l);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return out;
}

Word parse_word(std::string_view text, int rank) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty() || text == "e") return Word(rank);

  std::vector<Letter> letters;
  const bool indexed = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });

  if (indexed) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && !is_space(text[end])) ++end;
      const std::string_view token = text.substr(pos, end - pos);
      pos = end;
      if (token == "e") continue;
      if (token.size() < 2 || (token[0] != 'g' && token[0] != 'G')) {
        throw ParseError("malformed token '" + std::string(token) + "'");
      }
      long index = 0;
      for (char c : token.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || index > 1'000'000'000L) {
          throw ParseError("malformed token '" + std::string(token) + "'");
        }
        index = index * 10 + (c - '0');
      }
      if (index < 1 || index > rank) {
        throw ParseError("generator '" + std::string(token) + "' beyond rank " +
                         std::to_string(rank));
      }
      letters.emplace_back(static_cast<int>(index), token[0] == 'g' ? 1 : -1);
    }
  } else {
    for (char c : text) {
      int index = 0;
      int sign = 1;
      if (c >= 'a' && c <= 'z') {
        index = c - 'a' + 1;
      } else if (c >= 'A' && c <= 'Z') {
        index = c - 'A' + 1;
        sign = -1;
      } else {
        throw ParseError(std::string("unknown letter '") + c + "'");
      }
      if (index > rank) {
        throw ParseError(std::string("letter '") + c + "' beyond rank " +
                         std::to_string(rank));
      }
      letters.emplace_back(index, sign);
    }
  }
  return Word::reduce(rank, letters);
}

std::string format_word(const Word& w, WordSyntax syntax) {
  if (w.is_identity()) return "e";
  if (syntax == WordSyntax::kAuto) {
    syntax = w.rank() <= 26 ? WordSyntax::kCompact : WordSyntax::kIndexed;
  }
  if (syntax == WordSyntax::kCompact && w.length() == 1 && w[0] == Letter(5, 1)) {
    syntax = WordSyntax::kIndexed;
  }
  std::string out;
  if (syntax == WordSyntax::kCompact) {
    if (w.rank() > 26) {
      throw std::invalid_argument("compact word syntax needs rank <= 26");
    }
    out.reserve(w.length());
    for (Letter l : w.letters()) {
      const char base = l.sign() > 0 ? 'a' : 'A';
      out.push_back(static_cast<char>(base + l.generator() - 1));
    }
    return out;
  }
  for (Letter l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(l.sign() > 0 ? 'g' : 'G');
    out += std::to_string(l.generator());
  }
  return out;
}

}  // namespace fpmom
