#include "fpmom/ring.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "fpmom/error.hpp"

namespace fpmom {

namespace {

using Accumulator = std::unordered_map<Word, mpz_class, WordHash>;

std::vector<RingElement::Term> collect(Accumulator&& acc) {
  std::vector<RingElement::Term> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) {
    if (c != 0) out.emplace_back(w, std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void check_rank(const RingElement& x, const RingElement& y) {
  if (x.rank() != y.rank()) throw RankMismatch(x.rank(), y.rank());
}

// Number of reduced words of length <= n.
mpz_class ball_size(int rank, std::size_t n) {
  mpz_class total = 0;
  for (std::size_t m = 0; m <= n; ++m) total += reduced_word_count(rank, static_cast<unsigned>(m));
  return total;
}

void enforce_cap(const mpz_class& projected, std::uint64_t cap, const char* what) {
  if (projected > mpz_class(std::to_string(cap))) {
    throw ResourceLimitError(std::string(what) + ": projected support " + projected.get_str() +
                             " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

RingElement::RingElement(int rank, std::vector<Term> terms) : rank_(rank) {
  Accumulator acc;
  acc.reserve(terms.size());
  for (auto& [w, c] : terms) {
    if (w.rank() != rank) throw RankMismatch(rank, w.rank());
    acc[std::move(w)] += c;
  }
  terms_ = collect(std::move(acc));
}

RingElement RingElement::adopt_canonical(int rank, std::vector<Term> terms) {
  RingElement x(rank);
  x.terms_ = std::move(terms);
  return x;
}

RingElement RingElement::identity(int rank) { return from_word(Word(rank)); }

RingElement RingElement::from_word(const Word& w, const mpz_class& c) {
  RingElement x(w.rank());
  if (c != 0) x.terms_.emplace_back(w, c);
  return x;
}

std::size_t RingElement::max_length() const {
  // Shortlex order puts the longest words last.
  return terms_.empty() ? 0 : terms_.back().first.length();
}

RingElement add(const RingElement& x, const RingElement& y) {
  check_rank(x, y);
  std::vector<RingElement::Term> merged;
  merged.reserve(x.support_size() + y.support_size());
  auto a = x.terms().begin();
  auto b = y.terms().begin();
  while (a != x.terms().end() || b != y.terms().end()) {
    if (b == y.terms().end() || (a != x.terms().end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == x.terms().end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return RingElement::adopt_canonical(x.rank(), std::move(merged));
}

RingElement negate(const RingElement& x) { return scale(x, -1); }

RingElement scale(const RingElement& x, const mpz_class& c) {
  std::vector<RingElement::Term> terms;
  if (c != 0) {
    terms.reserve(x.support_size());
    for (const auto& [w, v] : x.terms()) terms.emplace_back(w, v * c);
  }
  return RingElement::adopt_canonical(x.rank(), std::move(terms));
}

RingElement mul(const RingElement& x, const RingElement& y, std::uint64_t support_cap) {
  check_rank(x, y);
  if (x.is_zero() || y.is_zero()) return RingElement(x.rank());
  const mpz_class pairs = mpz_class(static_cast<unsigned long>(x.support_size())) *
                          static_cast<unsigned long>(y.support_size());
  const mpz_class ball = ball_size(x.rank(), x.max_length() + y.max_length());
  enforce_cap(pairs < ball ? pairs : ball, support_cap, "mul");

  Accumulator acc;
  acc.reserve(std::min<std::size_t>(x.support_size() * y.support_size(), support_cap));
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      mpz_addmul(acc[multiply(u, v)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
  }
  return RingElement::adopt_canonical(x.rank(), collect(std::move(acc)));
}

RingElement power(const RingElement& x, unsigned n, std::uint64_t support_cap) {
  RingElement out = RingElement::identity(x.rank());
  for (unsigned i = 0; i < n; ++i) out = mul(out, x, support_cap);
  return out;
}

RingElement build_radial_sum(unsigned n, int rank, std::uint64_t support_cap) {
  enforce_cap(reduced_word_count(rank, n), support_cap, "build_radial_sum");
  std::vector<RingElement::Term> terms;
  for (Word& w : enumerate_words(rank, n)) terms.emplace_back(std::move(w), 1);
  return RingElement(rank, std::move(terms));
}

RingElement generating_operator(int rank) { return build_radial_sum(1, rank); }

mpz_class coefficient(const RingElement& x, const Word& w) {
  auto it = std::lower_bound(x.terms().begin(), x.terms().end(), w,
                             [](const auto& t, const Word& key) { return t.first < key; });
  if (it == x.terms().end() || it->first != w) return 0;
  return it->second;
}

mpz_class trace(const RingElement& x) { return coefficient(x, Word(x.rank())); }

mpz_class evaluate_trivial_rep(const RingElement& x) {
  mpz_class total = 0;
  for (const auto& [w, c] : x.terms()) total += c;
  return total;
}

Hyperword::Hyperword(Word base) : base_(std::move(base)) {
  if (base_.is_identity()) {
    throw DegenerateSubgroupError("subgroup generator h must not be the identity");
  }
  const std::size_t len = base_.length();
  while (2 * (conjugator_length_ + 1) < len &&
         base_[conjugator_length_].cancels(base_[len - 1 - conjugator_length_])) {
    ++conjugator_length_;
  }
  core_length_ = len - 2 * conjugator_length_;
}

Hyperword Hyperword::canonical(int rank) {
  if (rank < 2) {
    throw DegenerateSubgroupError("rank " + std::to_string(rank) +
                                  " has no nontrivial g1..gN g1^-1..gN^-1");
  }
  std::vector<Letter> letters;
  for (int i = 1; i <= rank; ++i) letters.emplace_back(i, 1);
  for (int i = 1; i <= rank; ++i) letters.emplace_back(i, -1);
  return Hyperword(Word::reduce(rank, letters));
}

Word Hyperword::power(std::int64_t k) const {
  const Word step = k < 0 ? base_.inverse() : base_;
  Word out(rank());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, step);
  return out;
}

LaurentPolynomial conditional_expectation(const RingElement& x, const Hyperword& h) {
  if (x.rank() != h.rank()) throw RankMismatch(x.rank(), h.rank());
  LaurentPolynomial out;
  std::map<std::int64_t, std::pair<Word, Word>> powers;
  const std::size_t conj = 2 * h.conjugator_length();
  const std::size_t core = h.core_length();
  for (const auto& [w, c] : x.terms()) {
    if (w.is_identity()) {
      out.add_term(0, c);
      continue;
    }
    // Only one |k| can produce this length.
    if (w.length() <= conj || (w.length() - conj) % core != 0) continue;
    const auto k = static_cast<std::int64_t>((w.length() - conj) / core);
    auto it = powers.find(k);
    if (it == powers.end()) {
      it = powers.emplace(k, std::pair{h.power(k), h.power(-k)}).first;
    }
    if (w == it->second.first) {
      out.add_term(k, c);
    } else if (w == it->second.second) {
      out.add_term(-k, c);
    }
  }
  return out;
}

RingElement embed(const LaurentPolynomial& p, const Hyperword& h) {
  std::vector<RingElement::Term> terms;
  for (const auto& [k, c] : p.terms()) terms.emplace_back(h.power(k), c);
  return RingElement(h.rank(), std::move(terms));
}

std::string to_json(const RingElement& x) {
  nlohmann::ordered_json doc;
  doc["rank"] = x.rank();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"word", format_word(w)}, {"coeff", c.get_str()}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

RingElement ring_element_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int rank = doc.at("rank").get<int>();
    std::vector<RingElement::Term> terms;
    for (const auto& t : doc.at("terms")) {
      terms.emplace_back(parse_word(t.at("word").get<std::string>(), rank),
                         mpz_class(t.at("coeff").get<std::string>()));
    }
    return RingElement(rank, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ring element json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ring element json: ") + e.what());
  }
}

}  // namespace fpmom
