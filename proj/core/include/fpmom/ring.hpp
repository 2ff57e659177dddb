#ifndef FPMOM_RING_HPP_
#define FPMOM_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fpmom/laurent.hpp"
#include "fpmom/word.hpp"

namespace fpmom {

// Largest support any single ring operation may produce.
inline constexpr std::uint64_t kDefaultSupportCap = 100'000'000;

// Finite integer combination of reduced words: an element of Z[F_N].
// Terms are kept sorted in shortlex word order with no zero coefficients.
class RingElement {
 public:
  using Term = std::pair<Word, mpz_class>;

  explicit RingElement(int rank) : rank_(rank) {}
  // Sums duplicate words and drops zeros.
  RingElement(int rank, std::vector<Term> terms);

  static RingElement zero(int rank) { return RingElement(rank); }
  static RingElement identity(int rank);
  static RingElement from_word(const Word& w, const mpz_class& c = 1);

  int rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_length() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  friend RingElement add(const RingElement&, const RingElement&);
  friend RingElement scale(const RingElement&, const mpz_class&);
  friend RingElement mul(const RingElement&, const RingElement&, std::uint64_t);

  // Takes terms that are already sorted, distinct and nonzero.
  static RingElement adopt_canonical(int rank, std::vector<Term> terms);

  int rank_;
  std::vector<Term> terms_;
};

RingElement add(const RingElement& x, const RingElement& y);
RingElement negate(const RingElement& x);
RingElement scale(const RingElement& x, const mpz_class& c);
RingElement mul(const RingElement& x, const RingElement& y,
                std::uint64_t support_cap = kDefaultSupportCap);
// x^0 is the identity. Multiplies by x one factor at a time, which is the
// cheap direction when x has small support (the generating operator).
RingElement power(const RingElement& x, unsigned n,
                  std::uint64_t support_cap = kDefaultSupportCap);

inline RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
inline RingElement operator-(const RingElement& x) { return negate(x); }
inline RingElement operator-(const RingElement& x, const RingElement& y) {
  return add(x, negate(y));
}
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }

// Sum of all reduced words of length n; X_0 = e.
RingElement build_radial_sum(unsigned n, int rank,
                             std::uint64_t support_cap = kDefaultSupportCap);
// G = X_1, the sum of all generators and their inverses.
RingElement generating_operator(int rank);

mpz_class coefficient(const RingElement& x, const Word& w);
// Coefficient of the identity.
mpz_class trace(const RingElement& x);
// The ring map sending every group element to 1.
mpz_class evaluate_trivial_rep(const RingElement& x);

// Generator h of a cyclic subgroup F_1 inside F_N.
class Hyperword {
 public:
  // Throws DegenerateSubgroupError when base is the identity.
  explicit Hyperword(Word base);

  // g_1 ... g_N g_1^{-1} ... g_N^{-1}; rank 2 gives abAB. Rank 1 would give
  // the identity and is rejected.
  static Hyperword canonical(int rank);

  const Word& base() const { return base_; }
  int rank() const { return base_.rank(); }

  // h^k for any integer k.
  Word power(std::int64_t k) const;
  // Reduced length of h^k for k != 0 is conjugator_length * 2 + |k| * core_length.
  std::size_t conjugator_length() const { return conjugator_length_; }
  std::size_t core_length() const { return core_length_; }

 private:
  Word base_;
  std::size_t conjugator_length_ = 0;
  std::size_t core_length_ = 0;
};

// E(x): the coefficients of x on the words h^k, as a polynomial in h.
LaurentPolynomial conditional_expectation(const RingElement& x, const Hyperword& h);
// Sends h^k to the word h^k in Z[F_N].
RingElement embed(const LaurentPolynomial& p, const Hyperword& h);

// {"rank": N, "terms": [{"word": ..., "coeff": "<decimal>"}]} in canonical order.
std::string to_json(const RingElement& x);
RingElement ring_element_from_json(std::string_view text);

}  // namespace fpmom

#endif  // FPMOM_RING_HPP_
