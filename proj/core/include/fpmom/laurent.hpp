#ifndef FPMOM_LAURENT_HPP_
#define FPMOM_LAURENT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace fpmom {

// Finite integer combination of powers h^k, k in Z: an element of Z[F_1].
// Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, mpz_class>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Terms terms);

  static LaurentPolynomial monomial(Exponent k, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(Exponent k) const;

  // Adds c to the coefficient of h^k.
  void add_term(Exponent k, const mpz_class& c);

  // Multiplication by h^d.
  LaurentPolynomial shifted(Exponent d) const;
  bool is_symmetric() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // "h^-1 + 28 + h" style, ascending exponents; "0" for the zero polynomial.
  std::string to_string() const;
  // Semicolon-separated exp:coeff pairs, ascending; empty for zero.
  std::string to_pairs() const;
  static LaurentPolynomial from_pairs(const std::string& text);

 private:
  Terms terms_;
};

}  // namespace fpmom

#endif  // FPMOM_LAURENT_HPP_
