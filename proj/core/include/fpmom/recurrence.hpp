#ifndef FPMOM_RECURRENCE_HPP_
#define FPMOM_RECURRENCE_HPP_

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fpmom/laurent.hpp"

namespace fpmom {

// G^n written in the radial basis: G^n = sum_m coeff(m) X_m, where X_m is the
// sum of all reduced words of length m. Only m <= n with m = n (mod 2) can be
// nonzero, and coeff(n) = 1. For even n the coefficients are the p-symbols of
// the recurrence diagram, for odd n the q-symbols.
class XDecomposition {
 public:
  // G itself: {1: 1}. Throws std::invalid_argument for rank < 1.
  static XDecomposition initial(int rank);

  int rank() const { return rank_; }
  unsigned power() const { return power_; }
  mpz_class coefficient(unsigned m) const;
  // Nonzero (m, coeff) pairs, descending m.
  std::vector<std::pair<unsigned, mpz_class>> terms() const;

  // sum_m coeff(m) |X_m|; equals (2N)^n for a valid decomposition.
  mpz_class mass() const;

  // Multiplication by X_1 using X_1 X_0 = X_1, X_1 X_1 = X_2 + 2N e and
  // X_1 X_m = X_{m+1} + (2N-1) X_{m-1} for m >= 2.
  XDecomposition step() const;

  friend bool operator==(const XDecomposition&, const XDecomposition&) = default;

 private:
  XDecomposition(int rank, unsigned power, std::vector<mpz_class> coeffs)
      : rank_(rank), power_(power), coeffs_(std::move(coeffs)) {}

  int rank_;
  unsigned power_;
  std::vector<mpz_class> coeffs_;  // dense, index m in [0, power]
};

// initial() stepped n - 1 times. n >= 1.
XDecomposition decomposition_of(unsigned n, int rank);

// tau(G^n): 0 for odd n, the X_0 coefficient for even n.
mpz_class scalar_moment(unsigned n, int rank);
mpz_class scalar_moment(const XDecomposition& d);

// E(G^n) onto the subgroup generated by h = g1..gN g1^-1..gN^-1, whose
// powers h^{+-k} are words of length 2N k. Each X_m with 2N | m, m > 0
// contributes coeff(m) (h^{m/2N} + h^{-m/2N}); X_0 contributes coeff(0) h^0.
// Throws DegenerateSubgroupError for rank < 2.
LaurentPolynomial amalgamated_moment(unsigned n, int rank);
LaurentPolynomial amalgamated_moment(const XDecomposition& d);

enum class PqKind { kP, kQ };

struct PqEntry {
  unsigned n;  // power of G
  unsigned m;  // index of X_m, m < n
  PqKind kind;
  mpz_class value;

  friend bool operator==(const PqEntry&, const PqEntry&) = default;
};

// Every p_m^n (even n) and q_m^n (odd n) with n <= max_n, i.e. all
// sub-leading coefficients of G^2 .. G^{max_n}.
class PqTable {
 public:
  // Throws std::invalid_argument when max_n < 2.
  PqTable(unsigned max_n, int rank);

  int rank() const { return rank_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()); }
  const std::vector<PqEntry>& entries() const { return entries_; }
  const XDecomposition& row(unsigned n) const { return rows_.at(n - 1); }

  // p_m^n for even n, q_m^n for odd n. Throws std::out_of_range if the
  // symbol does not exist (wrong parity or outside the table).
  mpz_class p(unsigned m, unsigned n) const;
  mpz_class q(unsigned m, unsigned n) const;

  // Columns n,m,kind,coefficient.
  std::string to_csv() const;
  std::string to_tex() const;

 private:
  mpz_class lookup(unsigned m, unsigned n, PqKind kind) const;

  int rank_;
  std::vector<XDecomposition> rows_;
  std::vector<PqEntry> entries_;
};

// A coefficient printed in the worked rank-2 example of G^8 that the
// recurrence does not reproduce.
struct KnownErratum {
  int rank;
  unsigned n;
  unsigned m;
  mpz_class printed;
};

const std::vector<KnownErratum>& known_errata();

}  // namespace fpmom

#endif  // FPMOM_RECURRENCE_HPP_
