#include "fpmom/recurrence.hpp"

#include <sstream>
#include <stdexcept>

#include "fpmom/error.hpp"
#include "fpmom/word.hpp"

namespace fpmom {

XDecomposition XDecomposition::initial(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  return XDecomposition(rank, 1, {mpz_class(0), mpz_class(1)});
}

mpz_class XDecomposition::coefficient(unsigned m) const {
  return m < coeffs_.size() ? coeffs_[m] : mpz_class(0);
}

std::vector<std::pair<unsigned, mpz_class>> XDecomposition::terms() const {
  std::vector<std::pair<unsigned, mpz_class>> out;
  for (unsigned m = power_ + 1; m-- > 0;) {
    if (coeffs_[m] != 0) out.emplace_back(m, coeffs_[m]);
  }
  return out;
}

mpz_class XDecomposition::mass() const {
  mpz_class total = 0;
  for (unsigned m = 0; m <= power_; ++m) {
    if (coeffs_[m] != 0) total += coeffs_[m] * reduced_word_count(rank_, m);
  }
  return total;
}

XDecomposition XDecomposition::step() const {
  const unsigned long inward = 2ul * static_cast<unsigned long>(rank_) - 1;
  std::vector<mpz_class> next(power_ + 2);
  for (unsigned m = 0; m <= power_; ++m) {
    const mpz_class& c = coeffs_[m];
    if (c == 0) continue;
    next[m + 1] += c;
    if (m == 1) {
      mpz_addmul_ui(next[0].get_mpz_t(), c.get_mpz_t(), inward + 1);
    } else if (m >= 2) {
      mpz_addmul_ui(next[m - 1].get_mpz_t(), c.get_mpz_t(), inward);
    }
  }
  return XDecomposition(rank_, power_ + 1, std::move(next));
}

XDecomposition decomposition_of(unsigned n, int rank) {
  if (n < 1) throw std::invalid_argument("decomposition_of needs n >= 1");
  XDecomposition d = XDecomposition::initial(rank);
  while (d.power() < n) d = d.step();
  return d;
}

mpz_class scalar_moment(const XDecomposition& d) {
  return d.power() % 2 == 0 ? d.coefficient(0) : mpz_class(0);
}

mpz_class scalar_moment(unsigned n, int rank) { return scalar_moment(decomposition_of(n, rank)); }

LaurentPolynomial amalgamated_moment(const XDecomposition& d) {
  if (d.rank() < 2) {
    throw DegenerateSubgroupError("amalgamation needs rank >= 2; rank " +
                                  std::to_string(d.rank()) + " gives h = e");
  }
  const unsigned period = 2u * static_cast<unsigned>(d.rank());
  LaurentPolynomial out;
  for (const auto& [m, c] : d.terms()) {
    if (m == 0) {
      out.add_term(0, c);
    } else if (m % period == 0) {
      const auto k = static_cast<LaurentPolynomial::Exponent>(m / period);
      out.add_term(k, c);
      out.add_term(-k, c);
    }
  }
  return out;
}

LaurentPolynomial amalgamated_moment(unsigned n, int rank) {
  if (rank < 2) {
    throw DegenerateSubgroupError("amalgamation needs rank >= 2; rank " +
                                  std::to_string(rank) + " gives h = e");
  }
  return amalgamated_moment(decomposition_of(n, rank));
}

PqTable::PqTable(unsigned max_n, int rank) : rank_(rank) {
  if (max_n < 2) throw std::invalid_argument("pq table needs max_n >= 2");
  rows_.reserve(max_n);
  rows_.push_back(XDecomposition::initial(rank));
  while (rows_.size() < max_n) rows_.push_back(rows_.back().step());
  for (const auto& row : rows_) {
    const PqKind kind = row.power() % 2 == 0 ? PqKind::kP : PqKind::kQ;
    for (const auto& [m, c] : row.terms()) {
      if (m < row.power()) entries_.push_back({row.power(), m, kind, c});
    }
  }
}

mpz_class PqTable::lookup(unsigned m, unsigned n, PqKind kind) const {
  const bool even = n % 2 == 0;
  if (n < 1 || n > max_n() || m >= n || m % 2 != n % 2 || even != (kind == PqKind::kP)) {
    std::ostringstream msg;
    msg << (kind == PqKind::kP ? "p" : "q") << "_" << m << "^" << n
        << " is not in the table (max_n " << max_n() << ")";
    throw std::out_of_range(msg.str());
  }
  return row(n).coefficient(m);
}

mpz_class PqTable::p(unsigned m, unsigned n) const { return lookup(m, n, PqKind::kP); }
mpz_class PqTable::q(unsigned m, unsigned n) const { return lookup(m, n, PqKind::kQ); }

std::string PqTable::to_csv() const {
  std::ostringstream out;
  out << "n,m,kind,coefficient\n";
  for (const auto& e : entries_) {
    out << e.n << ',' << e.m << ',' << (e.kind == PqKind::kP ? 'p' : 'q') << ','
        << e.value.get_str() << '\n';
  }
  return out.str();
}

std::string PqTable::to_tex() const {
  std::ostringstream out;
  out << "% recurrence coefficients, N = " << rank_ << "\n";
  out << "\\begin{tabular}{rrl}\n";
  out << "$n$ & $m$ & coefficient \\\\\n\\hline\n";
  for (const auto& e : entries_) {
    out << e.n << " & " << e.m << " & $" << (e.kind == PqKind::kP ? 'p' : 'q') << "_{" << e.m
        << "}^{" << e.n << "} = " << e.value.get_str() << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> errata = {
      {2, 8, 2, mpz_class(744)},
      {2, 8, 0, mpz_class(1316)},
  };
  return errata;
}

}  // namespace fpmom
