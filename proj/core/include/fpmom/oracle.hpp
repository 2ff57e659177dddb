#ifndef FPMOM_ORACLE_HPP_
#define FPMOM_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fpmom/ring.hpp"
#include "fpmom/series.hpp"

namespace fpmom {

// counts(s, d): walks of s steps from the root of the 2N-regular tree that
// end at distance d. The tree is the Cayley graph of F_N, so counts(s, 0) is
// tau(G^s).
class WalkTable {
 public:
  int rank() const { return rank_; }
  unsigned max_steps() const { return static_cast<unsigned>(counts_.size()) - 1; }
  const mpz_class& count(unsigned steps, unsigned distance) const;
  const mpz_class& returning(unsigned steps) const { return count(steps, 0); }
  const std::vector<mpz_class>& row(unsigned steps) const { return counts_.at(steps); }

 private:
  friend WalkTable walk_counts(int rank, unsigned max_steps);
  WalkTable(int rank, std::vector<std::vector<mpz_class>> counts)
      : rank_(rank), counts_(std::move(counts)) {}

  int rank_;
  std::vector<std::vector<mpz_class>> counts_;  // counts_[s] has s + 1 entries
};

WalkTable walk_counts(int rank, unsigned max_steps);

struct Mismatch {
  std::string location;
  std::string expected;
  std::string actual;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct DiffReport {
  std::string subject;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
  std::string verdict() const { return passed() ? "pass" : "fail"; }
  std::string to_json() const;
};

enum class OracleSelection { kRing, kTree, kBoth };

OracleSelection parse_oracle_selection(std::string_view name);

// Largest n for which expanding G^n in the group ring is cheap: 12 for
// rank 2, 8 for rank 3, and sized to a few hundred thousand terms otherwise.
unsigned default_ring_budget(int rank);

struct VerifyOptions {
  OracleSelection oracles = OracleSelection::kBoth;
  // Ring expansion runs for orders up to this bound; nullopt means
  // default_ring_budget(rank).
  std::optional<unsigned> ring_max_order;
  std::uint64_t support_cap = kDefaultSupportCap;
  // Adds one to the recurrence value at this order before comparing.
  std::optional<unsigned> inject_fault_at;

  unsigned ring_limit(int rank) const {
    return ring_max_order ? *ring_max_order : default_ring_budget(rank);
  }
};

// Recurrence tau(G^n) against the tree walk counts (all orders) and against
// trace(G^n) from ring expansion (orders within the ring budget). The tree
// values are the pivot, so one bad recurrence value yields one mismatch.
DiffReport verify_scalar(int rank, unsigned max_order, const VerifyOptions& options = {});

// Recurrence E(G^n) against conditional_expectation(G^n, h) for orders within
// the ring budget. Throws DegenerateSubgroupError for rank < 2.
DiffReport verify_amalgamated(int rank, unsigned max_order, const VerifyOptions& options = {});

// G^n from ring expansion is constant on each length class and those
// constants are the recurrence coefficients.
DiffReport verify_radiality(int rank, unsigned max_order, const VerifyOptions& options = {});

// The same moment series computed by the oracles instead of the recurrence.
MomentSeries tree_scalar_series(int rank, unsigned max_order);
MomentSeries ring_scalar_series(int rank, unsigned max_order,
                                std::uint64_t support_cap = kDefaultSupportCap);
MomentSeries ring_amalgamated_series(int rank, unsigned max_order,
                                     std::uint64_t support_cap = kDefaultSupportCap);

}  // namespace fpmom

#endif  // FPMOM_ORACLE_HPP_
