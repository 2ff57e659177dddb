#ifndef FPMOM_SERIES_HPP_
#define FPMOM_SERIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fpmom/laurent.hpp"

namespace fpmom {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class SeriesKind { kScalar, kAmalgamated };
enum class Provenance { kRecurrence, kRingOracle, kTreeOracle };
enum class SeriesFormat { kJson, kCsv, kTex };

std::string_view to_string(SeriesKind kind);
std::string_view to_string(Provenance provenance);

// Throw std::invalid_argument on unknown names.
SeriesKind parse_series_kind(std::string_view name);
Provenance parse_provenance(std::string_view name);
SeriesFormat parse_series_format(std::string_view name);

using MomentValue = std::variant<mpz_class, LaurentPolynomial>;

struct MomentEntry {
  unsigned order;
  MomentValue value;

  friend bool operator==(const MomentEntry&, const MomentEntry&) = default;
};

// Moments of G indexed by the power n: tau(G^n) for the scalar kind, E(G^n)
// for the amalgamated kind.
class MomentSeries {
 public:
  // Validates: entries carry orders 1..max_order in sequence, values match the
  // kind, odd orders vanish. Throws std::invalid_argument otherwise.
  MomentSeries(int rank, SeriesKind kind, Provenance provenance, std::vector<MomentEntry> entries,
               std::string tool_version = std::string(kToolVersion));

  int rank() const { return rank_; }
  SeriesKind kind() const { return kind_; }
  Provenance provenance() const { return provenance_; }
  unsigned max_order() const { return static_cast<unsigned>(entries_.size()); }
  const std::vector<MomentEntry>& entries() const { return entries_; }
  const std::string& tool_version() const { return tool_version_; }

  const MomentValue& at(unsigned order) const { return entries_.at(order - 1).value; }

  friend bool operator==(const MomentSeries&, const MomentSeries&) = default;

 private:
  int rank_;
  SeriesKind kind_;
  Provenance provenance_;
  std::vector<MomentEntry> entries_;
  std::string tool_version_;
};

// tau(G^n) for n = 1..max_order from the recurrence.
MomentSeries scalar_series(int rank, unsigned max_order);
// E(G^n) for n = 1..max_order from the recurrence. Throws for rank < 2.
MomentSeries amalgamated_series(int rank, unsigned max_order);

// A scalar entry at order n must equal the h^0 coefficient of the amalgamated
// entry at the same order. Returns the first offending order, if any.
std::optional<unsigned> first_inconsistent_order(const MomentSeries& scalar,
                                                 const MomentSeries& amalgamated);

struct EmitOptions {
  // Adds a "generated_at" field (JSON) or comment line (CSV/TeX).
  std::optional<std::string> timestamp;
};

std::string emit(const MomentSeries& series, SeriesFormat format, const EmitOptions& options = {});
MomentSeries parse_series_json(std::string_view text);

}  // namespace fpmom

#endif  // FPMOM_SERIES_HPP_
