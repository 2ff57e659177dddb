#include "fpmom/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fpmom/error.hpp"
#include "fpmom/recurrence.hpp"

namespace fpmom {

namespace {

std::string at_order(unsigned n) { return "n=" + std::to_string(n); }

// Calls visit(n, G^n) for n = 1..max_order.
template <typename Visit>
void for_each_power(int rank, unsigned max_order, std::uint64_t cap, Visit&& visit) {
  const RingElement g = generating_operator(rank);
  RingElement current = RingElement::identity(rank);
  for (unsigned n = 1; n <= max_order; ++n) {
    current = mul(current, g, cap);
    visit(n, current);
  }
}

std::string range_note(const char* label, unsigned upto) {
  return std::string(label) + (upto == 0 ? " skipped" : " n<=" + std::to_string(upto));
}

}  // namespace

const mpz_class& WalkTable::count(unsigned steps, unsigned distance) const {
  static const mpz_class zero = 0;
  const auto& r = counts_.at(steps);
  return distance < r.size() ? r[distance] : zero;
}

WalkTable walk_counts(int rank, unsigned max_steps) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  const unsigned long outward = 2ul * static_cast<unsigned long>(rank) - 1;
  std::vector<std::vector<mpz_class>> counts;
  counts.reserve(max_steps + 1);
  counts.push_back({mpz_class(1)});
  for (unsigned s = 0; s < max_steps; ++s) {
    const auto& prev = counts.back();
    std::vector<mpz_class> next(s + 2);
    for (unsigned d = 0; d <= s; ++d) {
      const mpz_class& c = prev[d];
      if (c == 0) continue;
      // From the root every neighbour is one step further out; elsewhere one
      // neighbour is the parent.
      mpz_addmul_ui(next[d + 1].get_mpz_t(), c.get_mpz_t(), d == 0 ? outward + 1 : outward);
      if (d > 0) next[d - 1] += c;
    }
    counts.push_back(std::move(next));
  }
  return WalkTable(rank, std::move(counts));
}

std::string DiffReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["subject"] = subject;
  doc["verdict"] = verdict();
  auto list = nlohmann::ordered_json::array();
  for (const auto& m : mismatches) {
    list.push_back({{"location", m.location}, {"expected", m.expected}, {"actual", m.actual}});
  }
  doc["mismatches"] = std::move(list);
  return doc.dump();
}

OracleSelection parse_oracle_selection(std::string_view name) {
  if (name == "ring") return OracleSelection::kRing;
  if (name == "tree") return OracleSelection::kTree;
  if (name == "both") return OracleSelection::kBoth;
  throw std::invalid_argument("unknown oracle '" + std::string(name) + "'");
}

unsigned default_ring_budget(int rank) {
  if (rank == 1) return 60;
  if (rank == 2) return 12;
  if (rank == 3) return 8;
  unsigned n = 1;
  while (reduced_word_count(rank, n + 1) <= 500'000) ++n;
  return n;
}

DiffReport verify_scalar(int rank, unsigned max_order, const VerifyOptions& options) {
  const bool use_tree = options.oracles != OracleSelection::kRing;
  const bool use_ring = options.oracles != OracleSelection::kTree;
  const unsigned ring_upto = use_ring ? std::min(max_order, options.ring_limit(rank)) : 0;

  DiffReport report;
  report.subject = "scalar moments N=" + std::to_string(rank) + " n<=" +
                   std::to_string(max_order) + " (" +
                   range_note("tree", use_tree ? max_order : 0) + ", " +
                   range_note("ring", ring_upto) + ")";

  std::vector<mpz_class> recurrence;
  XDecomposition d = XDecomposition::initial(rank);
  for (unsigned n = 1; n <= max_order; ++n) {
    if (n > 1) d = d.step();
    recurrence.push_back(scalar_moment(d));
  }
  if (options.inject_fault_at && *options.inject_fault_at >= 1 &&
      *options.inject_fault_at <= max_order) {
    recurrence[*options.inject_fault_at - 1] += 1;
  }

  std::optional<WalkTable> walks;
  if (use_tree) {
    walks = walk_counts(rank, max_order);
    for (unsigned n = 1; n <= max_order; ++n) {
      const mpz_class& expected = walks->returning(n);
      if (recurrence[n - 1] != expected) {
        report.mismatches.push_back({at_order(n) + " recurrence vs tree", expected.get_str(),
                                     recurrence[n - 1].get_str()});
      }
    }
  }
  if (ring_upto > 0) {
    for_each_power(rank, ring_upto, options.support_cap, [&](unsigned n, const RingElement& gn) {
      const mpz_class actual = trace(gn);
      const mpz_class& expected = walks ? walks->returning(n) : recurrence[n - 1];
      if (actual != expected) {
        report.mismatches.push_back({at_order(n) + (walks ? " ring vs tree" : " recurrence vs ring"),
                                     walks ? expected.get_str() : actual.get_str(),
                                     walks ? actual.get_str() : expected.get_str()});
      }
    });
  }
  return report;
}

DiffReport verify_amalgamated(int rank, unsigned max_order, const VerifyOptions& options) {
  const Hyperword h = Hyperword::canonical(rank);
  const unsigned ring_upto = std::min(max_order, options.ring_limit(rank));

  DiffReport report;
  report.subject = "amalgamated moments N=" + std::to_string(rank) + " h=" +
                   format_word(h.base()) + " n<=" + std::to_string(max_order) + " (" +
                   range_note("ring", ring_upto) + ")";

  XDecomposition d = XDecomposition::initial(rank);
  for_each_power(rank, ring_upto, options.support_cap, [&](unsigned n, const RingElement& gn) {
    if (n > 1) d = d.step();
    LaurentPolynomial actual = amalgamated_moment(d);
    if (options.inject_fault_at == n) actual.add_term(0, 1);
    const LaurentPolynomial expected = conditional_expectation(gn, h);
    if (actual != expected) {
      report.mismatches.push_back(
          {at_order(n) + " recurrence vs ring", expected.to_string(), actual.to_string()});
    }
  });
  return report;
}

DiffReport verify_radiality(int rank, unsigned max_order, const VerifyOptions& options) {
  const unsigned ring_upto = std::min(max_order, options.ring_limit(rank));
  DiffReport report;
  report.subject = "radiality N=" + std::to_string(rank) + " n<=" + std::to_string(max_order) +
                   " (" + range_note("ring", ring_upto) + ")";

  XDecomposition d = XDecomposition::initial(rank);
  for_each_power(rank, ring_upto, options.support_cap, [&](unsigned n, const RingElement& gn) {
    if (n > 1) d = d.step();
    std::vector<mpz_class> expected(n + 1);
    for (unsigned m = 0; m <= n; ++m) expected[m] = d.coefficient(m);
    if (options.inject_fault_at == n) expected[n] += 1;

    struct LengthClass {
      mpz_class words = 0;
      std::optional<mpz_class> value;
      bool constant = true;
    };
    std::map<std::size_t, LengthClass> classes;
    for (const auto& [w, c] : gn.terms()) {
      auto& cls = classes[w.length()];
      cls.words += 1;
      if (!cls.value) {
        cls.value = c;
      } else if (*cls.value != c) {
        cls.constant = false;
      }
    }
    for (unsigned m = 0; m <= n; ++m) {
      const std::string where = at_order(n) + " m=" + std::to_string(m);
      auto it = classes.find(m);
      if (it == classes.end()) {
        if (expected[m] != 0) report.mismatches.push_back({where, expected[m].get_str(), "0"});
        continue;
      }
      const auto& cls = it->second;
      if (!cls.constant) {
        report.mismatches.push_back({where, "constant coefficient", "varies within length class"});
      } else if (cls.words != reduced_word_count(rank, m)) {
        report.mismatches.push_back({where + " support", reduced_word_count(rank, m).get_str(),
                                     cls.words.get_str()});
      } else if (*cls.value != expected[m]) {
        report.mismatches.push_back({where, expected[m].get_str(), cls.value->get_str()});
      }
    }
    for (const auto& [len, cls] : classes) {
      if (len > n) {
        report.mismatches.push_back({at_order(n) + " m=" + std::to_string(len), "0",
                                     cls.value->get_str()});
      }
    }
  });
  return report;
}

MomentSeries tree_scalar_series(int rank, unsigned max_order) {
  const WalkTable walks = walk_counts(rank, max_order);
  std::vector<MomentEntry> entries;
  for (unsigned n = 1; n <= max_order; ++n) entries.push_back({n, walks.returning(n)});
  return MomentSeries(rank, SeriesKind::kScalar, Provenance::kTreeOracle, std::move(entries));
}

MomentSeries ring_scalar_series(int rank, unsigned max_order, std::uint64_t support_cap) {
  std::vector<MomentEntry> entries;
  for_each_power(rank, max_order, support_cap,
                 [&](unsigned n, const RingElement& gn) { entries.push_back({n, trace(gn)}); });
  return MomentSeries(rank, SeriesKind::kScalar, Provenance::kRingOracle, std::move(entries));
}

MomentSeries ring_amalgamated_series(int rank, unsigned max_order, std::uint64_t support_cap) {
  const Hyperword h = Hyperword::canonical(rank);
  std::vector<MomentEntry> entries;
  for_each_power(rank, max_order, support_cap, [&](unsigned n, const RingElement& gn) {
    entries.push_back({n, conditional_expectation(gn, h)});
  });
  return MomentSeries(rank, SeriesKind::kAmalgamated, Provenance::kRingOracle,
                      std::move(entries));
}

}  // namespace fpmom
