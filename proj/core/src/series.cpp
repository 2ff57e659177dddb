#include "fpmom/series.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fpmom/error.hpp"
#include "fpmom/recurrence.hpp"

namespace fpmom {

namespace {

bool is_zero_value(const MomentValue& v) {
  if (const auto* s = std::get_if<mpz_class>(&v)) return *s == 0;
  return std::get<LaurentPolynomial>(v).is_zero();
}

std::string tex_value(const MomentValue& v) {
  if (const auto* s = std::get_if<mpz_class>(&v)) return s->get_str();
  const auto& p = std::get<LaurentPolynomial>(v);
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "h";
    if (k != 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

}  // namespace

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::kScalar ? "scalar" : "amalgamated";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kRecurrence:
      return "recurrence";
    case Provenance::kRingOracle:
      return "ring-oracle";
    case Provenance::kTreeOracle:
      return "tree-oracle";
  }
  return "recurrence";
}

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "scalar") return SeriesKind::kScalar;
  if (name == "amalgamated") return SeriesKind::kAmalgamated;
  throw std::invalid_argument("unknown series kind '" + std::string(name) + "'");
}

Provenance parse_provenance(std::string_view name) {
  if (name == "recurrence") return Provenance::kRecurrence;
  if (name == "ring-oracle") return Provenance::kRingOracle;
  if (name == "tree-oracle") return Provenance::kTreeOracle;
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

SeriesFormat parse_series_format(std::string_view name) {
  if (name == "json") return SeriesFormat::kJson;
  if (name == "csv") return SeriesFormat::kCsv;
  if (name == "tex") return SeriesFormat::kTex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

MomentSeries::MomentSeries(int rank, SeriesKind kind, Provenance provenance,
                           std::vector<MomentEntry> entries, std::string tool_version)
    : rank_(rank),
      kind_(kind),
      provenance_(provenance),
      entries_(std::move(entries)),
      tool_version_(std::move(tool_version)) {
  if (rank_ < 1) throw std::invalid_argument("series rank must be >= 1");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.order != i + 1) {
      throw std::invalid_argument("series orders must run 1.." + std::to_string(entries_.size()));
    }
    const bool scalar_value = std::holds_alternative<mpz_class>(e.value);
    if (scalar_value != (kind_ == SeriesKind::kScalar)) {
      throw std::invalid_argument("value type does not match series kind at order " +
                                  std::to_string(e.order));
    }
    if (e.order % 2 == 1 && !is_zero_value(e.value)) {
      throw std::invalid_argument("odd moment at order " + std::to_string(e.order) +
                                  " is nonzero");
    }
  }
}

MomentSeries scalar_series(int rank, unsigned max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  std::vector<MomentEntry> entries;
  XDecomposition d = XDecomposition::initial(rank);
  for (unsigned n = 1; n <= max_order; ++n) {
    if (n > 1) d = d.step();
    entries.push_back({n, scalar_moment(d)});
  }
  return MomentSeries(rank, SeriesKind::kScalar, Provenance::kRecurrence, std::move(entries));
}

MomentSeries amalgamated_series(int rank, unsigned max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (rank < 2) {
    throw DegenerateSubgroupError("amalgamation needs rank >= 2; rank " + std::to_string(rank) +
                                  " gives h = e");
  }
  std::vector<MomentEntry> entries;
  XDecomposition d = XDecomposition::initial(rank);
  for (unsigned n = 1; n <= max_order; ++n) {
    if (n > 1) d = d.step();
    entries.push_back({n, amalgamated_moment(d)});
  }
  return MomentSeries(rank, SeriesKind::kAmalgamated, Provenance::kRecurrence,
                      std::move(entries));
}

std::optional<unsigned> first_inconsistent_order(const MomentSeries& scalar,
                                                 const MomentSeries& amalgamated) {
  if (scalar.kind() != SeriesKind::kScalar || amalgamated.kind() != SeriesKind::kAmalgamated) {
    throw std::invalid_argument("expected a scalar and an amalgamated series");
  }
  if (scalar.rank() != amalgamated.rank()) throw RankMismatch(scalar.rank(), amalgamated.rank());
  const unsigned common = std::min(scalar.max_order(), amalgamated.max_order());
  for (unsigned n = 1; n <= common; ++n) {
    const auto& s = std::get<mpz_class>(scalar.at(n));
    const auto& a = std::get<LaurentPolynomial>(amalgamated.at(n));
    if (s != a.coefficient(0)) return n;
  }
  return std::nullopt;
}

std::string emit(const MomentSeries& series, SeriesFormat format, const EmitOptions& options) {
  const bool scalar = series.kind() == SeriesKind::kScalar;
  std::ostringstream out;
  switch (format) {
    case SeriesFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["rank"] = series.rank();
      doc["kind"] = to_string(series.kind());
      doc["max_order"] = series.max_order();
      doc["provenance"] = to_string(series.provenance());
      doc["tool_version"] = series.tool_version();
      if (options.timestamp) doc["generated_at"] = *options.timestamp;
      auto entries = nlohmann::ordered_json::array();
      for (const auto& e : series.entries()) {
        nlohmann::ordered_json item;
        item["n"] = e.order;
        if (scalar) {
          item["value"] = std::get<mpz_class>(e.value).get_str();
        } else {
          auto terms = nlohmann::ordered_json::array();
          for (const auto& [k, c] : std::get<LaurentPolynomial>(e.value).terms()) {
            terms.push_back({{"exp", k}, {"coeff", c.get_str()}});
          }
          item["value"] = std::move(terms);
        }
        entries.push_back(std::move(item));
      }
      doc["entries"] = std::move(entries);
      out << doc.dump() << '\n';
      break;
    }
    case SeriesFormat::kCsv:
      if (options.timestamp) out << "# generated_at " << *options.timestamp << '\n';
      out << "n,value\n";
      for (const auto& e : series.entries()) {
        out << e.order << ',';
        if (scalar) {
          out << std::get<mpz_class>(e.value).get_str();
        } else {
          out << std::get<LaurentPolynomial>(e.value).to_pairs();
        }
        out << '\n';
      }
      break;
    case SeriesFormat::kTex:
      out << "% " << to_string(series.kind()) << " moments of G, N = " << series.rank() << ", "
          << to_string(series.provenance()) << '\n';
      if (options.timestamp) out << "% generated_at " << *options.timestamp << '\n';
      out << "\\begin{tabular}{rl}\n";
      out << "$n$ & " << (scalar ? "$\\tau(G^n)$" : "$E(G^n)$") << " \\\\\n\\hline\n";
      for (const auto& e : series.entries()) {
        out << e.order << " & $" << tex_value(e.value) << "$ \\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
  }
  return out.str();
}

MomentSeries parse_series_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int rank = doc.at("rank").get<int>();
    const SeriesKind kind = parse_series_kind(doc.at("kind").get<std::string>());
    const Provenance provenance = parse_provenance(doc.at("provenance").get<std::string>());
    std::string version = doc.value("tool_version", std::string(kToolVersion));
    std::vector<MomentEntry> entries;
    for (const auto& item : doc.at("entries")) {
      const unsigned n = item.at("n").get<unsigned>();
      const auto& value = item.at("value");
      if (kind == SeriesKind::kScalar) {
        entries.push_back({n, mpz_class(value.get<std::string>())});
      } else {
        LaurentPolynomial p;
        for (const auto& t : value) {
          p.add_term(t.at("exp").get<LaurentPolynomial::Exponent>(),
                     mpz_class(t.at("coeff").get<std::string>()));
        }
        entries.push_back({n, std::move(p)});
      }
    }
    MomentSeries series(rank, kind, provenance, std::move(entries), std::move(version));
    if (doc.contains("max_order") && doc.at("max_order").get<unsigned>() != series.max_order()) {
      throw ParseError("max_order disagrees with entries");
    }
    return series;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("series json: ") + e.what());
  }
}

}  // namespace fpmom
