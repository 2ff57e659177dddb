#include "fpmom/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "fpmom/error.hpp"

namespace fpmom {

LaurentPolynomial::LaurentPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent k, const mpz_class& c) {
  LaurentPolynomial p;
  p.add_term(k, c);
  return p;
}

mpz_class LaurentPolynomial::coefficient(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::add_term(Exponent k, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent d) const {
  LaurentPolynomial out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k + d, c);
  return out;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [k, c] : terms_) {
    if (coefficient(-k) != c) return false;
  }
  return true;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << "h";
    if (k != 1) out << "^" << k;
  }
  return out.str();
}

std::string LaurentPolynomial::to_pairs() const {
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ":" + c.get_str();
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::from_pairs(const std::string& text) {
  LaurentPolynomial p;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("malformed exp:coeff pair '" + item + "'");
    try {
      p.add_term(std::stoll(item.substr(0, colon)), mpz_class(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw ParseError("malformed exp:coeff pair '" + item + "'");
    }
  }
  return p;
}

}  // namespace fpmom
