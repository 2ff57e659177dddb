#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "fpmom/error.hpp"
#include "fpmom/ring.hpp"

using namespace fpmom;

namespace {

RingElement elem(int rank, std::initializer_list<std::pair<const char*, long>> terms) {
  std::vector<RingElement::Term> out;
  for (const auto& [w, c] : terms) out.emplace_back(parse_word(w, rank), c);
  return RingElement(rank, std::move(out));
}

LaurentPolynomial laurent(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (const auto& [k, c] : terms) p.add_term(k, c);
  return p;
}

RingElement random_element(std::mt19937_64& rng, int rank, std::size_t max_support,
                           std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> support(0, max_support);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<RingElement::Term> terms;
  const std::size_t count = support(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const auto raw = testing::random_raw_word(rng, rank, max_len);
    std::vector<Letter> letters;
    for (int x : raw) letters.emplace_back(x < 0 ? -x : x, x < 0 ? -1 : 1);
    terms.emplace_back(Word::reduce(rank, letters), coeff(rng));
  }
  return RingElement(rank, std::move(terms));
}

}  // namespace

TEST_CASE("add") {
  CHECK(elem(2, {{"a", 1}}) + elem(2, {{"A", 1}}) == elem(2, {{"a", 1}, {"A", 1}}));
  const RingElement x = elem(2, {{"ab", 3}, {"B", -2}});
  CHECK((x + (-x)).is_zero());
  CHECK(elem(2, {{"e", 2}}) + elem(2, {{"e", 3}}) == elem(2, {{"e", 5}}));
  CHECK_THROWS_AS(add(RingElement(2), RingElement(3)), RankMismatch);
}

TEST_CASE("constructor merges duplicates and drops zeros") {
  const RingElement x = elem(2, {{"a", 2}, {"a", -2}, {"b", 1}, {"b", 1}});
  REQUIRE(x.support_size() == 1);
  CHECK(coefficient(x, parse_word("b", 2)) == 2);
}

TEST_CASE("mul realizes the radial relations") {
  const RingElement x1 = build_radial_sum(1, 2);
  const RingElement x2 = build_radial_sum(2, 2);
  const RingElement x3 = build_radial_sum(3, 2);
  const RingElement e = RingElement::identity(2);
  CHECK(x1 * x1 == x2 + scale(e, 4));
  CHECK(x1 * x2 == x3 + scale(x1, 3));
  CHECK(e * x3 == x3);
  CHECK_THROWS_AS(mul(x1, build_radial_sum(1, 3)), RankMismatch);

  // General rank: X_1 X_1 = X_2 + 2N e, X_1 X_n = X_{n+1} + (2N-1) X_{n-1}.
  for (int rank = 1; rank <= 4; ++rank) {
    const RingElement g = build_radial_sum(1, rank);
    CHECK(g * g == build_radial_sum(2, rank) + scale(RingElement::identity(rank), 2 * rank));
    for (unsigned n = 2; n <= 4; ++n) {
      CHECK(g * build_radial_sum(n, rank) ==
            build_radial_sum(n + 1, rank) + scale(build_radial_sum(n - 1, rank), 2 * rank - 1));
    }
  }
}

TEST_CASE("power of the generating operator") {
  const RingElement g = generating_operator(2);
  CHECK(g == elem(2, {{"a", 1}, {"b", 1}, {"A", 1}, {"B", 1}}));
  CHECK(power(g, 0) == RingElement::identity(2));
  CHECK(power(g, 2) == build_radial_sum(2, 2) + scale(RingElement::identity(2), 4));
  CHECK(power(g, 3) == build_radial_sum(3, 2) + scale(build_radial_sum(1, 2), 7));
}

TEST_CASE("power agrees with sequence enumeration") {
  for (const auto& [rank, n] : {std::pair{2, 6u}, std::pair{3, 5u}, std::pair{1, 8u}}) {
    const auto reference = testing::expand_by_sequences(rank, n);
    const RingElement gn = power(generating_operator(rank), n);
    REQUIRE(gn.support_size() == reference.size());
    for (const auto& [w, c] : gn.terms()) {
      testing::RawWord raw;
      for (Letter l : w.letters()) raw.push_back(l.code());
      CHECK(reference.at(raw) == c.get_si());
    }
  }
}

TEST_CASE("build_radial_sum") {
  CHECK(build_radial_sum(0, 3) == RingElement::identity(3));
  CHECK(build_radial_sum(3, 2).support_size() == 36);
  CHECK(build_radial_sum(4, 3).support_size() == 6 * 125);
  CHECK_THROWS_AS(build_radial_sum(20, 2, 1000), ResourceLimitError);
  CHECK_THROWS_AS(power(generating_operator(2), 10, 1000), ResourceLimitError);
}

TEST_CASE("trace, coefficient, trivial representation") {
  const RingElement g = generating_operator(2);
  const RingElement g2 = build_radial_sum(2, 2) + scale(RingElement::identity(2), 4);
  CHECK(trace(g2) == 4);
  CHECK(trace(power(g, 3)) == 0);
  CHECK(trace(RingElement(2)) == 0);

  CHECK(coefficient(g2, Word(2)) == 4);
  CHECK(coefficient(g, parse_word("a", 2)) == 1);
  CHECK(coefficient(g, parse_word("ab", 2)) == 0);

  CHECK(evaluate_trivial_rep(g) == 4);
  CHECK(evaluate_trivial_rep(power(g, 3)) == 64);
  CHECK(evaluate_trivial_rep(RingElement(2)) == 0);
}

TEST_CASE("Hyperword") {
  const Hyperword h = Hyperword::canonical(2);
  CHECK(format_word(h.base()) == "abAB");
  CHECK(format_word(Hyperword::canonical(3).base()) == "abcABC");
  CHECK(h.power(-1) == parse_word("baBA", 2));
  CHECK(h.power(2).length() == 8);
  CHECK(h.power(0).is_identity());
  CHECK_THROWS_AS(Hyperword::canonical(1), DegenerateSubgroupError);
  CHECK_THROWS_AS(Hyperword(Word(2)), DegenerateSubgroupError);

  const Hyperword conj(parse_word("abA", 2));
  CHECK(conj.conjugator_length() == 1);
  CHECK(conj.core_length() == 1);
  CHECK(conj.power(3) == parse_word("abbbA", 2));
}

TEST_CASE("conditional expectation examples") {
  const Hyperword h = Hyperword::canonical(2);
  const RingElement g = generating_operator(2);
  CHECK(conditional_expectation(power(g, 2), h) == laurent({{0, 4}}));
  CHECK(conditional_expectation(power(g, 3), h).is_zero());
  CHECK(conditional_expectation(g, h).is_zero());
  CHECK(conditional_expectation(power(g, 4), h) == laurent({{1, 1}, {-1, 1}, {0, 28}}));

  // A base that is not cyclically reduced.
  const Hyperword conj(parse_word("abA", 2));
  const RingElement x = elem(2, {{"abbA", 5}, {"aBBA", 2}, {"abA", 1}, {"bb", 7}, {"e", 3}});
  CHECK(conditional_expectation(x, conj) == laurent({{2, 5}, {-2, 2}, {1, 1}, {0, 3}}));
}

TEST_CASE("E of a radial sum picks out h^{+-n/L}") {
  for (int rank = 2; rank <= 3; ++rank) {
    const Hyperword h = Hyperword::canonical(rank);
    const unsigned period = 2 * rank;
    const unsigned max_n = rank == 2 ? 12 : 7;
    for (unsigned n = 1; n <= max_n; ++n) {
      const LaurentPolynomial got = conditional_expectation(build_radial_sum(n, rank), h);
      LaurentPolynomial want;
      if (n % period == 0) {
        want.add_term(n / period, 1);
        want.add_term(-static_cast<long>(n / period), 1);
      }
      CAPTURE(rank);
      CAPTURE(n);
      CHECK(got == want);
    }
  }
}

TEST_CASE("group ring axioms on random elements") {
  std::mt19937_64 rng(42);
  const Hyperword h = Hyperword::canonical(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const RingElement x = random_element(rng, 2, 8, 6);
    const RingElement y = random_element(rng, 2, 8, 6);
    const RingElement z = random_element(rng, 2, 8, 6);

    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(trace(x * y) == trace(y * x));
    CHECK(evaluate_trivial_rep(x * y) == evaluate_trivial_rep(x) * evaluate_trivial_rep(y));

    const LaurentPolynomial ex = conditional_expectation(x, h);
    CHECK(ex.coefficient(0) == trace(x));
    CHECK(conditional_expectation(embed(ex, h), h) == ex);

    const long p = static_cast<long>(rng() % 5) - 2;
    const long q = static_cast<long>(rng() % 5) - 2;
    const RingElement hp = RingElement::from_word(h.power(p));
    const RingElement hq = RingElement::from_word(h.power(q));
    CHECK(conditional_expectation(hp * x * hq, h) == ex.shifted(p + q));
  }
}

TEST_CASE("ring element JSON") {
  const RingElement x = elem(2, {{"ab", -3}, {"e", 4}, {"A", 1}});
  CHECK(to_json(x) ==
        R"({"rank":2,"terms":[{"word":"e","coeff":"4"},{"word":"A","coeff":"1"},{"word":"ab","coeff":"-3"}]})");
  CHECK(ring_element_from_json(to_json(x)) == x);

  const RingElement big = RingElement::from_word(parse_word("g30 G2", 30), mpz_class("123456789012345678901234567890"));
  CHECK(ring_element_from_json(to_json(big)) == big);

  CHECK_THROWS_AS(ring_element_from_json("{\"rank\":2}"), ParseError);
  CHECK_THROWS_AS(ring_element_from_json(R"({"rank":2,"terms":[{"word":"c","coeff":"1"}]})"),
                  ParseError);
}
