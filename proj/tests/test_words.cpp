#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "linklab/words.hpp"

using namespace linklab;

namespace {

// Independent expansion oracle: dense polynomial arithmetic on explicit
// monomial vectors, no shared code with MagnusSeries beyond the word type.
using Poly = std::map<std::vector<int>, long long>;

Poly poly_one() { return {{{}, 1}}; }

Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > static_cast<size_t>(max_degree)) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r[m] += ca * cb;
      if (r[m] == 0) r.erase(m);
    }
  return r;
}

Poly poly_expand(const Word& w, int max_degree) {
  Poly r = poly_one();
  for (const auto& l : w.letters()) {
    Poly letter;
    if (l.exp > 0 || l.exp < 0) {
      letter = poly_one();
      if (l.exp > 0) {
        letter[{l.gen}] = 1;
      } else {
        std::vector<int> m;
        long long sign = 1;
        for (int d = 1; d <= max_degree; ++d) {
          m.push_back(l.gen);
          sign = -sign;
          letter[m] = sign;
        }
      }
    }
    for (int rep = 0; rep < std::abs(l.exp); ++rep) r = poly_mul(r, letter, max_degree);
  }
  return r;
}

bool matches_oracle(const Word& w, int num_vars, int max_degree) {
  MagnusSeries s = magnus_expand(w, num_vars, max_degree, false);
  Poly p = poly_expand(w, max_degree);
  for (const auto& [m, c] : p)
    if (coefficient(s, m) != c) return false;
  for (const auto& [k, c] : s.terms())
    if (p.count(monomial_indices(k)) == 0) return false;
  return true;
}

Word random_word(std::mt19937& rng, int num_vars, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, num_vars);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::vector<Letter> letters;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    letters.push_back({gen(rng), e});
  }
  return Word(letters);
}

}  // namespace

TEST_CASE("free reduction canonicalizes") {
  CHECK(Word({{1, 1}, {1, -1}}).is_identity());
  CHECK(Word({{1, 1}, {1, 1}}) == Word({{1, 2}}));
  CHECK(Word({{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == Word({{1, 2}}));
  // Idempotence.
  Word w({{1, 2}, {2, -1}, {2, 1}, {3, 1}, {3, 1}});
  CHECK(free_reduce(w.letters()) == w);
}

TEST_CASE("commutator basics") {
  Word x1 = Word::generator(1), x2 = Word::generator(2);
  CHECK(commutator(x1, x1).is_identity());
  CHECK(commutator(Word(), x2).is_identity());
  CHECK(commutator(x1, x2) == Word({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
}

TEST_CASE("word serialization round-trips") {
  Word w({{1, 2}, {3, -1}});
  CHECK(to_string(w) == "x1^2 x3^-1");
  CHECK(parse_word(to_string(w)) == w);
  CHECK(to_string(Word()) == "1");
  CHECK(parse_word("1").is_identity());
}

TEST_CASE("magnus expansion of single letters") {
  MagnusSeries s = magnus_expand(Word::generator(1), 2, 2, false);
  CHECK(coefficient(s, {}) == 1);
  CHECK(coefficient(s, {1}) == 1);
  CHECK(coefficient(s, {1, 1}) == 0);

  // x1^-1 unreduced: 1 - X1 + X1^2; reduced: 1 - X1.
  MagnusSeries inv = magnus_expand(Word::generator(1, -1), 2, 2, false);
  CHECK(coefficient(inv, {1}) == -1);
  CHECK(coefficient(inv, {1, 1}) == 1);
  MagnusSeries invr = magnus_expand(Word::generator(1, -1), 2, 2, true);
  CHECK(coefficient(invr, {1}) == -1);
  CHECK(coefficient(invr, {1, 1}) == 0);
}

TEST_CASE("commutator expansion against the dense oracle") {
  Word c = commutator(Word::generator(1), Word::generator(2));
  // Hand-multiplied oracle value, frozen: 1 + X1X2 - X2X1 at degree 2.
  MagnusSeries s = magnus_expand(c, 2, 2, false);
  CHECK(coefficient(s, {}) == 1);
  CHECK(coefficient(s, {1}) == 0);
  CHECK(coefficient(s, {2}) == 0);
  CHECK(coefficient(s, {1, 2}) == 1);
  CHECK(coefficient(s, {2, 1}) == -1);
  CHECK(matches_oracle(c, 2, 4));
}

TEST_CASE("series multiplication identities") {
  MagnusSeries one = MagnusSeries::one(2, 3, false);
  MagnusSeries s = magnus_expand(Word({{1, 1}, {2, -1}}), 2, 3, false);
  CHECK(series_multiply(s, one) == s);
  // (1+X1)(1-X1+X1^2) = 1 at degree 2.
  MagnusSeries a = magnus_expand(Word::generator(1), 1, 2, false);
  MagnusSeries b = magnus_expand(Word::generator(1, -1), 1, 2, false);
  CHECK(series_multiply(a, b) == MagnusSeries::one(1, 2, false));
  // (1+X1)(1+X2) = 1 + X1 + X2 + X1X2.
  MagnusSeries p = series_multiply(magnus_expand(Word::generator(1), 2, 2, false),
                                   magnus_expand(Word::generator(2), 2, 2, false));
  CHECK(coefficient(p, {1, 2}) == 1);
  CHECK(coefficient(p, {2, 1}) == 0);
  CHECK_THROWS_AS(series_multiply(one, MagnusSeries::one(3, 3, false)), std::invalid_argument);
}

TEST_CASE("coefficient readout") {
  MagnusSeries s = magnus_expand(Word::generator(1), 2, 2, false);
  CHECK(coefficient(s, {1}) == 1);
  CHECK(coefficient(s, {}) == 1);
  CHECK(coefficient(s, {1, 2, 1, 2, 1}) == 0);  // beyond max degree: absent
}

TEST_CASE("magnus expansion is multiplicative and kills inverses") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = random_word(rng, 3, 5);
    Word v = random_word(rng, 3, 5);
    for (bool reduced : {false, true}) {
      int deg = 1 + static_cast<int>(rng() % 6);
      MagnusSeries uv = magnus_expand(concat(u, v), 3, deg, reduced);
      MagnusSeries prod = series_multiply(magnus_expand(u, 3, deg, reduced),
                                          magnus_expand(v, 3, deg, reduced));
      REQUIRE(uv == prod);
    }
    MagnusSeries killed = magnus_expand(concat(u, inverse(u)), 3, 5, false);
    REQUIRE(killed == MagnusSeries::one(3, 5, false));
  }
}

TEST_CASE("degree-1 coefficients are exponent sums") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 4, 6);
    MagnusSeries s = magnus_expand(w, 4, 3, trial % 2 == 0);
    std::map<int, long long> sums;
    for (const auto& l : w.letters()) sums[l.gen] += l.exp;
    for (int g = 1; g <= 4; ++g) REQUIRE(coefficient(s, {g}) == sums[g]);
  }
}

TEST_CASE("reduced mode drops repeated indices after every product") {
  Word w({{1, 1}, {2, 1}, {1, 1}});
  MagnusSeries s = magnus_expand(w, 2, 3, true);
  for (const auto& [k, c] : s.terms()) CHECK_FALSE(monomial_has_repeat(k));
  // Unreduced expansion agrees with the oracle on a few fixed words.
  CHECK(matches_oracle(w, 2, 4));
  CHECK(matches_oracle(Word({{1, -2}, {2, 1}}), 2, 4));
}

TEST_CASE("series inverse inverts") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 3, 4);
    for (bool reduced : {false, true}) {
      MagnusSeries s = magnus_expand(u, 3, 4, reduced);
      CHECK(series_multiply(s, series_inverse(s)) == MagnusSeries::one(3, 4, reduced));
    }
  }
}
