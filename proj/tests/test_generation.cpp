#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmn/automorphism.hpp"
#include "gmn/generation.hpp"
#include "test_util.hpp"

using namespace gmn;

namespace {

const Gmn G23({2, 3});

// Random element of A as a word over {a, c, d}.
Word random_a_word(testing::Rng& rng, int max_syllables) {
  static const Letter pool[] = {Letter::A, Letter::C, Letter::D};
  std::uniform_int_distribution<int> nsyl(0, max_syllables);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> expd(1, 3);
  std::bernoulli_distribution neg(0.5);
  Word raw;
  int k = nsyl(rng);
  for (int i = 0; i < k; ++i) {
    std::int64_t e = expd(rng);
    if (neg(rng)) e = -e;
    raw.syllables.push_back({pool[pick(rng)], e});
  }
  return free_reduce(raw);
}

Word random_b_word(testing::Rng& rng, int max_syllables) {
  Word w = random_a_word(rng, max_syllables);
  for (Syllable& s : w.syllables) {
    if (s.letter == Letter::A) s.letter = Letter::B;
    else if (s.letter == Letter::C) s.letter = Letter::D;
    else s.letter = Letter::C;
  }
  return w;
}

}  // namespace

TEST_CASE("conjugate_power_forms on the spec examples") {
  SUBCASE("plain generators") {
    ConjugatePowerForm f = conjugate_power_forms(G23, G23.embed("a"), G23.embed("b"), 2, 3);
    CHECK(f.x.is_identity());
    CHECK(f.k == 1);
    CHECK(f.y.is_identity());
    CHECK(f.l == 1);
  }
  SUBCASE("conjugated generators") {
    ConjugatePowerForm f =
        conjugate_power_forms(G23, G23.embed("d^-1 a d"), G23.embed("c b c^-1"), 2, 3);
    CHECK(f.x == G23.embed("d"));
    CHECK(f.k == 1);
    CHECK(f.y == G23.embed("c^-1"));
    CHECK(f.l == 1);
  }
  SUBCASE("powers of a") {
    ConjugatePowerForm f = conjugate_power_forms(G23, G23.embed("a^3"), G23.embed("b"), 2, 3);
    CHECK(f.x.is_identity());
    CHECK(f.k == 3);
    CHECK(f.l == 1);
    CHECK((3 * 2) % 2 == 0);  // m | k r
  }
}

TEST_CASE("conjugate_power_forms validates its preconditions") {
  CHECK_THROWS_AS(conjugate_power_forms(G23, G23.embed("c"), G23.embed("b"), 2, 3), DomainError);
  CHECK_THROWS_AS(conjugate_power_forms(G23, G23.embed("b"), G23.embed("b"), 2, 3), DomainError);
  CHECK_THROWS_AS(conjugate_power_forms(G23, G23.embed("a"), G23.embed("b"), 0, 3), DomainError);
  // u^r outside H: commutation fails for r = 1
  CHECK_THROWS_AS(conjugate_power_forms(G23, G23.embed("a"), G23.embed("b"), 1, 3), DomainError);
}

TEST_CASE("conjugate_power_forms recomposes on random valid inputs") {
  testing::Rng rng(160914);
  std::uniform_int_distribution<int> kd(-4, 4);
  int done = 0;
  while (done < 200) {
    std::int64_t k = kd(rng);
    std::int64_t l = kd(rng);
    if (k == 0 || l == 0 || k % 2 == 0 || l % 3 == 0) continue;  // keep u, v outside H
    GElem x = G23.embed(random_a_word(rng, 4));
    GElem y = G23.embed(random_b_word(rng, 4));
    GElem u = G23.conjugate(G23.generator_power(FactorKind::A, k), x);
    GElem v = G23.conjugate(G23.generator_power(FactorKind::B, l), y);
    ConjugatePowerForm f = conjugate_power_forms(G23, u, v, 2, 3);
    CHECK(G23.conjugate(G23.generator_power(FactorKind::A, f.k), f.x) == u);
    CHECK(G23.conjugate(G23.generator_power(FactorKind::B, f.l), f.y) == v);
    CHECK((f.k * 2) % 2 == 0);
    CHECK((f.l * 3) % 3 == 0);
    ++done;
  }
}

TEST_CASE("membership in <a><d> and <b><c>") {
  CHECK(in_a_d(G23, G23.embed("a^5 d^-2")));
  CHECK(!in_a_d(G23, G23.embed("d a")));
  CHECK(in_a_d(G23, G23.identity()));
  CHECK(in_a_d(G23, G23.embed("c^3 a d^7")));
  CHECK(!in_a_d(G23, G23.embed("a d a")));
  CHECK(in_b_c(G23, G23.embed("b^2 c^-1")));
  CHECK(!in_b_c(G23, G23.embed("c b")));
  CHECK_THROWS_AS(in_a_d(G23, G23.embed("b")), DomainError);

  auto pq = a_d_exponents(G23, G23.embed("a^5 d^-2"));
  REQUIRE(pq.has_value());
  CHECK(pq->first == 5);
  CHECK(pq->second == -2);
}

TEST_CASE("generating pair criterion") {
  SUBCASE("plain and conjugated generators generate") {
    ConjugatePowerForm f1{G23.identity(), 1, G23.identity(), 1};
    CHECK(is_generating_pair_from_forms(G23, f1));
    ConjugatePowerForm f2{G23.embed("d"), 1, G23.embed("c^-1"), 1};
    CHECK(is_generating_pair_from_forms(G23, f2));
  }
  SUBCASE("|k| != 1 never generates") {
    ConjugatePowerForm f{G23.identity(), 2, G23.identity(), 1};
    CHECK(!is_generating_pair_from_forms(G23, f));
  }
  SUBCASE("bad conjugator shape never generates") {
    ConjugatePowerForm f{G23.embed("d a"), 1, G23.identity(), 1};
    CHECK(!is_generating_pair_from_forms(G23, f));
  }
}

TEST_CASE("generating forms have unimodular abelianization") {
  testing::Rng rng(2718);
  std::uniform_int_distribution<int> small(-3, 3);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < 120; ++i) {
    std::int64_t p = small(rng), q = small(rng), r = small(rng), s = small(rng);
    std::int64_t k = sign(rng) ? 1 : -1;
    std::int64_t l = sign(rng) ? 1 : -1;
    GElem x = G23.embed(free_reduce(Word{{{Letter::A, p}, {Letter::D, q}}}));
    GElem y = G23.embed(free_reduce(Word{{{Letter::B, r}, {Letter::C, s}}}));
    ConjugatePowerForm f{x, k, y, l};
    CHECK(is_generating_pair_from_forms(G23, f));

    GElem u = G23.conjugate(G23.generator_power(FactorKind::A, k), x);
    GElem v = G23.conjugate(G23.generator_power(FactorKind::B, l), y);
    Mat2 mat = abelianization_matrix(G23, AutMap{u, v});
    CHECK((mat.det() == 1 || mat.det() == -1));
  }
}

TEST_CASE("non-generating samples are refuted") {
  testing::Rng rng(979);
  std::uniform_int_distribution<int> kk(2, 4);
  for (int i = 0; i < 60; ++i) {
    std::int64_t k = kk(rng);
    ConjugatePowerForm f{G23.identity(), k, G23.identity(), 1};
    CHECK(!is_generating_pair_from_forms(G23, f));
    GElem u = G23.generator_power(FactorKind::A, k);
    GElem v = G23.generator_power(FactorKind::B, 1);
    Mat2 mat = abelianization_matrix(G23, AutMap{u, v});
    CHECK(mat.det() % k == 0);  // determinant k*1 witnesses non-generation
  }
  // shape violation with determinant 1: witnessed by the criterion itself
  ConjugatePowerForm f{G23.embed("d a"), 1, G23.identity(), 1};
  CHECK(!is_generating_pair_from_forms(G23, f));
}
