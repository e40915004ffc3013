#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmn/aut_words.hpp"
#include "gmn/quotients.hpp"
#include "test_util.hpp"

using namespace gmn;

namespace {

const Gmn G23({2, 3});
const Gmn G22({2, 2});

// All reduced free-product words with at most max_sylls syllables and
// exponents in a small window; used as a conjugator pool.
void enumerate_fp(const FPSpec& spec, int max_sylls, std::vector<FPElem>& out) {
  out.push_back(fp_identity());
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_sylls; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (bool x : {true, false}) {
        if (!out[i].syllables.empty() && out[i].syllables.back().x == x) continue;
        std::int64_t ord = x ? spec.order_x : spec.order_y;
        std::int64_t lo = ord == 0 ? -4 : 1;
        std::int64_t hi = ord == 0 ? 4 : ord - 1;
        for (std::int64_t e = lo; e <= hi; ++e) {
          if (e == 0) continue;
          FPElem next = out[i];
          next.syllables.push_back({x, e});
          out.push_back(std::move(next));
        }
      }
    }
    layer_begin = layer_end;
  }
}

FPElem random_fp(testing::Rng& rng, const FPSpec& spec, int max_sylls) {
  std::uniform_int_distribution<int> nsyl(0, max_sylls);
  std::bernoulli_distribution which(0.5);
  std::uniform_int_distribution<std::int64_t> expd(1, 2);
  std::bernoulli_distribution neg(0.5);
  FPElem acc;
  int k = nsyl(rng);
  for (int i = 0; i < k; ++i) {
    std::int64_t e = expd(rng);
    if (neg(rng)) e = -e;
    acc = fp_multiply(spec, acc, fp_generator(spec, which(rng), e));
  }
  return acc;
}

}  // namespace

TEST_CASE("projection to the quotients") {
  CHECK(project(G23, G23.embed("a^2"), QuotientKind::M).is_identity());
  CHECK(project(G23, G23.embed("b^2"), QuotientKind::M) ==
        fp_generator(quotient_spec(G23, QuotientKind::M), false, 2));
  CHECK(!project(G23, G23.embed("b^2"), QuotientKind::M).is_identity());
  CHECK(project(G23, G23.embed("[a^2, b^3]"), QuotientKind::M).is_identity());
  CHECK(project(G23, G23.embed("[a^2, b^3]"), QuotientKind::N).is_identity());
  CHECK(project(G23, G23.embed("b^3"), QuotientKind::N).is_identity());
  CHECK(project(G23, G23.embed("a^3"), QuotientKind::M) ==
        fp_generator(quotient_spec(G23, QuotientKind::M), true, 1));
}

TEST_CASE("projection is a homomorphism") {
  testing::Rng rng(1110);
  for (QuotientKind q : {QuotientKind::M, QuotientKind::N}) {
    FPSpec spec = quotient_spec(G23, q);
    for (int i = 0; i < 120; ++i) {
      GElem g = G23.embed(testing::random_word(rng, 7));
      GElem h = G23.embed(testing::random_word(rng, 7));
      CHECK(project(G23, G23.multiply(g, h), q) ==
            fp_multiply(spec, project(G23, g, q), project(G23, h, q)));
    }
  }
}

TEST_CASE("free product normal forms") {
  FPSpec cm{2, 0};
  CHECK(fp_multiply(cm, fp_generator(cm, true, 1), fp_generator(cm, true, 1)).is_identity());
  FPElem w = fp_multiply(cm, fp_generator(cm, true, 1), fp_generator(cm, false, -3));
  CHECK(to_string(w) == "x y^-3");
  CHECK(to_string(fp_identity()) == "1");
  CHECK(fp_multiply(cm, w, fp_invert(cm, w)).is_identity());
  CHECK(fp_power(cm, w, 2) == fp_multiply(cm, w, w));
}

TEST_CASE("fp_conjugate decisions") {
  FPSpec cm{2, 0};  // C_2 * Z
  SUBCASE("y and y^-1 are not conjugate") {
    CHECK(!fp_conjugate(cm, fp_generator(cm, false, 1), fp_generator(cm, false, -1)));
  }
  SUBCASE("cyclic rotation") {
    FPElem xy = fp_multiply(cm, fp_generator(cm, true, 1), fp_generator(cm, false, 1));
    FPElem yx = fp_multiply(cm, fp_generator(cm, false, 1), fp_generator(cm, true, 1));
    CHECK(fp_conjugate(cm, xy, yx));
  }
  SUBCASE("equal factor elements") {
    CHECK(fp_conjugate(cm, fp_generator(cm, true, 1), fp_generator(cm, true, 1)));
  }
  SUBCASE("x and x^-1 coincide in C_2") {
    CHECK(fp_conjugate(cm, fp_generator(cm, true, 1), fp_generator(cm, true, -1)));
  }
  FPSpec zn{0, 3};  // Z * C_3
  SUBCASE("x and x^-1 differ in the infinite factor") {
    CHECK(!fp_conjugate(zn, fp_generator(zn, true, 1), fp_generator(zn, true, -1)));
  }
}

TEST_CASE("fp_conjugate agrees with bounded conjugator search") {
  testing::Rng rng(86);
  for (FPSpec spec : {FPSpec{2, 0}, FPSpec{0, 3}, FPSpec{3, 0}}) {
    std::vector<FPElem> pool;
    enumerate_fp(spec, 4, pool);
    int checked = 0;
    for (int i = 0; checked < 60; ++i) {
      FPElem e1 = random_fp(rng, spec, 3);
      FPElem e2 = random_fp(rng, spec, 3);
      if (i % 3 == 0) {
        // force a conjugate pair now and then
        FPElem t = random_fp(rng, spec, 2);
        e2 = fp_multiply(spec, fp_multiply(spec, fp_invert(spec, t), e1), t);
      }
      bool found = false;
      for (const FPElem& t : pool) {
        if (fp_multiply(spec, fp_multiply(spec, fp_invert(spec, t), e1), t) == e2) {
          found = true;
          break;
        }
      }
      CHECK(fp_conjugate(spec, e1, e2) == found);
      ++checked;
    }
  }
}

TEST_CASE("induced maps") {
  SUBCASE("mu induces on G/M") {
    auto im = induced_map(G23, mu_map(G23), QuotientKind::M);
    REQUIRE(im.has_value());
    FPSpec spec = quotient_spec(G23, QuotientKind::M);
    CHECK(im->first == fp_generator(spec, true, 1));
    CHECK(im->second == fp_generator(spec, false, -1));
  }
  SUBCASE("eta-type maps do not induce on G/M") {
    CHECK(!induced_map(G22, eta_map(G22), QuotientKind::M).has_value());
    AutMap lam_eta = compose(G22, lambda_map(G22), eta_map(G22));
    CHECK(!induced_map(G22, lam_eta, QuotientKind::M).has_value());
  }
  SUBCASE("inner maps induce on both quotients") {
    testing::Rng rng(3);
    for (int i = 0; i < 40; ++i) {
      AutMap phi = inner_map(G23, G23.embed(testing::random_word(rng, 6)));
      CHECK(induced_map(G23, phi, QuotientKind::M).has_value());
      CHECK(induced_map(G23, phi, QuotientKind::N).has_value());
    }
  }
}

TEST_CASE("non_inner_witness") {
  FPSpec cm{2, 0};
  SUBCASE("mu-bar on C_2 * Z is witnessed by y") {
    auto w = non_inner_witness(cm, fp_generator(cm, true, 1), fp_generator(cm, false, -1));
    REQUIRE(w.has_value());
    CHECK(!w->generator_x);
  }
  SUBCASE("identity images give no witness") {
    CHECK(!non_inner_witness(cm, fp_generator(cm, true, 1), fp_generator(cm, false, 1)).has_value());
  }
  SUBCASE("lambda-bar on Z * C_3 is witnessed by x") {
    FPSpec zn{0, 3};
    auto w = non_inner_witness(zn, fp_generator(zn, true, -1), fp_generator(zn, false, 1));
    REQUIRE(w.has_value());
    CHECK(w->generator_x);
  }
  SUBCASE("ill-defined images are rejected") {
    CHECK_THROWS_AS(
        non_inner_witness(cm, fp_generator(cm, false, 1), fp_generator(cm, false, 1)),
        DomainError);
  }
}

TEST_CASE("normality decision with certificates") {
  SUBCASE("inner maps are normal") {
    testing::Rng rng(17);
    for (int i = 0; i < 30; ++i) {
      AutMap phi = inner_map(G23, G23.embed(testing::random_word(rng, 6)));
      NormalityVerdict v = is_normal_automorphism(G23, phi);
      CHECK(v.normal);
      CHECK(verify_certificate(G23, phi, v));
    }
  }
  SUBCASE("lambda is refuted in G/N") {
    NormalityVerdict v = is_normal_automorphism(G23, lambda_map(G23));
    CHECK(!v.normal);
    const auto& wit = std::get<WitnessCertificate>(v.certificate);
    CHECK(wit.quotient == QuotientKind::N);
    CHECK(wit.witness.generator_x);
    CHECK(verify_certificate(G23, lambda_map(G23), v));
  }
  SUBCASE("mu and nu are refuted in G/M by the b-witness") {
    for (AutMap phi : {mu_map(G23), compose(G23, lambda_map(G23), mu_map(G23))}) {
      NormalityVerdict v = is_normal_automorphism(G23, phi);
      CHECK(!v.normal);
      const auto& wit = std::get<WitnessCertificate>(v.certificate);
      CHECK(wit.quotient == QuotientKind::M);
      CHECK(!wit.witness.generator_x);
      CHECK(verify_certificate(G23, phi, v));
    }
  }
  SUBCASE("eta-type maps are refuted by the order obstruction") {
    AutMap phi = eta_map(G22);
    NormalityVerdict v = is_normal_automorphism(G22, phi);
    CHECK(!v.normal);
    const auto& obs = std::get<OrderObstructionCertificate>(v.certificate);
    CHECK(obs.quotient == QuotientKind::M);
    CHECK(verify_certificate(G22, phi, v));
  }
  SUBCASE("non-automorphisms are rejected") {
    CHECK_THROWS_AS(is_normal_automorphism(G23, AutMap{G23.embed("a^2"), G23.embed("b")}),
                    DomainError);
  }
  SUBCASE("composites with inner parts keep their certificates") {
    testing::Rng rng(23);
    for (int i = 0; i < 20; ++i) {
      GElem w = G23.embed(testing::random_word(rng, 5));
      AutMap phi = compose(G23, mu_map(G23), inner_map(G23, w));
      NormalityVerdict v = is_normal_automorphism(G23, phi);
      CHECK(!v.normal);
      CHECK(verify_certificate(G23, phi, v));
    }
  }
}
