#include "gmn/automorphism.hpp"

namespace gmn {

namespace {

bool relation_holds(const Gmn& G, const GElem& ia, const GElem& ib) {
  GElem am = G.power(ia, G.m());
  GElem bn = G.power(ib, G.n());
  return G.multiply(am, bn) == G.multiply(bn, am);
}

Word eta_word(const Word& w) {
  Word out = w;
  for (Syllable& s : out.syllables) {
    switch (s.letter) {
      case Letter::A: s.letter = Letter::B; break;
      case Letter::B: s.letter = Letter::A; break;
      case Letter::C: s.letter = Letter::D; break;
      case Letter::D: s.letter = Letter::C; break;
    }
  }
  return out;
}

GElem eta_elem(const Gmn& G, const GElem& g) {
  ensure(G.m() == G.n(), "eta exists only when m = n");
  return G.embed(eta_word(G.flatten(g)));
}

AutVerdict reject(RejectReason r, std::string detail) {
  return AutVerdict{std::nullopt, r, std::move(detail)};
}

struct OrientedOutcome {
  std::optional<AutVerdict> rejection;
  std::int64_t eps = 0;
  std::int64_t delta = 0;
  GElem w;
};

// Decides the pair (U0, V0) under the assumption (established by the caller)
// that the cyclic core of U0 lies in A \ H. Produces (eps, delta, w) with
// a -> w^-1 a^eps w, b -> w^-1 b^delta w equal to the input map.
OrientedOutcome oriented_pipeline(const Gmn& G, const GElem& U0, const GElem& V0) {
  OrientedOutcome out;
  CyclicDecomposition cd = G.cyclic_decompose(U0);
  GElem t = cd.conjugator;
  GElem U = cd.core;
  GElem V = G.conjugate(V0, t);
  ensure(G.in_factor(U, FactorKind::A) && !G.in_h(U), "oriented pipeline requires an A-core");

  // Walk the conjugating block of the b-image; every stripped factor must lie
  // in A so that the a-image stays inside A.
  while (true) {
    if (G.in_h(V)) {
      out.rejection = reject(RejectReason::ImageInAmalgamBase,
                             "the image of b is conjugate into the amalgamated subgroup");
      return out;
    }
    if (G.in_factor(V, FactorKind::A)) {
      out.rejection = reject(RejectReason::ImagesInSameFactor,
                             "both images are conjugate into the same factor");
      return out;
    }
    if (G.in_factor(V, FactorKind::B)) break;
    if (G.is_cyclically_reduced(V)) {
      out.rejection = reject(RejectReason::ImageNotConjugableIntoFactor,
                             "the image of b has a cyclically reduced core of length > 1");
      return out;
    }
    GElem f{V.head, {V.reps.front()}};
    if (V.reps.front().factor != FactorKind::A) {
      out.rejection = reject(RejectReason::ConjugatorOutsideFactor,
                             "the conjugating block of the image of b starts outside A");
      return out;
    }
    std::int64_t before = G.length(V);
    V = G.conjugate(V, f);
    U = G.conjugate(U, f);
    t = G.multiply(t, f);
    ensure(G.length(V) < before, "stripping the conjugating block must shorten the image");
  }

  ConjugatePowerForm form = conjugate_power_forms(G, U, V, G.m(), G.n());
  if (!is_generating_pair_from_forms(G, form)) {
    std::string detail = "conjugate-power form has k = " + std::to_string(form.k) +
                         ", l = " + std::to_string(form.l);
    if (!in_a_d(G, form.x)) detail += "; x is not of the shape a^p d^q";
    if (!in_b_c(G, form.y)) detail += "; y is not of the shape b^r c^s";
    out.rejection = reject(RejectReason::ImagesDoNotGenerate, std::move(detail));
    return out;
  }
  auto ad = a_d_exponents(G, form.x);
  auto bc = b_c_exponents(G, form.y);
  ensure(ad && bc, "generating forms must expose their exponents");
  // x = a^p0 d^p, y = b^r0 c^s: the a-powers slide past a^eps and the
  // c-powers past b^delta, so w0 = c^s d^p conjugates exactly like (x, y).
  GElem w0 = G.from_h(HElem{bc->second, ad->second});
  out.eps = form.k;
  out.delta = form.l;
  out.w = G.multiply(w0, G.invert(t));
  return out;
}

AutVerdict decide(const Gmn& G, const GElem& U0, const GElem& V0) {
  if (!relation_holds(G, U0, V0)) {
    return reject(RejectReason::NotEndomorphism,
                  "images do not satisfy the defining relation [u^m, v^n] = 1");
  }
  Mat2 mat = abelianization_matrix(G, AutMap{U0, V0});
  std::int64_t det = mat.det();
  if (det != 1 && det != -1) {
    return reject(RejectReason::AbelianizationNotUnimodular,
                  "abelianized determinant is " + std::to_string(det));
  }
  CyclicDecomposition cd = G.cyclic_decompose(U0);
  if (G.length(cd.core) > 1) {
    return reject(RejectReason::ImageNotConjugableIntoFactor,
                  "the image of a has a cyclically reduced core of length > 1");
  }
  if (G.in_h(cd.core)) {
    return reject(RejectReason::ImageInAmalgamBase,
                  "the image of a is conjugate into the amalgamated subgroup");
  }
  const bool swapped = cd.core.reps.front().factor == FactorKind::B;
  if (swapped && G.m() != G.n()) {
    return reject(RejectReason::FactorSwapRequiresEqualExponents,
                  "the images swap the factors, which requires m = n");
  }
  OrientedOutcome oo = swapped ? oriented_pipeline(G, eta_elem(G, U0), eta_elem(G, V0))
                               : oriented_pipeline(G, U0, V0);
  if (oo.rejection) return *oo.rejection;

  AutDecomposition d;
  d.kappa.lambda = oo.eps < 0;
  d.kappa.mu = oo.delta < 0;
  d.kappa.eta = swapped;
  d.w = swapped ? eta_elem(G, oo.w) : oo.w;

  AutMap back = recompose(G, d);
  ensure(back.image_a == U0 && back.image_b == V0, "decomposition must recompose the input map");
  return AutVerdict{std::move(d), std::nullopt, ""};
}

}  // namespace

std::string to_string(const KappaPart& k) {
  std::string s;
  if (k.lambda) s += 'L';
  if (k.mu) s += 'M';
  if (k.eta) s += 'E';
  return s.empty() ? "1" : s;
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::NotEndomorphism: return "not-endomorphism";
    case RejectReason::AbelianizationNotUnimodular: return "abelianization-not-unimodular";
    case RejectReason::ImageNotConjugableIntoFactor: return "image-not-conjugable-into-factor";
    case RejectReason::ImageInAmalgamBase: return "image-in-amalgam-base";
    case RejectReason::ImagesInSameFactor: return "images-in-same-factor";
    case RejectReason::ConjugatorOutsideFactor: return "conjugator-outside-factor";
    case RejectReason::FactorSwapRequiresEqualExponents: return "factor-swap-requires-equal-exponents";
    case RejectReason::ImagesDoNotGenerate: return "images-do-not-generate";
  }
  return "?";
}

AutMap make_endomorphism(const Gmn& G, const GElem& image_a, const GElem& image_b) {
  if (!relation_holds(G, image_a, image_b)) {
    throw DomainError("images do not satisfy the defining relation [u^m, v^n] = 1");
  }
  return AutMap{image_a, image_b};
}

AutMap make_endomorphism(const Gmn& G, const Word& u, const Word& v) {
  return make_endomorphism(G, G.embed(u), G.embed(v));
}

AutMap identity_map(const Gmn& G) {
  return AutMap{G.generator_power(FactorKind::A, 1), G.generator_power(FactorKind::B, 1)};
}

AutMap lambda_map(const Gmn& G) {
  return AutMap{G.generator_power(FactorKind::A, -1), G.generator_power(FactorKind::B, 1)};
}

AutMap mu_map(const Gmn& G) {
  return AutMap{G.generator_power(FactorKind::A, 1), G.generator_power(FactorKind::B, -1)};
}

AutMap eta_map(const Gmn& G) {
  if (G.m() != G.n()) throw DomainError("eta exists only when m = n");
  return AutMap{G.generator_power(FactorKind::B, 1), G.generator_power(FactorKind::A, 1)};
}

AutMap inner_map(const Gmn& G, const GElem& w) {
  return AutMap{G.conjugate(G.generator_power(FactorKind::A, 1), w),
                G.conjugate(G.generator_power(FactorKind::B, 1), w)};
}

GElem apply(const Gmn& G, const AutMap& phi, const GElem& g) {
  GElem acc = G.identity();
  for (const Syllable& s : G.flatten(g).syllables) {
    switch (s.letter) {
      case Letter::A: acc = G.multiply(acc, G.power(phi.image_a, s.exp)); break;
      case Letter::B: acc = G.multiply(acc, G.power(phi.image_b, s.exp)); break;
      case Letter::C: acc = G.multiply(acc, G.power(phi.image_a, checked_mul(G.m(), s.exp))); break;
      case Letter::D: acc = G.multiply(acc, G.power(phi.image_b, checked_mul(G.n(), s.exp))); break;
    }
  }
  return acc;
}

AutMap compose(const Gmn& G, const AutMap& phi, const AutMap& psi) {
  return AutMap{apply(G, psi, phi.image_a), apply(G, psi, phi.image_b)};
}

Mat2 abelianization_matrix(const Gmn& G, const AutMap& phi) {
  auto sums = [&](const GElem& g) {
    std::int64_t ea = 0, eb = 0;
    for (const Syllable& s : G.flatten(g).syllables) {
      switch (s.letter) {
        case Letter::A: ea = checked_add(ea, s.exp); break;
        case Letter::B: eb = checked_add(eb, s.exp); break;
        case Letter::C: ea = checked_add(ea, checked_mul(G.m(), s.exp)); break;
        case Letter::D: eb = checked_add(eb, checked_mul(G.n(), s.exp)); break;
      }
    }
    return std::pair{ea, eb};
  };
  auto [aa, ab] = sums(phi.image_a);
  auto [ba, bb] = sums(phi.image_b);
  return Mat2{aa, ab, ba, bb};
}

AutVerdict is_automorphism(const Gmn& G, const Word& u, const Word& v) {
  return decide(G, G.embed(u), G.embed(v));
}

AutVerdict is_automorphism(const Gmn& G, const AutMap& phi) {
  return decide(G, phi.image_a, phi.image_b);
}

AutMap kappa_map(const Gmn& G, const KappaPart& k) {
  if (k.eta && G.m() != G.n()) throw DomainError("eta exists only when m = n");
  FactorKind fa = k.eta ? FactorKind::B : FactorKind::A;
  FactorKind fb = k.eta ? FactorKind::A : FactorKind::B;
  return AutMap{G.generator_power(fa, k.lambda ? -1 : 1), G.generator_power(fb, k.mu ? -1 : 1)};
}

AutMap recompose(const Gmn& G, const AutDecomposition& d) {
  AutMap k = kappa_map(G, d.kappa);
  return AutMap{G.conjugate(k.image_a, d.w), G.conjugate(k.image_b, d.w)};
}

}  // namespace gmn
