#include "gmn/quotients.hpp"

namespace gmn {

namespace {

std::int64_t factor_order(const FPSpec& spec, bool x) { return x ? spec.order_x : spec.order_y; }

// Reduce an exponent in its factor; 0 means the syllable vanishes.
std::int64_t reduce_exp(const FPSpec& spec, bool x, std::int64_t e) {
  std::int64_t ord = factor_order(spec, x);
  return ord == 0 ? e : floor_mod(e, ord);
}

void fp_push(const FPSpec& spec, FPElem& acc, FPSyllable s) {
  s.exp = reduce_exp(spec, s.x, s.exp);
  if (s.exp == 0) return;
  if (!acc.syllables.empty() && acc.syllables.back().x == s.x) {
    std::int64_t e = reduce_exp(spec, s.x, checked_add(acc.syllables.back().exp, s.exp));
    if (e == 0) {
      acc.syllables.pop_back();
    } else {
      acc.syllables.back().exp = e;
    }
  } else {
    acc.syllables.push_back(s);
  }
}

bool fp_cyclically_reduced(const FPElem& e) {
  return e.syllables.size() <= 1 || e.syllables.front().x != e.syllables.back().x;
}

FPElem fp_cyclic_core(const FPSpec& spec, const FPElem& e) {
  FPElem cur = e;
  while (!fp_cyclically_reduced(cur)) {
    FPSyllable head = cur.syllables.front();
    FPElem rest;
    rest.syllables.assign(cur.syllables.begin() + 1, cur.syllables.end());
    FPElem next = rest;
    fp_push(spec, next, head);
    ensure(next.syllables.size() < cur.syllables.size(), "cyclic reduction must shorten");
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::string to_string(QuotientKind q) { return q == QuotientKind::M ? "M" : "N"; }

FPSpec quotient_spec(const Gmn& G, QuotientKind q) {
  return q == QuotientKind::M ? FPSpec{G.m(), 0} : FPSpec{0, G.n()};
}

FPElem fp_identity() { return FPElem{}; }

FPElem fp_generator(const FPSpec& spec, bool x, std::int64_t e) {
  FPElem out;
  fp_push(spec, out, {x, e});
  return out;
}

FPElem fp_multiply(const FPSpec& spec, const FPElem& e1, const FPElem& e2) {
  FPElem out = e1;
  for (const FPSyllable& s : e2.syllables) fp_push(spec, out, s);
  return out;
}

FPElem fp_invert(const FPSpec& spec, const FPElem& e) {
  FPElem out;
  for (auto it = e.syllables.rbegin(); it != e.syllables.rend(); ++it) {
    fp_push(spec, out, {it->x, checked_neg(it->exp)});
  }
  return out;
}

FPElem fp_power(const FPSpec& spec, const FPElem& e, std::int64_t k) {
  FPElem base = k < 0 ? fp_invert(spec, e) : e;
  std::uint64_t reps = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  if (reps > 1'000'000) throw DomainError("free-product power expansion too large");
  FPElem acc;
  for (std::uint64_t i = 0; i < reps; ++i) acc = fp_multiply(spec, acc, base);
  return acc;
}

std::string to_string(const FPElem& e) {
  if (e.syllables.empty()) return "1";
  std::string out;
  bool first = true;
  for (const FPSyllable& s : e.syllables) {
    if (!first) out += ' ';
    first = false;
    out += s.x ? 'x' : 'y';
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

FPElem project(const Gmn& G, const GElem& g, QuotientKind q) {
  FPSpec spec = quotient_spec(G, q);
  FPElem acc;
  for (const Syllable& s : G.flatten(g).syllables) {
    switch (s.letter) {
      case Letter::A: fp_push(spec, acc, {true, s.exp}); break;
      case Letter::B: fp_push(spec, acc, {false, s.exp}); break;
      case Letter::C: fp_push(spec, acc, {true, checked_mul(G.m(), s.exp)}); break;
      case Letter::D: fp_push(spec, acc, {false, checked_mul(G.n(), s.exp)}); break;
    }
  }
  return acc;
}

bool fp_conjugate(const FPSpec& spec, const FPElem& e1, const FPElem& e2) {
  FPElem c1 = fp_cyclic_core(spec, e1);
  FPElem c2 = fp_cyclic_core(spec, e2);
  if (c1.syllables.size() != c2.syllables.size()) return false;
  if (c1.syllables.size() <= 1) {
    // within a cyclic (abelian) factor conjugacy is equality
    return c1 == c2;
  }
  const std::size_t k = c1.syllables.size();
  for (std::size_t shift = 0; shift < k; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < k && match; ++i) {
      match = c1.syllables[(i + shift) % k] == c2.syllables[i];
    }
    if (match) return true;
  }
  return false;
}

std::optional<std::pair<FPElem, FPElem>> induced_map(const Gmn& G, const AutMap& phi,
                                                     QuotientKind q) {
  GElem killed = q == QuotientKind::M ? G.generator_power(FactorKind::A, G.m())
                                      : G.generator_power(FactorKind::B, G.n());
  if (!project(G, apply(G, phi, killed), q).is_identity()) return std::nullopt;
  return std::make_pair(project(G, phi.image_a, q), project(G, phi.image_b, q));
}

std::optional<FPWitness> non_inner_witness(const FPSpec& spec, const FPElem& image_x,
                                           const FPElem& image_y) {
  if (spec.order_x != 0 && !fp_power(spec, image_x, spec.order_x).is_identity()) {
    throw DomainError("ill-defined images: the image of x does not kill the factor order");
  }
  if (spec.order_y != 0 && !fp_power(spec, image_y, spec.order_y).is_identity()) {
    throw DomainError("ill-defined images: the image of y does not kill the factor order");
  }
  if (!fp_conjugate(spec, image_x, fp_generator(spec, true, 1))) {
    return FPWitness{true, image_x};
  }
  if (!fp_conjugate(spec, image_y, fp_generator(spec, false, 1))) {
    return FPWitness{false, image_y};
  }
  return std::nullopt;
}

std::string describe(const Gmn& G, const NormalityVerdict& v) {
  if (const auto* inner = std::get_if<InnerCertificate>(&v.certificate)) {
    return "normal: the map is inner, conjugation by " + G.to_string(inner->w);
  }
  if (const auto* obstruction = std::get_if<OrderObstructionCertificate>(&v.certificate)) {
    return "not normal: no induced map on G/" + to_string(obstruction->quotient) +
           " (the killed generator power maps to " + to_string(obstruction->image_of_killed) +
           " instead of 1), so some normal subgroup is not preserved";
  }
  const auto& wit = std::get<WitnessCertificate>(v.certificate);
  std::string gen = wit.witness.generator_x ? "x" : "y";
  return "not normal: in G/" + to_string(wit.quotient) + " the generator " + gen +
         " maps to " + to_string(wit.witness.image) + ", which is not conjugate to " + gen +
         "; the induced map on this free product is not inner, hence not normal";
}

NormalityVerdict is_normal_automorphism(const Gmn& G, const AutMap& phi) {
  AutVerdict v = is_automorphism(G, phi);
  if (!v.accepted()) {
    throw DomainError("not an automorphism: " + to_string(*v.reason));
  }
  const AutDecomposition& d = *v.decomposition;
  if (d.kappa.trivial()) {
    return NormalityVerdict{true, InnerCertificate{d.w}};
  }
  if (d.kappa.eta) {
    // factor-swapping maps cannot act on G/M: the generator orders differ
    GElem killed = G.generator_power(FactorKind::A, G.m());
    FPElem image = project(G, apply(G, phi, killed), QuotientKind::M);
    ensure(!image.is_identity(), "eta-type maps must fail to induce on G/M");
    return NormalityVerdict{false, OrderObstructionCertificate{QuotientKind::M, image}};
  }
  // mu and nu flip b: witness in G/M; lambda alone flips a: witness in G/N
  QuotientKind q = d.kappa.mu ? QuotientKind::M : QuotientKind::N;
  FPSpec spec = quotient_spec(G, q);
  auto images = induced_map(G, phi, q);
  ensure(images.has_value(), "sign maps must induce on the chosen quotient");
  auto witness = non_inner_witness(spec, images->first, images->second);
  ensure(witness.has_value(), "sign maps must be witnessed as non-inner on the chosen quotient");
  return NormalityVerdict{false, WitnessCertificate{q, *witness}};
}

bool verify_certificate(const Gmn& G, const AutMap& phi, const NormalityVerdict& v) {
  if (const auto* inner = std::get_if<InnerCertificate>(&v.certificate)) {
    return v.normal && phi == inner_map(G, inner->w);
  }
  if (const auto* obstruction = std::get_if<OrderObstructionCertificate>(&v.certificate)) {
    if (v.normal) return false;
    QuotientKind q = obstruction->quotient;
    GElem killed = q == QuotientKind::M ? G.generator_power(FactorKind::A, G.m())
                                        : G.generator_power(FactorKind::B, G.n());
    FPElem image = project(G, apply(G, phi, killed), q);
    return image == obstruction->image_of_killed && !image.is_identity();
  }
  const auto& wit = std::get<WitnessCertificate>(v.certificate);
  if (v.normal) return false;
  FPSpec spec = quotient_spec(G, wit.quotient);
  auto images = induced_map(G, phi, wit.quotient);
  if (!images.has_value()) return false;
  const FPElem& image = wit.witness.generator_x ? images->first : images->second;
  if (image != wit.witness.image) return false;
  return !fp_conjugate(spec, image, fp_generator(spec, wit.witness.generator_x, 1));
}

}  // namespace gmn
