#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gmn/amalgam.hpp"
#include "gmn/generation.hpp"

namespace gmn {

// Endomorphisms of G as generator-image pairs, the automorphism decision
// procedure, and the canonical factorization phi = kappa * inn_w where kappa
// ranges over the sign-flip/swap maps
//   lambda: a -> a^-1, b -> b;   mu: a -> a, b -> b^-1;
//   eta (m = n only): a -> b, b -> a
// and inn_w(g) = w^-1 g w.

struct AutMap {
  GElem image_a;
  GElem image_b;
  bool operator==(const AutMap&) const = default;
};

// An element of K = {1, lambda, mu, lambda*mu} (Klein four-group), extended
// by eta when m = n; stored in the canonical order lambda^e1 mu^e2 eta^e3.
struct KappaPart {
  bool lambda = false;
  bool mu = false;
  bool eta = false;
  bool operator==(const KappaPart&) const = default;
  bool trivial() const { return !lambda && !mu && !eta; }
};

std::string to_string(const KappaPart& k);

struct AutDecomposition {
  KappaPart kappa;
  GElem w;
  bool operator==(const AutDecomposition&) const = default;
};

enum class RejectReason : std::uint8_t {
  NotEndomorphism,                  // [u^m, v^n] != 1
  AbelianizationNotUnimodular,      // exponent-sum determinant is not +-1
  ImageNotConjugableIntoFactor,     // cyclically reduced core of length > 1
  ImageInAmalgamBase,               // an image is conjugate into H
  ImagesInSameFactor,               // both cores land in the same factor
  ConjugatorOutsideFactor,          // conjugating factor on the wrong side
  FactorSwapRequiresEqualExponents, // a->B, b->A needs m = n
  ImagesDoNotGenerate,              // generating-pair criterion fails
};

std::string to_string(RejectReason r);

struct AutVerdict {
  std::optional<AutDecomposition> decomposition;
  std::optional<RejectReason> reason;
  std::string detail;
  bool accepted() const { return decomposition.has_value(); }
};

struct Mat2 {
  std::int64_t a_on_a, a_on_b;  // exponent sums of the image of a
  std::int64_t b_on_a, b_on_b;  // exponent sums of the image of b
  std::int64_t det() const { return checked_sub(checked_mul(a_on_a, b_on_b), checked_mul(a_on_b, b_on_a)); }
  bool operator==(const Mat2&) const = default;
};

/// Builds the endomorphism a -> image_a, b -> image_b, verifying the
/// defining relation [image_a^m, image_b^n] = 1. Throws DomainError if the
/// relation fails.
AutMap make_endomorphism(const Gmn& G, const GElem& image_a, const GElem& image_b);
AutMap make_endomorphism(const Gmn& G, const Word& u, const Word& v);

AutMap identity_map(const Gmn& G);
AutMap lambda_map(const Gmn& G);
AutMap mu_map(const Gmn& G);
/// Requires m = n.
AutMap eta_map(const Gmn& G);
/// inn_w: g -> w^-1 g w.
AutMap inner_map(const Gmn& G, const GElem& w);

GElem apply(const Gmn& G, const AutMap& phi, const GElem& g);

/// phi first, then psi (postfix composition).
AutMap compose(const Gmn& G, const AutMap& phi, const AutMap& psi);

Mat2 abelianization_matrix(const Gmn& G, const AutMap& phi);

/// The decision procedure: accepts with the unique decomposition
/// kappa * inn_w, or rejects with the pipeline stage that excluded the pair.
AutVerdict is_automorphism(const Gmn& G, const Word& u, const Word& v);
AutVerdict is_automorphism(const Gmn& G, const AutMap& phi);

/// Evaluate kappa, then inn_w. Exact inverse of the accepted branch of
/// is_automorphism. Throws DomainError when kappa.eta is set while m != n.
AutMap recompose(const Gmn& G, const AutDecomposition& d);

/// Images of kappa alone (w = 1).
AutMap kappa_map(const Gmn& G, const KappaPart& k);

}  // namespace gmn
