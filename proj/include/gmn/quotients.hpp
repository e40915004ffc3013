#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gmn/automorphism.hpp"

namespace gmn {

// Quotients by the normal closures M = ncl(a^m) and N = ncl(b^n):
// G/M is the free product of a cycle of order m and an infinite cycle,
// G/N the mirror image. Together with free-product conjugacy these decide
// normality of automorphisms: a non-inner induced map on a quotient is
// witnessed by a generator that is not conjugate to its image.

enum class QuotientKind : std::uint8_t { M, N };

std::string to_string(QuotientKind q);

struct FPSpec {
  std::int64_t order_x;  // 0 = infinite
  std::int64_t order_y;
  bool operator==(const FPSpec&) const = default;
};

struct FPSyllable {
  bool x;  // which free factor
  std::int64_t exp;
  bool operator==(const FPSyllable&) const = default;
};

/// Normal form in the free product: strictly alternating factors,
/// finite-factor exponents in [1, order-1], infinite-factor exponents
/// nonzero.
struct FPElem {
  std::vector<FPSyllable> syllables;
  bool operator==(const FPElem&) const = default;
  bool is_identity() const { return syllables.empty(); }
};

FPSpec quotient_spec(const Gmn& G, QuotientKind q);

FPElem fp_identity();
FPElem fp_generator(const FPSpec& spec, bool x, std::int64_t e);
FPElem fp_multiply(const FPSpec& spec, const FPElem& e1, const FPElem& e2);
FPElem fp_invert(const FPSpec& spec, const FPElem& e);
FPElem fp_power(const FPSpec& spec, const FPElem& e, std::int64_t k);

/// Syllables `x^r` / `y^s` joined by spaces, exponent omitted when 1;
/// identity is "1".
std::string to_string(const FPElem& e);

/// Image of g under a -> x, b -> y (c -> x^m, d -> y^n, one of which dies).
/// Membership in M (resp. N) is project(g) = identity.
FPElem project(const Gmn& G, const GElem& g, QuotientKind q);

/// Conjugacy in the free product: cyclically reduce, then compare inside the
/// (abelian) factor for length <= 1 and up to syllable rotation otherwise.
bool fp_conjugate(const FPSpec& spec, const FPElem& e1, const FPElem& e2);

/// Generator images of the induced map on G/M (resp. G/N), when phi maps the
/// normal closure into itself; nullopt otherwise.
std::optional<std::pair<FPElem, FPElem>> induced_map(const Gmn& G, const AutMap& phi, QuotientKind q);

struct FPWitness {
  bool generator_x;  // the generator whose image is not conjugate to it
  FPElem image;
};

/// One-sided non-innerness test: a generator not conjugate to its image
/// proves the endomorphism is not inner; nullopt makes no claim.
/// Requires the images to define an endomorphism (finite-order check).
std::optional<FPWitness> non_inner_witness(const FPSpec& spec, const FPElem& image_x,
                                           const FPElem& image_y);

// Certificates for the normality verdict, mechanically re-checkable.
struct InnerCertificate {
  GElem w;  // phi = inn_w
};
struct OrderObstructionCertificate {
  QuotientKind quotient;
  FPElem image_of_killed;  // nonidentity image of the killed relator power
};
struct WitnessCertificate {
  QuotientKind quotient;
  FPWitness witness;
};
using NormalityCertificate =
    std::variant<InnerCertificate, OrderObstructionCertificate, WitnessCertificate>;

struct NormalityVerdict {
  bool normal;
  NormalityCertificate certificate;
};

std::string describe(const Gmn& G, const NormalityVerdict& v);

/// Theorem-2 style decision: phi is normal iff its decomposition has trivial
/// kappa (phi inner). Non-normal maps carry a quotient certificate. Throws
/// DomainError when phi is not an automorphism.
NormalityVerdict is_normal_automorphism(const Gmn& G, const AutMap& phi);

/// Re-derives the facts a certificate asserts; used by tests and the CLI.
bool verify_certificate(const Gmn& G, const AutMap& phi, const NormalityVerdict& v);

}  // namespace gmn
