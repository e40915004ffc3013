#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmn/words.hpp"

namespace gmn {

// Exact arithmetic in G = <a, b; [a^m, b^n] = 1>, m, n >= 2, through its
// decomposition as an amalgamated free product:
//
//   H = <c, d; [c, d] = 1>           free abelian of rank 2
//   A = <a> * H  amalgamated over  a^m = c
//   B = H * <b>  amalgamated over  d = b^n
//   G = A * B   amalgamated over  H
//
// Inside A the amalgamated subgroup <c> is central, so every element of A
// has a unique form  c^t x_1 ... x_k  where the x_i alternate between
// a-syllables a^r (0 < r < m) and d-syllables d^s (s != 0).  B mirrors this
// with d central and syllables b^r (0 < r < n), c^s.
//
// At the top level every element of G has a unique form  h r_1 ... r_k
// where h in H and the r_i alternate between the chosen coset
// representatives of H in A and in B: factor normal forms with zero head
// whose first syllable is an a-syllable (resp. b-syllable).  H-parts created
// during multiplication bubble leftward into the head.
//
// Equality of group elements is structural equality of these forms.

struct HElem {
  std::int64_t p = 0;  // exponent of c
  std::int64_t q = 0;  // exponent of d
  bool operator==(const HElem&) const = default;
  bool is_identity() const { return p == 0 && q == 0; }
};

enum class FactorKind : std::uint8_t { A = 0, B = 1 };

inline FactorKind other(FactorKind f) {
  return f == FactorKind::A ? FactorKind::B : FactorKind::A;
}

// One syllable of a factor normal form. `primary` selects the generator of
// the cyclic free factor (a in A, b in B); otherwise the syllable is a power
// of the other basis element of H (d in A, c in B).
struct FactorSyllable {
  bool primary;
  std::int64_t exp;
  bool operator==(const FactorSyllable&) const = default;
};

// Normal form in A or B: head exponent of the central element (c in A,
// d in B) followed by strictly alternating syllables.
struct FactorElem {
  std::int64_t head = 0;
  std::vector<FactorSyllable> syllables;
  bool operator==(const FactorElem&) const = default;
};

// Coset representative of H in a factor: a FactorElem with head 0 whose
// first syllable is primary.
struct Rep {
  FactorKind factor;
  FactorElem elem;
  bool operator==(const Rep&) const = default;
};

struct GElem {
  HElem head;
  std::vector<Rep> reps;  // strictly alternating factors
  bool operator==(const GElem&) const = default;
  bool is_identity() const { return head.is_identity() && reps.empty(); }
};

struct CyclicDecomposition {
  GElem conjugator;  // u
  GElem core;        // v, cyclically reduced; g = u v u^-1
};

enum class HIntersection : std::uint8_t { AllOfH, CyclicC, CyclicD, Trivial };

std::string to_string(HIntersection h);

struct FactorRoot {
  GElem x;
  GElem y;  // g = x^-1 y x with y in a factor and y^k in H
};

struct PowerExpression {
  GElem generator;
  std::int64_t exponent;  // generator^exponent = v
};

/// Arithmetic context for a fixed pair (m, n).
class Gmn {
 public:
  explicit Gmn(GroupParams params);

  const GroupParams& params() const { return params_; }
  std::int64_t m() const { return params_.m; }
  std::int64_t n() const { return params_.n; }
  std::int64_t modulus(FactorKind f) const { return f == FactorKind::A ? params_.m : params_.n; }

  GElem identity() const { return GElem{}; }

  // -- normal forms ---------------------------------------------------------

  /// Image of a free word under a -> a, b -> b, c -> a^m, d -> b^n, fully
  /// normalized. embed(w).is_identity() decides the word problem.
  GElem embed(const Word& w) const;
  GElem embed(std::string_view text) const { return embed(parse_word(text)); }

  GElem multiply(const GElem& g1, const GElem& g2) const;
  GElem invert(const GElem& g) const;
  GElem power(const GElem& g, std::int64_t e) const;
  /// t^-1 g t
  GElem conjugate(const GElem& g, const GElem& t) const;

  /// Number of factors of the reduced form; 1 for elements of A or B
  /// (including H and the identity).
  std::int64_t length(const GElem& g) const;

  bool in_h(const GElem& g) const { return g.reps.empty(); }
  bool in_factor(const GElem& g, FactorKind f) const;
  /// Requires in_h(g).
  HElem to_h(const GElem& g) const;

  // -- conjugation structure ------------------------------------------------

  bool is_cyclically_reduced(const GElem& g) const;
  CyclicDecomposition cyclic_decompose(const GElem& g) const;

  /// AllOfH if g in H; CyclicC if g in A \ H; CyclicD if g in B \ H;
  /// Trivial otherwise.
  HIntersection h_intersection(const GElem& g) const;

  /// Conjugate-root extraction. For g outside `factor` with g^k in it, this
  /// is root extraction in G itself; for g inside `factor` (but not in its
  /// cyclic part) the same extraction runs within the factor's own amalgam
  /// decomposition. Either way g = x^-1 y x with y in a factor and y^k in H.
  FactorRoot root_in_factor(const GElem& g, std::int64_t k, FactorKind factor) const;

  /// For u cyclically reduced of length > 1 and v commuting with u, finds
  /// the generator z of the (cyclic) subgroup <u, v> and the exponent k with
  /// z^k = v.
  PowerExpression express_as_power(const GElem& u, const GElem& v) const;

  // -- conversions -----------------------------------------------------------

  /// g as a freely reduced word over {a, b, c, d}.
  Word flatten(const GElem& g) const;

  /// Head as `c^p d^q` (zero terms omitted), reps serialized per the word
  /// grammar, segments joined by ` | `; identity is "1". Two GElems are
  /// equal iff their serializations are byte-identical.
  std::string to_string(const GElem& g) const;

  /// Full factor normal form of g (head folded in). Requires in_factor(g, f).
  FactorElem to_factor_elem(const GElem& g, FactorKind f) const;
  /// Normalize an arbitrary factor normal form into a GElem.
  GElem from_factor_elem(FactorKind f, const FactorElem& fe) const;

  GElem from_h(const HElem& h) const;
  /// a^e (f = A) or b^e (f = B).
  GElem generator_power(FactorKind f, std::int64_t e) const;

 private:
  void push_h_from(GElem& g, HElem h, std::size_t upto) const;
  void push_factor(GElem& g, FactorKind f, const FactorElem& x) const;
  GElem leading_factor(const GElem& g) const;

  GroupParams params_;
};

// Factor-level arithmetic, shared by the A and B sides. Exposed mainly for
// the generation machinery and for tests.
namespace factor {

FactorElem mul(const FactorElem& x, const FactorElem& y, std::int64_t modulus);
FactorElem inv(const FactorElem& x, std::int64_t modulus);
FactorElem pow(const FactorElem& x, std::int64_t e, std::int64_t modulus);

/// a^e (resp. b^e) as a factor normal form.
FactorElem from_primary_power(std::int64_t e, std::int64_t modulus);

bool is_h(const FactorElem& x);
/// Membership in the cyclic part <a> (resp. <b>).
bool in_cyclic_part(const FactorElem& x);
/// For is_h(x): the (head, other-syllable) exponent pair.
std::pair<std::int64_t, std::int64_t> to_h_pair(const FactorElem& x);
/// For in_cyclic_part(x): the exponent e with x = a^e (resp. b^e).
std::int64_t to_primary_exp(const FactorElem& x, std::int64_t modulus);

/// Split into the H-part (head, leading other-syllable) and the coset
/// representative (head 0, first syllable primary).
std::pair<std::pair<std::int64_t, std::int64_t>, FactorElem> decompose(const FactorElem& x);

/// Factors of the reduced form within the factor's own amalgam; 1 when the
/// syllable list has at most one entry.
std::int64_t inner_length(const FactorElem& x);
bool inner_cyclically_reduced(const FactorElem& x);
/// x = u * core * u^-1 with core inner-cyclically reduced.
std::pair<FactorElem, FactorElem> inner_cyclic_decompose(const FactorElem& x, std::int64_t modulus);

}  // namespace factor

}  // namespace gmn
