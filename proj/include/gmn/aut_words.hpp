#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gmn/automorphism.hpp"

namespace gmn {

// Words over the automorphism generators {lambda, mu, eta, alpha, beta}
// (eta only when m = n), their canonical forms kappa * inn_g, and evaluation
// to generator-image pairs. Equality of canonical forms decides the word
// problem of Aut G.

enum class AutLetter : std::uint8_t { Lambda, Mu, Eta, Alpha, Beta };

struct AutSyllable {
  AutLetter letter;
  int sign;  // +1 or -1
  bool operator==(const AutSyllable&) const = default;
};

/// Freely reduced as written; relations are applied only by canonicalize.
struct AutWord {
  std::vector<AutSyllable> letters;
  bool operator==(const AutWord&) const = default;
};

/// Letters `L`, `M`, `E`, `A`, `B`, each optionally followed by `^<int>`,
/// whitespace separated. An exponent expands into |int| copies of the
/// signed letter; "1" denotes the empty word.
AutWord parse_aut_word(std::string_view text);
std::string to_string(const AutWord& w);

struct AutCanonical {
  KappaPart kappa;
  GElem inner;
  bool operator==(const AutCanonical&) const = default;
};

/// `kappa=<subset of L,M,E>; inner=<element>`; the trivial subset prints 1.
std::string to_string(const Gmn& G, const AutCanonical& c);

/// Pushes lambda/mu/eta letters left through the inner part via the
/// conjugation action of kappa on inner automorphisms, reduces the kappa
/// part in the Klein group (extended by eta when m = n) and normalizes the
/// inner part in G. Throws DomainError when eta appears while m != n.
AutCanonical canonicalize(const Gmn& G, const AutWord& w);

/// The word problem of Aut G: equality of canonical forms.
bool aut_words_equal(const Gmn& G, const AutWord& w1, const AutWord& w2);

/// Composition of the generator automorphisms, left to right, evaluated
/// independently of canonicalize (alpha = inn_a, beta = inn_b).
AutMap evaluate(const Gmn& G, const AutWord& w);

}  // namespace gmn
