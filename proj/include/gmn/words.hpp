#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gmn/errors.hpp"

namespace gmn {

// Free words over the alphabet {a, b, c, d}.  The letters c and d are kept
// symbolic at this level; the amalgam layer identifies c = a^m and d = b^n.

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline char letter_char(Letter l) {
  switch (l) {
    case Letter::A: return 'a';
    case Letter::B: return 'b';
    case Letter::C: return 'c';
    case Letter::D: return 'd';
  }
  return '?';
}

struct Syllable {
  Letter letter;
  std::int64_t exp;
  bool operator==(const Syllable&) const = default;
};

/// A freely reduced word: no zero exponents, adjacent letters distinct.
/// All constructors of Word values in this library go through free_reduce.
struct Word {
  std::vector<Syllable> syllables;
  bool operator==(const Word&) const = default;
  bool empty() const { return syllables.empty(); }
};

struct GroupParams {
  std::int64_t m;
  std::int64_t n;
};

inline void validate(const GroupParams& p) {
  if (p.m < 2 || p.n < 2) throw DomainError("group parameters require m >= 2 and n >= 2");
}

/// Merge adjacent equal-letter syllables and drop zero exponents. Idempotent.
Word free_reduce(const Word& w);

/// Reverse the syllable list and negate exponents.
Word invert_word(const Word& w);

/// Freely reduced concatenation.
Word concat(const Word& lhs, const Word& rhs);

/// Freely reduced k-th power. Guards against pathological expansion sizes.
Word word_pow(const Word& w, std::int64_t k);

/// Parse the expression grammar:
///   word := term { ("*" | WS) term } | "1" ;
///   term := atom [ "^" int ] ;
///   atom := "a" | "b" | "c" | "d" | "(" word ")" | "[" word "," word "]" ;
/// The commutator [u,v] stands for u v u^-1 v^-1.
Word parse_word(std::string_view text);

/// Syllables joined by single spaces, exponent omitted when 1; empty word is "1".
std::string to_string(const Word& w);

}  // namespace gmn
