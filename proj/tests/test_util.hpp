#pragma once

#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "gmn/amalgam.hpp"
#include "gmn/words.hpp"

namespace gmn::testing {

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, int max_syllables, int max_exp = 3, bool include_hd = true) {
  std::uniform_int_distribution<int> nsyl(0, max_syllables);
  std::uniform_int_distribution<int> letter(0, include_hd ? 3 : 1);
  std::uniform_int_distribution<int> expd(1, max_exp);
  std::bernoulli_distribution negate(0.5);
  Word raw;
  int k = nsyl(rng);
  for (int i = 0; i < k; ++i) {
    std::int64_t e = expd(rng);
    if (negate(rng)) e = -e;
    raw.syllables.push_back({static_cast<Letter>(letter(rng)), e});
  }
  return free_reduce(raw);
}

// -- small permutation arithmetic (finite quotient oracle) -------------------

struct Perm {
  std::vector<int> map;
  bool operator==(const Perm&) const = default;
};

inline Perm perm_identity(int deg) {
  Perm p;
  p.map.resize(deg);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

// apply f first, then g
inline Perm perm_compose(const Perm& f, const Perm& g) {
  Perm out;
  out.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
  return out;
}

inline Perm perm_invert(const Perm& f) {
  Perm out;
  out.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[f.map[i]] = static_cast<int>(i);
  return out;
}

inline Perm perm_pow(const Perm& f, std::int64_t e) {
  Perm base = e < 0 ? perm_invert(f) : f;
  std::uint64_t reps = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Perm acc = perm_identity(static_cast<int>(f.map.size()));
  while (reps != 0) {
    if (reps & 1) acc = perm_compose(acc, base);
    reps >>= 1;
    if (reps != 0) base = perm_compose(base, base);
  }
  return acc;
}

inline Perm random_perm(Rng& rng, int deg) {
  Perm p = perm_identity(deg);
  std::shuffle(p.map.begin(), p.map.end(), rng);
  return p;
}

inline Perm eval_word_perm(const Word& w, const Perm& pa, const Perm& pb, std::int64_t m, std::int64_t n) {
  Perm acc = perm_identity(static_cast<int>(pa.map.size()));
  for (const Syllable& s : w.syllables) {
    switch (s.letter) {
      case Letter::A: acc = perm_compose(acc, perm_pow(pa, s.exp)); break;
      case Letter::B: acc = perm_compose(acc, perm_pow(pb, s.exp)); break;
      case Letter::C: acc = perm_compose(acc, perm_pow(pa, checked_mul(m, s.exp))); break;
      case Letter::D: acc = perm_compose(acc, perm_pow(pb, checked_mul(n, s.exp))); break;
    }
  }
  return acc;
}

/// A pair (pa, pb) with commuting pa^m and pb^n, so that a -> pa, b -> pb is
/// a homomorphism from G into the symmetric group.
inline std::pair<Perm, Perm> random_quotient_pair(Rng& rng, int deg, std::int64_t m, std::int64_t n) {
  for (int tries = 0; tries < 2000; ++tries) {
    Perm pa = random_perm(rng, deg);
    Perm pb = random_perm(rng, deg);
    Perm x = perm_pow(pa, m);
    Perm y = perm_pow(pb, n);
    if (perm_compose(x, y) == perm_compose(y, x)) return {pa, pb};
  }
  // Fallback: force pa^m = 1 by building pa from cycles whose length divides m.
  std::int64_t d = 2;
  while (m % d != 0) ++d;
  Perm pa = perm_identity(deg);
  std::vector<int> pts(deg);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  for (std::size_t i = 0; i + static_cast<std::size_t>(d) <= pts.size(); i += d) {
    for (std::int64_t j = 0; j < d; ++j) {
      pa.map[pts[i + j]] = pts[i + (j + 1) % d];
    }
  }
  return {pa, random_perm(rng, deg)};
}

}  // namespace gmn::testing
