#include "gmn/aut_words.hpp"

#include <cctype>
#include <charconv>

namespace gmn {

namespace {

char letter_char(AutLetter l) {
  switch (l) {
    case AutLetter::Lambda: return 'L';
    case AutLetter::Mu: return 'M';
    case AutLetter::Eta: return 'E';
    case AutLetter::Alpha: return 'A';
    case AutLetter::Beta: return 'B';
  }
  return '?';
}

void push_reduced(std::vector<AutSyllable>& out, AutSyllable s) {
  if (!out.empty() && out.back().letter == s.letter && out.back().sign == -s.sign) {
    out.pop_back();
  } else {
    out.push_back(s);
  }
}

// Right multiplication in K (resp. L = K extended by eta) in the canonical
// order lambda^e1 mu^e2 eta^e3; eta conjugates lambda and mu into each other.
void kappa_mul_right(KappaPart& k, AutLetter x) {
  switch (x) {
    case AutLetter::Lambda:
      (k.eta ? k.mu : k.lambda) ^= true;
      break;
    case AutLetter::Mu:
      (k.eta ? k.lambda : k.mu) ^= true;
      break;
    case AutLetter::Eta:
      k.eta ^= true;
      break;
    default:
      ensure(false, "kappa letters are lambda, mu, eta");
  }
}

// The action of a kappa letter on G, at the word level: lambda negates a and
// c, mu negates b and d, eta swaps a<->b and c<->d.
Word kappa_letter_word_action(AutLetter x, const Word& w) {
  Word out = w;
  for (Syllable& s : out.syllables) {
    switch (x) {
      case AutLetter::Lambda:
        if (s.letter == Letter::A || s.letter == Letter::C) s.exp = checked_neg(s.exp);
        break;
      case AutLetter::Mu:
        if (s.letter == Letter::B || s.letter == Letter::D) s.exp = checked_neg(s.exp);
        break;
      case AutLetter::Eta:
        switch (s.letter) {
          case Letter::A: s.letter = Letter::B; break;
          case Letter::B: s.letter = Letter::A; break;
          case Letter::C: s.letter = Letter::D; break;
          case Letter::D: s.letter = Letter::C; break;
        }
        break;
      default:
        ensure(false, "kappa letters are lambda, mu, eta");
    }
  }
  return free_reduce(out);
}

}  // namespace

AutWord parse_aut_word(std::string_view text) {
  AutWord out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected input after '1'", pos);
    return out;
  }
  while (pos < text.size()) {
    AutLetter l;
    switch (text[pos]) {
      case 'L': l = AutLetter::Lambda; break;
      case 'M': l = AutLetter::Mu; break;
      case 'E': l = AutLetter::Eta; break;
      case 'A': l = AutLetter::Alpha; break;
      case 'B': l = AutLetter::Beta; break;
      default: throw ParseError("expected one of L, M, E, A, B", pos);
    }
    ++pos;
    std::int64_t e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, e);
      if (ec != std::errc() || ptr != text.data() + pos || start == pos) {
        throw ParseError("malformed exponent", start);
      }
      if (e > 1024 || e < -1024) throw ParseError("exponent out of range for automorphism words", start);
    }
    int sign = e < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) push_reduced(out.letters, {l, sign});
    skip_ws();
  }
  return out;
}

std::string to_string(const AutWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  bool first = true;
  for (const AutSyllable& s : w.letters) {
    if (!first) out += ' ';
    first = false;
    out += letter_char(s.letter);
    if (s.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_string(const Gmn& G, const AutCanonical& c) {
  return "kappa=" + to_string(c.kappa) + "; inner=" + G.to_string(c.inner);
}

AutCanonical canonicalize(const Gmn& G, const AutWord& w) {
  AutCanonical acc{KappaPart{}, G.identity()};
  for (const AutSyllable& s : w.letters) {
    switch (s.letter) {
      case AutLetter::Alpha:
        acc.inner = G.multiply(acc.inner, G.generator_power(FactorKind::A, s.sign));
        break;
      case AutLetter::Beta:
        acc.inner = G.multiply(acc.inner, G.generator_power(FactorKind::B, s.sign));
        break;
      default: {
        if (s.letter == AutLetter::Eta && G.m() != G.n()) {
          throw DomainError("eta appears in an automorphism word but m != n");
        }
        // kappa inn_g x = (kappa x) inn_{x(g)}; the kappa letters are
        // involutions, so the sign is immaterial.
        kappa_mul_right(acc.kappa, s.letter);
        acc.inner = G.embed(kappa_letter_word_action(s.letter, G.flatten(acc.inner)));
        break;
      }
    }
  }
  return acc;
}

bool aut_words_equal(const Gmn& G, const AutWord& w1, const AutWord& w2) {
  return canonicalize(G, w1) == canonicalize(G, w2);
}

AutMap evaluate(const Gmn& G, const AutWord& w) {
  AutMap acc = identity_map(G);
  for (const AutSyllable& s : w.letters) {
    AutMap step;
    switch (s.letter) {
      case AutLetter::Lambda: step = lambda_map(G); break;
      case AutLetter::Mu: step = mu_map(G); break;
      case AutLetter::Eta: step = eta_map(G); break;
      case AutLetter::Alpha: step = inner_map(G, G.generator_power(FactorKind::A, s.sign)); break;
      case AutLetter::Beta: step = inner_map(G, G.generator_power(FactorKind::B, s.sign)); break;
    }
    acc = compose(G, acc, step);
  }
  return acc;
}

}  // namespace gmn
