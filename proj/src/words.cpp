#include "gmn/words.hpp"

#include <cctype>
#include <charconv>

namespace gmn {

Word free_reduce(const Word& w) {
  Word out;
  out.syllables.reserve(w.syllables.size());
  for (const Syllable& s : w.syllables) {
    if (s.exp == 0) continue;
    if (!out.syllables.empty() && out.syllables.back().letter == s.letter) {
      std::int64_t e = checked_add(out.syllables.back().exp, s.exp);
      if (e == 0) {
        out.syllables.pop_back();
      } else {
        out.syllables.back().exp = e;
      }
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    out.syllables.push_back({it->letter, checked_neg(it->exp)});
  }
  return out;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word raw;
  raw.syllables.reserve(lhs.syllables.size() + rhs.syllables.size());
  raw.syllables.insert(raw.syllables.end(), lhs.syllables.begin(), lhs.syllables.end());
  raw.syllables.insert(raw.syllables.end(), rhs.syllables.begin(), rhs.syllables.end());
  return free_reduce(raw);
}

namespace {
constexpr std::int64_t kMaxExpandedSyllables = 1'000'000;
}

Word word_pow(const Word& w, std::int64_t k) {
  if (k == 0) return Word{};
  Word base = free_reduce(w);
  std::int64_t reps = k < 0 ? checked_neg(k) : k;
  if (base.syllables.size() > 0 &&
      reps > kMaxExpandedSyllables / static_cast<std::int64_t>(base.syllables.size())) {
    throw DomainError("word power expansion too large");
  }
  if (k < 0) base = invert_word(base);
  Word out;
  for (std::int64_t i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  std::int64_t parse_int() {
    std::size_t start = pos;
    if (!at_end() && peek() == '-') ++pos;
    std::size_t digits_start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits_start) fail("expected integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec == std::errc::result_out_of_range) throw ParseError("exponent overflow", start);
    if (ec != std::errc() || ptr != text.data() + pos) throw ParseError("malformed integer", start);
    return value;
  }

  Word parse_atom() {
    char ch = peek();
    switch (ch) {
      case 'a': ++pos; return Word{{{Letter::A, 1}}};
      case 'b': ++pos; return Word{{{Letter::B, 1}}};
      case 'c': ++pos; return Word{{{Letter::C, 1}}};
      case 'd': ++pos; return Word{{{Letter::D, 1}}};
      case '1': ++pos; return Word{};
      case '(': {
        ++pos;
        Word inner = parse_word_seq(")");
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      case '[': {
        ++pos;
        Word u = parse_word_seq(",]");
        if (at_end() || peek() != ',') fail("expected ',' in commutator");
        ++pos;
        Word v = parse_word_seq("]");
        if (at_end() || peek() != ']') fail("expected ']'");
        ++pos;
        // [u, v] = u v u^-1 v^-1
        return concat(concat(u, v), concat(invert_word(u), invert_word(v)));
      }
      default:
        fail("expected one of a, b, c, d, 1, '(', '['");
    }
  }

  Word parse_term() {
    Word atom = parse_atom();
    // '^' binds immediately, without intervening whitespace
    if (!at_end() && peek() == '^') {
      ++pos;
      std::int64_t e = parse_int();
      if (atom.syllables.size() == 1) {
        atom.syllables[0].exp = checked_mul(atom.syllables[0].exp, e);
        return free_reduce(atom);
      }
      return word_pow(atom, e);
    }
    return atom;
  }

  // Parses a sequence of terms until end of input or a char in `stop`.
  Word parse_word_seq(std::string_view stop) {
    Word acc;
    skip_ws();
    if (at_end() || stop.find(peek()) != std::string_view::npos) {
      fail("expected a word");
    }
    while (true) {
      acc = concat(acc, parse_term());
      std::size_t before = pos;
      skip_ws();
      if (at_end()) break;
      if (stop.find(peek()) != std::string_view::npos) break;
      if (peek() == '*') {
        ++pos;
        skip_ws();
      } else if (before == pos) {
        fail("expected separator between terms");
      }
      if (at_end() || stop.find(peek()) != std::string_view::npos) {
        fail("expected a term after separator");
      }
    }
    return acc;
  }
};

}  // namespace

Word parse_word(std::string_view text) {
  Parser p{text};
  Word w = p.parse_word_seq("");
  p.skip_ws();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return free_reduce(w);
}

std::string to_string(const Word& w) {
  if (w.syllables.empty()) return "1";
  std::string out;
  bool first = true;
  for (const Syllable& s : w.syllables) {
    if (!first) out += ' ';
    first = false;
    out += letter_char(s.letter);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace gmn
