#include "gmn/amalgam.hpp"

#include <utility>

namespace gmn {

namespace factor {

namespace {

constexpr std::int64_t kMaxPowerSyllables = 4'000'000;

// Appends one syllable at the right end, merging with the tail and carrying
// primary overflow into the head.
void push_syllable(FactorElem& x, FactorSyllable s, std::int64_t modulus) {
  if (!s.primary && s.exp == 0) return;
  if (s.primary) {
    std::int64_t carry = floor_div(s.exp, modulus);
    x.head = checked_add(x.head, carry);
    s.exp = floor_mod(s.exp, modulus);
    if (s.exp == 0) return;
  }
  if (!x.syllables.empty() && x.syllables.back().primary == s.primary) {
    std::int64_t e = checked_add(x.syllables.back().exp, s.exp);
    if (s.primary) {
      x.head = checked_add(x.head, floor_div(e, modulus));
      e = floor_mod(e, modulus);
    }
    if (e == 0) {
      x.syllables.pop_back();
    } else {
      x.syllables.back().exp = e;
    }
  } else {
    x.syllables.push_back(s);
  }
}

}  // namespace

FactorElem mul(const FactorElem& x, const FactorElem& y, std::int64_t modulus) {
  FactorElem out = x;
  out.head = checked_add(out.head, y.head);
  for (const FactorSyllable& s : y.syllables) push_syllable(out, s, modulus);
  return out;
}

FactorElem inv(const FactorElem& x, std::int64_t modulus) {
  FactorElem out;
  out.head = checked_neg(x.head);
  out.syllables.reserve(x.syllables.size());
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    if (it->primary) {
      // (a^r)^-1 = c^-1 a^(m-r)
      out.head = checked_sub(out.head, 1);
      out.syllables.push_back({true, modulus - it->exp});
    } else {
      out.syllables.push_back({false, checked_neg(it->exp)});
    }
  }
  return out;
}

FactorElem from_primary_power(std::int64_t e, std::int64_t modulus) {
  FactorElem out;
  out.head = floor_div(e, modulus);
  std::int64_t r = floor_mod(e, modulus);
  if (r != 0) out.syllables.push_back({true, r});
  return out;
}

bool is_h(const FactorElem& x) {
  return x.syllables.empty() || (x.syllables.size() == 1 && !x.syllables[0].primary);
}

bool in_cyclic_part(const FactorElem& x) {
  return x.syllables.empty() || (x.syllables.size() == 1 && x.syllables[0].primary);
}

std::pair<std::int64_t, std::int64_t> to_h_pair(const FactorElem& x) {
  ensure(is_h(x), "to_h_pair: element not in H");
  return {x.head, x.syllables.empty() ? 0 : x.syllables[0].exp};
}

std::int64_t to_primary_exp(const FactorElem& x, std::int64_t modulus) {
  ensure(in_cyclic_part(x), "to_primary_exp: element not in the cyclic part");
  std::int64_t base = checked_mul(x.head, modulus);
  return x.syllables.empty() ? base : checked_add(base, x.syllables[0].exp);
}

FactorElem pow(const FactorElem& x, std::int64_t e, std::int64_t modulus) {
  if (e == 0) return FactorElem{};
  if (is_h(x)) {
    FactorElem out;
    out.head = checked_mul(x.head, e);
    if (!x.syllables.empty()) out.syllables.push_back({false, checked_mul(x.syllables[0].exp, e)});
    return out;
  }
  if (in_cyclic_part(x)) {
    return from_primary_power(checked_mul(to_primary_exp(x, modulus), e), modulus);
  }
  std::uint64_t reps = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  if (reps > static_cast<std::uint64_t>(kMaxPowerSyllables / (x.syllables.size() + 1))) {
    throw DomainError("factor power expansion too large");
  }
  FactorElem base = e < 0 ? inv(x, modulus) : x;
  FactorElem acc;
  while (reps != 0) {
    if (reps & 1) acc = mul(acc, base, modulus);
    reps >>= 1;
    if (reps != 0) base = mul(base, base, modulus);
  }
  return acc;
}

std::pair<std::pair<std::int64_t, std::int64_t>, FactorElem> decompose(const FactorElem& x) {
  FactorElem rep;
  std::int64_t lead = 0;
  std::size_t begin = 0;
  if (!x.syllables.empty() && !x.syllables[0].primary) {
    lead = x.syllables[0].exp;
    begin = 1;
  }
  rep.syllables.assign(x.syllables.begin() + begin, x.syllables.end());
  return {{x.head, lead}, rep};
}

std::int64_t inner_length(const FactorElem& x) {
  return x.syllables.empty() ? 1 : static_cast<std::int64_t>(x.syllables.size());
}

bool inner_cyclically_reduced(const FactorElem& x) {
  return x.syllables.size() <= 1 || x.syllables.front().primary != x.syllables.back().primary;
}

std::pair<FactorElem, FactorElem> inner_cyclic_decompose(const FactorElem& x, std::int64_t modulus) {
  FactorElem u;
  FactorElem cur = x;
  while (!inner_cyclically_reduced(cur)) {
    FactorElem f{cur.head, {cur.syllables[0]}};
    FactorElem next = mul(mul(inv(f, modulus), cur, modulus), f, modulus);
    ensure(inner_length(next) < inner_length(cur), "inner cyclic reduction must shorten");
    cur = next;
    u = mul(u, f, modulus);
  }
  return {u, cur};
}

}  // namespace factor

namespace {

constexpr std::int64_t kMaxPowerReps = 4'000'000;

HElem h_add(const HElem& x, const HElem& y) {
  return {checked_add(x.p, y.p), checked_add(x.q, y.q)};
}

// H as a factor normal form: in A the head carries c and the other syllable
// carries d; in B the roles swap.
FactorElem h_to_fe(FactorKind f, const HElem& h) {
  FactorElem out;
  if (f == FactorKind::A) {
    out.head = h.p;
    if (h.q != 0) out.syllables.push_back({false, h.q});
  } else {
    out.head = h.q;
    if (h.p != 0) out.syllables.push_back({false, h.p});
  }
  return out;
}

HElem pair_to_h(FactorKind f, std::pair<std::int64_t, std::int64_t> hp) {
  return f == FactorKind::A ? HElem{hp.first, hp.second} : HElem{hp.second, hp.first};
}

}  // namespace

std::string to_string(HIntersection h) {
  switch (h) {
    case HIntersection::AllOfH: return "all-of-H";
    case HIntersection::CyclicC: return "cyclic-c";
    case HIntersection::CyclicD: return "cyclic-d";
    case HIntersection::Trivial: return "trivial";
  }
  return "?";
}

Gmn::Gmn(GroupParams params) : params_(params) { validate(params_); }

void Gmn::push_h_from(GElem& g, HElem h, std::size_t upto) const {
  for (std::size_t i = upto; i-- > 0;) {
    if (h.is_identity()) break;
    Rep& r = g.reps[i];
    FactorElem fe = factor::mul(r.elem, h_to_fe(r.factor, h), modulus(r.factor));
    auto [hp, rep] = factor::decompose(fe);
    ensure(!rep.syllables.empty() && rep.syllables[0].primary, "H push must leave a proper representative");
    r.elem = std::move(rep);
    h = pair_to_h(r.factor, hp);
  }
  g.head = h_add(g.head, h);
}

void Gmn::push_factor(GElem& g, FactorKind f, const FactorElem& x) const {
  if (factor::is_h(x)) {
    push_h_from(g, pair_to_h(f, factor::to_h_pair(x)), g.reps.size());
    return;
  }
  if (!g.reps.empty() && g.reps.back().factor == f) {
    FactorElem y = factor::mul(g.reps.back().elem, x, modulus(f));
    if (factor::is_h(y)) {
      HElem h = pair_to_h(f, factor::to_h_pair(y));
      g.reps.pop_back();
      push_h_from(g, h, g.reps.size());
    } else {
      auto [hp, rep] = factor::decompose(y);
      g.reps.back().elem = std::move(rep);
      push_h_from(g, pair_to_h(f, hp), g.reps.size() - 1);
    }
  } else {
    auto [hp, rep] = factor::decompose(x);
    ensure(!rep.syllables.empty() && rep.syllables[0].primary, "representative of a non-H element must be proper");
    std::size_t prev = g.reps.size();
    g.reps.push_back({f, std::move(rep)});
    push_h_from(g, pair_to_h(f, hp), prev);
  }
}

GElem Gmn::embed(const Word& w) const {
  GElem acc;
  for (const Syllable& s : w.syllables) {
    switch (s.letter) {
      case Letter::A: push_factor(acc, FactorKind::A, factor::from_primary_power(s.exp, m())); break;
      case Letter::B: push_factor(acc, FactorKind::B, factor::from_primary_power(s.exp, n())); break;
      case Letter::C: push_h_from(acc, HElem{s.exp, 0}, acc.reps.size()); break;
      case Letter::D: push_h_from(acc, HElem{0, s.exp}, acc.reps.size()); break;
    }
  }
  return acc;
}

GElem Gmn::multiply(const GElem& g1, const GElem& g2) const {
  GElem acc = g1;
  push_h_from(acc, g2.head, acc.reps.size());
  for (const Rep& r : g2.reps) push_factor(acc, r.factor, r.elem);
  return acc;
}

GElem Gmn::invert(const GElem& g) const {
  GElem acc;
  for (auto it = g.reps.rbegin(); it != g.reps.rend(); ++it) {
    push_factor(acc, it->factor, factor::inv(it->elem, modulus(it->factor)));
  }
  push_h_from(acc, HElem{checked_neg(g.head.p), checked_neg(g.head.q)}, acc.reps.size());
  return acc;
}

GElem Gmn::power(const GElem& g, std::int64_t e) const {
  if (e == 0) return identity();
  if (in_h(g)) return from_h(HElem{checked_mul(g.head.p, e), checked_mul(g.head.q, e)});
  if (g.reps.size() == 1) {
    FactorKind f = g.reps[0].factor;
    return from_factor_elem(f, factor::pow(to_factor_elem(g, f), e, modulus(f)));
  }
  CyclicDecomposition cd = cyclic_decompose(g);
  GElem core_pow;
  if (cd.core.reps.size() >= 2) {
    std::uint64_t reps = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    if (reps > static_cast<std::uint64_t>(kMaxPowerReps) / cd.core.reps.size()) {
      throw DomainError("power expansion too large");
    }
    GElem base = e < 0 ? invert(cd.core) : cd.core;
    GElem acc = identity();
    while (reps != 0) {
      if (reps & 1) acc = multiply(acc, base);
      reps >>= 1;
      if (reps != 0) base = multiply(base, base);
    }
    core_pow = std::move(acc);
  } else {
    core_pow = power(cd.core, e);
  }
  return multiply(multiply(cd.conjugator, core_pow), invert(cd.conjugator));
}

GElem Gmn::conjugate(const GElem& g, const GElem& t) const {
  return multiply(multiply(invert(t), g), t);
}

std::int64_t Gmn::length(const GElem& g) const {
  return g.reps.empty() ? 1 : static_cast<std::int64_t>(g.reps.size());
}

bool Gmn::in_factor(const GElem& g, FactorKind f) const {
  return g.reps.empty() || (g.reps.size() == 1 && g.reps[0].factor == f);
}

HElem Gmn::to_h(const GElem& g) const {
  if (!in_h(g)) throw DomainError("element does not lie in the amalgamated subgroup");
  return g.head;
}

bool Gmn::is_cyclically_reduced(const GElem& g) const {
  return g.reps.size() <= 1 || g.reps.front().factor != g.reps.back().factor;
}

GElem Gmn::leading_factor(const GElem& g) const {
  ensure(!g.reps.empty(), "leading factor of an H element");
  return GElem{g.head, {g.reps.front()}};
}

CyclicDecomposition Gmn::cyclic_decompose(const GElem& g) const {
  GElem u = identity();
  GElem v = g;
  while (!is_cyclically_reduced(v)) {
    GElem f = leading_factor(v);
    GElem next = conjugate(v, f);
    ensure(length(next) < length(v), "cyclic reduction must shorten");
    u = multiply(u, f);
    v = std::move(next);
  }
  return {std::move(u), std::move(v)};
}

HIntersection Gmn::h_intersection(const GElem& g) const {
  if (g.reps.empty()) return HIntersection::AllOfH;
  if (g.reps.size() > 1) return HIntersection::Trivial;
  return g.reps[0].factor == FactorKind::A ? HIntersection::CyclicC : HIntersection::CyclicD;
}

FactorRoot Gmn::root_in_factor(const GElem& g, std::int64_t k, FactorKind f) const {
  if (k == 0) throw DomainError("root exponent must be nonzero");
  if (!in_factor(g, f)) {
    if (!in_factor(power(g, k), f)) {
      throw DomainError("g^k does not lie in the requested factor");
    }
    CyclicDecomposition cd = cyclic_decompose(g);
    ensure(length(cd.core) == 1 && !in_h(cd.core), "conjugate core of a factor root must lie in one factor");
    ensure(in_h(power(cd.core, k)), "core power must lie in the amalgamated subgroup");
    return {invert(cd.conjugator), cd.core};
  }
  // g lies in the factor: run the same extraction inside its own amalgam
  // decomposition (<a> * H over a^m = c, resp. H * <b> over b^n = d).
  FactorElem fe = to_factor_elem(g, f);
  if (factor::in_cyclic_part(fe)) {
    throw DomainError("g lies in the cyclic part of the factor");
  }
  auto [u, core] = factor::inner_cyclic_decompose(fe, modulus(f));
  if (factor::inner_length(core) > 1) {
    throw DomainError("g is not conjugate into a factor of the inner amalgam");
  }
  GElem y = from_factor_elem(f, core);
  if (!in_h(power(y, k))) {
    throw DomainError("y^k does not reach the amalgamated subgroup");
  }
  return {from_factor_elem(f, factor::inv(u, modulus(f))), y};
}

PowerExpression Gmn::express_as_power(const GElem& u, const GElem& v) const {
  if (!is_cyclically_reduced(u) || length(u) <= 1) {
    throw DomainError("u must be cyclically reduced of length greater than 1");
  }
  if (multiply(u, v) != multiply(v, u)) throw DomainError("inputs do not commute");
  if (v.is_identity()) return {u, 0};
  if (v.reps.size() <= 1) {
    throw DomainError("commuting element must be a power of a cyclically reduced element");
  }
  // Euclidean descent on lengths inside the cyclic subgroup <u, v>.
  GElem z = u;
  GElem w = v;
  while (!w.is_identity()) {
    if (w.reps.size() < z.reps.size()) std::swap(z, w);
    GElem wm = multiply(invert(z), w);
    if (wm.reps.size() < w.reps.size()) {
      w = std::move(wm);
      continue;
    }
    GElem wp = multiply(z, w);
    if (wp.reps.size() < w.reps.size()) {
      w = std::move(wp);
      continue;
    }
    throw InternalError("commuting pair did not generate a cyclic subgroup");
  }
  GElem zin = invert(z);
  std::int64_t k = 0;
  w = v;
  while (!w.is_identity()) {
    GElem wm = multiply(zin, w);
    if (wm.reps.size() < w.reps.size()) {
      w = std::move(wm);
      k = checked_add(k, 1);
    } else {
      GElem wp = multiply(z, w);
      ensure(wp.reps.size() < w.reps.size(), "power peeling must shorten");
      w = std::move(wp);
      k = checked_sub(k, 1);
    }
  }
  ensure(power(z, k) == v, "power expression must recompose");
  return {std::move(z), k};
}

Word Gmn::flatten(const GElem& g) const {
  Word raw;
  if (g.head.p != 0) raw.syllables.push_back({Letter::C, g.head.p});
  if (g.head.q != 0) raw.syllables.push_back({Letter::D, g.head.q});
  for (const Rep& r : g.reps) {
    const bool a_side = r.factor == FactorKind::A;
    for (const FactorSyllable& s : r.elem.syllables) {
      Letter l = s.primary ? (a_side ? Letter::A : Letter::B) : (a_side ? Letter::D : Letter::C);
      raw.syllables.push_back({l, s.exp});
    }
  }
  return free_reduce(raw);
}

std::string Gmn::to_string(const GElem& g) const {
  if (g.is_identity()) return "1";
  std::string out;
  bool first = true;
  auto add_segment = [&](const Word& w) {
    if (!first) out += " | ";
    first = false;
    out += gmn::to_string(w);
  };
  if (!g.head.is_identity()) {
    Word hw;
    if (g.head.p != 0) hw.syllables.push_back({Letter::C, g.head.p});
    if (g.head.q != 0) hw.syllables.push_back({Letter::D, g.head.q});
    add_segment(hw);
  }
  for (const Rep& r : g.reps) {
    GElem single{HElem{}, {r}};
    add_segment(flatten(single));
  }
  return out;
}

FactorElem Gmn::to_factor_elem(const GElem& g, FactorKind f) const {
  if (!in_factor(g, f)) throw DomainError("element does not lie in the requested factor");
  FactorElem fe = h_to_fe(f, g.head);
  if (!g.reps.empty()) fe = factor::mul(fe, g.reps[0].elem, modulus(f));
  return fe;
}

GElem Gmn::from_factor_elem(FactorKind f, const FactorElem& fe) const {
  GElem acc;
  push_factor(acc, f, fe);
  return acc;
}

GElem Gmn::from_h(const HElem& h) const { return GElem{h, {}}; }

GElem Gmn::generator_power(FactorKind f, std::int64_t e) const {
  return from_factor_elem(f, factor::from_primary_power(e, modulus(f)));
}

}  // namespace gmn
