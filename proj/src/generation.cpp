#include "gmn/generation.hpp"

namespace gmn {

namespace {

// Prop-1.2 extraction inside one factor: fe in the factor, not in H, with
// fe^r mapping into H. Yields (conjugator w, exponent k) with
// fe = w^-1 (primary^k) w.
std::pair<FactorElem, std::int64_t> primary_root(const Gmn& G, FactorKind f, const FactorElem& fe,
                                                 std::int64_t r, const char* generator_name) {
  const std::int64_t mod = G.modulus(f);
  auto [w, core] = factor::inner_cyclic_decompose(fe, mod);
  if (factor::inner_length(core) > 1) {
    throw DomainError(std::string("conjugate-power form does not exist: the ") + generator_name +
                      "-image is not conjugate into a factor of the inner amalgam");
  }
  std::int64_t k;
  if (factor::in_cyclic_part(core)) {
    k = factor::to_primary_exp(core, mod);
  } else {
    // core in H with core^r central: possible only for a pure head, which is
    // a power of the central element and hence of the primary generator.
    auto [head, other] = factor::to_h_pair(core);
    if (other != 0) {
      throw DomainError(std::string("conjugate-power form does not exist: the ") + generator_name +
                        "-image core mixes both H generators");
    }
    k = checked_mul(head, mod);
  }
  ensure(k != 0, "conjugate-power exponent must be nonzero");
  ensure(checked_mul(k, r) % mod == 0, "extracted power must satisfy the divisibility constraint");
  return {factor::inv(w, mod), k};
}

}  // namespace

ConjugatePowerForm conjugate_power_forms(const Gmn& G, const GElem& u, const GElem& v,
                                         std::int64_t r, std::int64_t s) {
  if (r == 0 || s == 0) throw DomainError("power exponents r, s must be nonzero");
  if (!G.in_factor(u, FactorKind::A) || G.in_h(u)) throw DomainError("u must lie in A \\ H");
  if (!G.in_factor(v, FactorKind::B) || G.in_h(v)) throw DomainError("v must lie in B \\ H");
  GElem ur = G.power(u, r);
  GElem vs = G.power(v, s);
  if (G.multiply(ur, vs) != G.multiply(vs, ur)) {
    throw DomainError("u^r and v^s do not commute");
  }
  // Commuting powers across the two factors must already lie in H.
  if (!G.in_h(ur)) throw DomainError("not satisfiable: u^r lies outside H");
  if (!G.in_h(vs)) throw DomainError("not satisfiable: v^s lies outside H");

  auto [xa, k] = primary_root(G, FactorKind::A, G.to_factor_elem(u, FactorKind::A), r, "a");
  auto [yb, l] = primary_root(G, FactorKind::B, G.to_factor_elem(v, FactorKind::B), s, "b");

  ConjugatePowerForm form{G.from_factor_elem(FactorKind::A, xa), k,
                          G.from_factor_elem(FactorKind::B, yb), l};
  ensure(G.conjugate(G.generator_power(FactorKind::A, form.k), form.x) == u,
         "conjugate-power form must recompose u");
  ensure(G.conjugate(G.generator_power(FactorKind::B, form.l), form.y) == v,
         "conjugate-power form must recompose v");
  return form;
}

std::optional<std::pair<std::int64_t, std::int64_t>> a_d_exponents(const Gmn& G, const GElem& x) {
  if (!G.in_factor(x, FactorKind::A)) throw DomainError("element does not lie in A");
  FactorElem fe = G.to_factor_elem(x, FactorKind::A);
  // shape: c-head, then at most one a-syllable followed by at most one
  // d-syllable
  std::int64_t p = checked_mul(fe.head, G.m());
  std::int64_t q = 0;
  std::size_t i = 0;
  if (i < fe.syllables.size() && fe.syllables[i].primary) {
    p = checked_add(p, fe.syllables[i].exp);
    ++i;
  }
  if (i < fe.syllables.size() && !fe.syllables[i].primary) {
    q = fe.syllables[i].exp;
    ++i;
  }
  if (i != fe.syllables.size()) return std::nullopt;
  return std::make_pair(p, q);
}

std::optional<std::pair<std::int64_t, std::int64_t>> b_c_exponents(const Gmn& G, const GElem& y) {
  if (!G.in_factor(y, FactorKind::B)) throw DomainError("element does not lie in B");
  FactorElem fe = G.to_factor_elem(y, FactorKind::B);
  std::int64_t r = checked_mul(fe.head, G.n());
  std::int64_t s = 0;
  std::size_t i = 0;
  if (i < fe.syllables.size() && fe.syllables[i].primary) {
    r = checked_add(r, fe.syllables[i].exp);
    ++i;
  }
  if (i < fe.syllables.size() && !fe.syllables[i].primary) {
    s = fe.syllables[i].exp;
    ++i;
  }
  if (i != fe.syllables.size()) return std::nullopt;
  return std::make_pair(r, s);
}

bool in_a_d(const Gmn& G, const GElem& x) { return a_d_exponents(G, x).has_value(); }

bool in_b_c(const Gmn& G, const GElem& y) { return b_c_exponents(G, y).has_value(); }

bool is_generating_pair_from_forms(const Gmn& G, const ConjugatePowerForm& f) {
  if (f.k != 1 && f.k != -1) return false;
  if (f.l != 1 && f.l != -1) return false;
  return in_a_d(G, f.x) && in_b_c(G, f.y);
}

}  // namespace gmn
