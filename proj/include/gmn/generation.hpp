#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "gmn/amalgam.hpp"

namespace gmn {

// Generating-pair machinery: elements u in A \ H and v in B \ H with
// commuting powers are conjugate powers of the generators, u = x^-1 a^k x
// and v = y^-1 b^l y, and such a pair generates G exactly when |k| = |l| = 1
// with x in <a><d> and y in <b><c>.

struct ConjugatePowerForm {
  GElem x;         // conjugator in A
  std::int64_t k;  // u = x^-1 a^k x
  GElem y;         // conjugator in B
  std::int64_t l;  // v = y^-1 b^l y
};

/// Extracts the conjugate-power form of (u, v). Preconditions (checked):
/// u in A \ H, v in B \ H, r != 0, s != 0 and [u^r, v^s] = 1; then m | kr
/// and n | ls hold for the result.
ConjugatePowerForm conjugate_power_forms(const Gmn& G, const GElem& u, const GElem& v,
                                         std::int64_t r, std::int64_t s);

/// x = a^p d^q for some integers p, q. Requires x in A.
bool in_a_d(const Gmn& G, const GElem& x);
/// y = b^r c^s for some integers r, s. Requires y in B.
bool in_b_c(const Gmn& G, const GElem& y);

/// The exponent pair (p, q) with x = a^p d^q, when x has that shape.
std::optional<std::pair<std::int64_t, std::int64_t>> a_d_exponents(const Gmn& G, const GElem& x);
/// The exponent pair (r, s) with y = b^r c^s, when y has that shape.
std::optional<std::pair<std::int64_t, std::int64_t>> b_c_exponents(const Gmn& G, const GElem& y);

/// The pair (x^-1 a^k x, y^-1 b^l y) generates G iff |k| = 1 = |l|,
/// x in <a><d> and y in <b><c>.
bool is_generating_pair_from_forms(const Gmn& G, const ConjugatePowerForm& f);

}  // namespace gmn
