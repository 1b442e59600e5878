#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dihedral/hyperelliptic.hpp"

namespace testsupport {

using namespace dihedral;

/// F = prod (x1 - r x0) over the given roots.
inline BinaryForm split_form(Field f, const std::vector<long>& roots) {
  BinaryForm F = BinaryForm::constant(Scalar::one(f));
  for (long r : roots) F = F * BinaryForm(f, 1, {Scalar(f, -r), Scalar::one(f)});
  return F;
}

inline HECurve split_curve(Field f, int g, const std::vector<long>& roots) {
  return HECurve(g, split_form(f, roots));
}

inline Scalar random_scalar(Field f, std::mt19937_64& rng) {
  return Scalar(f, static_cast<long>(rng() % f.characteristic()));
}

/**
 * Random degree-0 pair: random P, then q a product of 2a linear factors of
 * F - P^2 and f the cofactor. Gives up after a number of draws.
 */
inline std::optional<BundlePair> random_pair(const HECurve& curve, std::mt19937_64& rng, int tries = 200) {
  const Field fld = curve.field();
  const int g = curve.genus();
  for (int t = 0; t < tries; ++t) {
    std::vector<Scalar> pc;
    for (int i = 0; i <= g + 1; ++i) pc.push_back(random_scalar(fld, rng));
    const BinaryForm P(fld, g + 1, pc);
    const BinaryForm G = curve.F() - P * P;
    if (G.is_zero()) continue;
    std::vector<BinaryForm> lin;
    const UPoly aff = G.affine();
    if (aff.degree() > 0)
      for (const Scalar& r : field_roots(aff)) lin.emplace_back(fld, 1, std::vector<Scalar>{-r, Scalar::one(fld)});
    if (G.order_at_infinity() > 0) lin.emplace_back(fld, 1, std::vector<Scalar>{Scalar::one(fld), Scalar::zero(fld)});
    const int amax = static_cast<int>(std::min<std::size_t>((g + 1) / 2, lin.size() / 2));
    if (amax < 1) continue;
    const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(amax));
    std::shuffle(lin.begin(), lin.end(), rng);
    BinaryForm q = BinaryForm::constant(Scalar::one(fld));
    for (int i = 0; i < 2 * a; ++i) q = q * lin[static_cast<std::size_t>(i)];
    BundlePair p{a, g + 1 - a, P, G.exact_div(q), q};
    return normalize(p, g + 1);
  }
  return std::nullopt;
}

/// (1 + floor(sqrt p) + 1)^(2g), an upper bound for the Jacobian order.
inline long hasse_cap(const HECurve& curve) {
  const long p = curve.field().characteristic();
  long s = 0;
  while ((s + 1) * (s + 1) <= p) ++s;
  long cap = 1;
  for (int i = 0; i < 2 * curve.genus(); ++i) cap *= s + 2;
  return cap;
}

/// A pair whose class has order exactly k, built from a Cantor multiple.
inline std::optional<BundlePair> torsion_pair(const HECurve& curve, std::mt19937_64& rng, long k, int tries = 40) {
  for (int t = 0; t < tries; ++t) {
    const auto p = random_pair(curve, rng);
    if (!p) continue;
    const MumfordClass c = class_from_matrix(*p, curve);
    const auto order = class_order(c, curve, hasse_cap(curve));
    if (!order || *order % k != 0) continue;
    const MumfordClass m = cantor_multiple(c, *order / k, curve);
    if (m.is_identity()) continue;
    return matrix_from_class(m, curve);
  }
  return std::nullopt;
}

}  // namespace testsupport
