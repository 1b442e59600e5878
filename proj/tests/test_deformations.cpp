#include "doctest.h"
#include "dihedral/deformations.hpp"

using namespace dihedral;

namespace {

long choose(long a, long b) {
  if (b < 0 || a < b) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// χ(O_{P^d}(t)) as the polynomial (t+1)...(t+d)/d!, valid for negative t as well.
long chi_line(int d, long t) {
  long num = 1, den = 1;
  for (int i = 1; i <= d; ++i) {
    num *= t + i;
    den *= i;
  }
  return num / den;
}

// From 0 -> Ω^p -> ∧^p O(-1)^{d+1} -> Ω^{p-1} -> 0.
long chi_omega(int d, int p, long k) {
  if (p == 0) return chi_line(d, k);
  return choose(d + 1, p) * chi_line(d, k - p) - chi_omega(d, p - 1, k);
}

}  // namespace

TEST_CASE("Bott values") {
  CHECK(bott({2, 1, 0, 1}) == 1);
  CHECK(bott_tangent(2, 0, 0) == 8);
  CHECK(bott({2, 1, 3, 0}) == 8);
  CHECK(bott({2, 1, 2, 0}) == 3);
  CHECK(bott({3, 1, 0, 1}) == 1);
  CHECK(bott({3, 2, 0, 2}) == 1);
  CHECK(bott_tangent(3, 0, 0) == 15);
  CHECK(bott_line(2, -3, 2) == 1);
  // H^0 of the Euler sequence is right exact for k >= 1.
  for (int d = 1; d <= 4; ++d)
    for (long k = 1; k <= 12; ++k) CHECK(bott({d, 1, k, 0}) == (d + 1) * choose(k - 1 + d, d) - choose(k + d, d));
  CHECK_THROWS_AS(bott({2, 3, 0, 0}), DomainError);
  CHECK_THROWS_AS(bott({2, 0, 0, 3}), DomainError);
}

TEST_CASE("Serre duality and Euler characteristics") {
  for (int d = 1; d <= 4; ++d)
    for (int p = 0; p <= d; ++p)
      for (long k = -12; k <= 12; ++k) {
        long chi = 0;
        for (int q = 0; q <= d; ++q) {
          CHECK(bott({d, p, k, q}) == bott({d, d - p, -k, d - q}));
          chi += (q % 2 == 0 ? 1 : -1) * bott({d, p, k, q});
        }
        if (d <= 3) CHECK(chi == chi_omega(d, p, k));
      }
}

TEST_CASE("natural deformation target") {
  CHECK(natural_def_target(2, 1, 2) == 26);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int m = 1; m < 4; ++m) CHECK(natural_def_target(n, m, d) < natural_def_target(n, m + 1, d));
  // With e > 0 every twist except the trivial summand drops by e.
  long direct = 0;
  for (long t : {0L, -3L, -2L, -2L}) direct += choose(2 + 2 + t, 2) + choose(2 + 2 + t, 2);
  CHECK(natural_def_target(2, 1, 2, 1) == direct);
  CHECK_THROWS_AS(natural_def_target(1, 1, 2), DomainError);
}

TEST_CASE("H1 vanishing") {
  CHECK(h1_vanishing_check(2, 1, 2).vanishes);
  const H1Check k3 = h1_vanishing_check(3, 1, 2);
  CHECK_FALSE(k3.vanishes);
  CHECK(k3.offending == "Theta(-3)");
  CHECK(k3.offending_h1 == 1);
  for (int n = 2; n <= 8; ++n) CHECK(h1_vanishing_check(n, 2, 2).vanishes);
}

TEST_CASE("Def' dimensions") {
  const DefReport dp4 = def_prime_dims(2, 1, 2);
  CHECK(dp4.target == 26);
  CHECK(dp4.source == 24);
  CHECK(dp4.lower_bound == 2);
  CHECK(dp4.applies);
  CHECK(dp4.source_exact);
  CHECK_FALSE(dp4.unresolved_term.has_value());

  const DefReport k3 = def_prime_dims(3, 1, 2);
  CHECK_FALSE(k3.applies);
  CHECK(k3.unresolved_term.has_value());

  const DefReport r = def_prime_dims(2, 2, 2);
  CHECK(r.applies);
  CHECK(r.source_exact);
  CHECK(r.lower_bound == r.target - r.source);
  CHECK(r.lower_bound >= 0);
}
