#include "dihedral/deformations.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include <gmpxx.h>

namespace dihedral {

namespace {

long binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  if (!r.fits_slong_p()) throw DomainError("cohomology dimension does not fit in 64 bits");
  return r.get_si();
}

long bott_uncached(int d, int p, long k, int q) {
  if (q == 0 && k > p) return binom(k + d - p, k) * binom(k - 1, p);
  if (q == d && k < p - d) return binom(-k + p, -k) * binom(-k - 1, d - p);
  if (q == p && k == 0) return 1;
  return 0;
}

void check_n_m(int n, int m, int d) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (m < 1) throw DomainError("m must be at least 1");
  if (d < 1) throw DomainError("d must be at least 1");
}

}  // namespace

long bott(const CohomQuery& query) {
  const auto [d, p, k, q] = query;
  if (d < 1 || p < 0 || p > d || q < 0 || q > d) throw DomainError("cohomology query out of range");
  using Key = std::tuple<int, int, long, int>;
  static std::mutex mu;
  static std::map<Key, long> cache;
  const Key key{d, p, k, q};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const long v = bott_uncached(d, p, k, q);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

long bott_tangent(int d, long k, int q) { return bott({d, d - 1, k + d + 1, q}); }

long bott_line(int d, long k, int q) { return bott({d, 0, k, q}); }

std::vector<long> pushforward_twists(int n, int m, int e) {
  if (n < 2 || m < 1 || e < 0) throw DomainError("need n >= 2, m >= 1, e >= 0");
  std::vector<long> t{0, -static_cast<long>(n) * m - e};
  for (int i = 1; i < n; ++i) {
    t.push_back(-static_cast<long>(i) * m - e);
    t.push_back(-static_cast<long>(n - i) * m - e);
  }
  return t;
}

long natural_def_target(int n, int m, int d, int e) {
  check_n_m(n, m, d);
  long total = 0;
  for (long t : pushforward_twists(n, m, e)) total += bott_line(d, 2L * m + t, 0) + bott_line(d, static_cast<long>(n) * m + t, 0);
  return total;
}

H1Check h1_vanishing_check(int n, int m, int d) {
  check_n_m(n, m, d);
  H1Check out;
  for (long t : pushforward_twists(n, m)) {
    const long theta = bott_tangent(d, t, 1);
    if (theta != 0) {
      out.vanishes = false;
      out.offending = "Theta(" + std::to_string(t) + ")";
      out.offending_h1 = theta;
      return out;
    }
    const long line = bott_line(d, m + t, 1);
    if (line != 0) {
      out.vanishes = false;
      out.offending = "O(" + std::to_string(m + t) + ")";
      out.offending_h1 = line;
      return out;
    }
  }
  return out;
}

DefReport def_prime_dims(int n, int m, int d) {
  check_n_m(n, m, d);
  DefReport r;
  r.n = n;
  r.m = m;
  r.d = d;
  r.target = natural_def_target(n, m, d);
  for (long t : pushforward_twists(n, m)) {
    r.source += 2 * bott_line(d, m + t, 0) + bott_tangent(d, t, 0);
    if (bott_line(d, m + t, 1) != 0) r.source_exact = false;
  }
  r.h1 = h1_vanishing_check(n, m, d);
  r.applies = r.h1.vanishes;
  r.lower_bound = r.target - r.source;
  if (!r.source_exact) {
    r.unresolved_term = "+ h^0(Theta_X)";
    r.note = "source inexact, lower bound only";
  } else if (!r.applies) {
    r.unresolved_term = "+ h^0(Theta_X)";
    r.note = "h^1 of " + *r.h1.offending + " is " + std::to_string(r.h1.offending_h1) +
             "; small deformations need not all be natural";
  } else {
    r.note = "every small deformation is natural";
  }
  return r;
}

}  // namespace dihedral
