#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihedral/scalar.hpp"

namespace dihedral {

/// h^q(P^d, Ω^p(k)).
struct CohomQuery {
  int d = 2;
  int p = 0;
  long k = 0;
  int q = 0;
};

long bott(const CohomQuery& query);
/// h^q(P^d, Θ(k)) with Θ = Ω^{d-1}(d+1).
long bott_tangent(int d, long k, int q);
/// h^q(P^d, O(k)).
long bott_line(int d, long k, int q);

/// Twists t of the summands O(t) of π_*O_X for L = O(m); e > 0 gives the almost-simple splitting.
std::vector<long> pushforward_twists(int n, int m, int e = 0);

/// dim H^0((O(2m) ⊕ O(nm)) ⊗ π_*O_X) on P^d.
long natural_def_target(int n, int m, int d, int e = 0);

struct H1Check {
  bool vanishes = true;
  /// First summand with nonzero h^1, e.g. "Theta(-3)".
  std::optional<std::string> offending;
  long offending_h1 = 0;
};
H1Check h1_vanishing_check(int n, int m, int d);

struct DefReport {
  int n = 0, m = 0, d = 0;
  long target = 0;
  long source = 0;
  /// The H^1 of the O(L)^2 part vanishes, so source is exactly h^0(π_*(Θ_V ⊗ O_X)).
  bool source_exact = true;
  H1Check h1;
  /// target - source; a bound on dim Def' only, unresolved_term naming what is missing.
  long lower_bound = 0;
  bool applies = true;
  std::optional<std::string> unresolved_term;
  std::string note;
};
DefReport def_prime_dims(int n, int m, int d);

}  // namespace dihedral
