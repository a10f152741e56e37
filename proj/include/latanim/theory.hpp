#pragma once

#include <vector>

#include "latanim/animal.hpp"

namespace latanim {

struct EnumOptions;

// Exact integer ceil(sqrt(v)), v >= 0. Never goes through floating point.
long long ceilSqrt(long long v);

// The constant gap |P| - |B| on minimal-perimeter animals, which is also the
// per-step perimeter growth under inflation: 4 (square), 6 (hexagonal). The
// triangular lattice has no proven constant and is rejected.
int cStar(LatticeKind lat);

// Minimum perimeter over all size-n animals, in closed form:
//   square      ceil(sqrt(8n - 4)) + 2
//   hexagonal   ceil(sqrt(12n - 3)) + 3
// The triangular lattice has no closed form; use epsilonEmpirical.
long long epsilonFormula(LatticeKind lat, long long n);

// Whether p is a value of the minimal-perimeter step function.
// Square: p = 4 or p >= 6. Hexagonal: p = 6 or p >= 8.
bool perimeterAttained(LatticeKind lat, long long p);

// Least n whose minimal perimeter is exactly p. Rejects unattained p.
long long epsilonInverse(LatticeKind lat, long long p);

struct ExtendedInverse {
  long long n = 0;
  // p itself is not attained; n is min{n : eps(n) >= p} instead.
  bool extended = false;
};
ExtendedInverse epsilonInverseExtended(LatticeKind lat, long long p);

struct StepInterval {
  long long p = 0;
  long long nBegin = 0;
  long long nEnd = 0;
};
// Maximal run [nBegin, nEnd] of sizes whose minimal perimeter equals p.
StepInterval stepInterval(LatticeKind lat, long long p);

// Sizes that start an inflation chain: {epsilonInverse(p) : p attained,
// p <= pMax}, ascending. Equals the complement of {n + eps(n)}.
std::vector<long long> chainRoots(LatticeKind lat, long long pMax);

// Hexagonal chain root for perimeter p: floor((p-4)^2 / 12 + 5/4).
long long hexRootFormula(long long p);

// The size n' with n' + eps(n') = n, if one exists.
// Throws ChainRootError when n is a chain root (not in the image).
long long chainPredecessor(LatticeKind lat, long long n);

// Distance-to-minimality potential: epsilonInverse(|P(A)|) - |A|, computed
// through the extended inverse so every animal has a value. phi(A) <= 0
// exactly when A has minimal perimeter for its size.
long long phi(const Animal& a);

struct InflationPrediction {
  long long size = 0;
  long long perimeter = 0;
};
// Size and perimeter after k inflations of a minimal-perimeter animal of
// size n: (n + k eps(n) + c* k(k-1)/2, eps(n) + c* k). Requires n > 1.
InflationPrediction predictInflation(LatticeKind lat, long long n, long long k);

// Brute-force minimal perimeter by exhaustive enumeration, memoized.
// Defined for every lattice/mode pair; the only option for Triangular.
long long epsilonEmpirical(LatticeKind lat, AdjacencyMode mode, int n);
long long epsilonEmpirical(LatticeKind lat, AdjacencyMode mode, int n,
                           const EnumOptions& opts);

// Closed form where one exists (square/hex, edge mode), empirical otherwise.
long long epsilonOf(LatticeKind lat, AdjacencyMode mode, int n);
long long epsilonOf(LatticeKind lat, AdjacencyMode mode, int n,
                    const EnumOptions& opts);

}  // namespace latanim
