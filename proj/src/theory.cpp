#include "latanim/theory.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "latanim/enumerate.hpp"

namespace latanim {

long long ceilSqrt(long long v) {
  if (v < 0) throw Error("ceilSqrt of a negative value");
  if (v == 0) return 0;
  long long hi = 1;
  while (hi <= v / hi) hi *= 2;  // hi^2 > v, division avoids overflow
  long long lo = hi / 2;         // lo^2 <= v
  while (lo < hi) {              // largest m with m^2 <= v
    long long mid = lo + (hi - lo + 1) / 2;
    if (mid <= v / mid)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo * lo == v ? lo : lo + 1;
}

int cStar(LatticeKind lat) {
  switch (lat) {
    case LatticeKind::Square: return 4;
    case LatticeKind::Hexagonal: return 6;
    case LatticeKind::Triangular:
      throw UnsupportedError("no perimeter-border gap constant for the triangular lattice");
  }
  throw Error("bad lattice");
}

long long epsilonFormula(LatticeKind lat, long long n) {
  if (n < 1) throw Error("size must be positive");
  switch (lat) {
    case LatticeKind::Square: return ceilSqrt(8 * n - 4) + 2;
    case LatticeKind::Hexagonal: return ceilSqrt(12 * n - 3) + 3;
    case LatticeKind::Triangular:
      throw UnsupportedError("no closed minimal-perimeter formula for the triangular lattice");
  }
  throw Error("bad lattice");
}

bool perimeterAttained(LatticeKind lat, long long p) {
  switch (lat) {
    case LatticeKind::Square: return p == 4 || p >= 6;
    case LatticeKind::Hexagonal: return p == 6 || p >= 8;
    case LatticeKind::Triangular:
      throw UnsupportedError("no closed minimal-perimeter formula for the triangular lattice");
  }
  throw Error("bad lattice");
}

namespace {

// min{n >= 1 : eps(n) >= p}
long long leastSizeReaching(LatticeKind lat, long long p) {
  if (epsilonFormula(lat, 1) >= p) return 1;
  long long lo = 1, hi = 2;
  while (epsilonFormula(lat, hi) < p) hi *= 2;
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (epsilonFormula(lat, mid) >= p)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

long long epsilonInverse(LatticeKind lat, long long p) {
  if (!perimeterAttained(lat, p))
    throw NotAttainedError("perimeter " + std::to_string(p) +
                           " is not attained on the " + toString(lat) + " lattice");
  return leastSizeReaching(lat, p);
}

ExtendedInverse epsilonInverseExtended(LatticeKind lat, long long p) {
  if (p <= epsilonFormula(lat, 1))
    return {1, p != epsilonFormula(lat, 1)};
  long long n = leastSizeReaching(lat, p);
  return {n, epsilonFormula(lat, n) != p};
}

StepInterval stepInterval(LatticeKind lat, long long p) {
  StepInterval s;
  s.p = p;
  s.nBegin = epsilonInverse(lat, p);
  s.nEnd = leastSizeReaching(lat, p + 1) - 1;
  return s;
}

std::vector<long long> chainRoots(LatticeKind lat, long long pMax) {
  std::vector<long long> roots;
  for (long long p = epsilonFormula(lat, 1); p <= pMax; ++p)
    if (perimeterAttained(lat, p)) roots.push_back(epsilonInverse(lat, p));
  return roots;
}

long long hexRootFormula(long long p) {
  if (p < 6) throw Error("perimeter must be at least 6");
  return ((p - 4) * (p - 4) + 15) / 12;
}

long long chainPredecessor(LatticeKind lat, long long n) {
  // n' + eps(n') is strictly increasing in n'
  long long lo = 1, hi = n;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (mid + epsilonFormula(lat, mid) >= n)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo + epsilonFormula(lat, lo) != n)
    throw ChainRootError("size " + std::to_string(n) + " is an inflation-chain root on the " +
                         toString(lat) + " lattice; no predecessor exists");
  return lo;
}

long long phi(const Animal& a) {
  long long p = (long long)perimeter(a).size();
  return epsilonInverseExtended(a.lattice(), p).n - a.size();
}

InflationPrediction predictInflation(LatticeKind lat, long long n, long long k) {
  if (n <= 1) throw Error("size must exceed 1");
  if (k < 0) throw Error("negative inflation count");
  long long eps = epsilonFormula(lat, n);
  long long c = cStar(lat);
  return {n + k * eps + c * k * (k - 1) / 2, eps + c * k};
}

namespace {

std::mutex gEmpiricalMutex;
std::map<std::tuple<int, int, int>, long long> gEmpirical;

}  // namespace

long long epsilonEmpirical(LatticeKind lat, AdjacencyMode mode, int n,
                           const EnumOptions& opts) {
  std::tuple<int, int, int> key{(int)lat, (int)mode, n};
  {
    std::lock_guard<std::mutex> lock(gEmpiricalMutex);
    auto it = gEmpirical.find(key);
    if (it != gEmpirical.end()) return it->second;
  }
  long long p = minPerimeterBrute(lat, mode, n, opts);
  std::lock_guard<std::mutex> lock(gEmpiricalMutex);
  gEmpirical.emplace(key, p);
  return p;
}

long long epsilonEmpirical(LatticeKind lat, AdjacencyMode mode, int n) {
  return epsilonEmpirical(lat, mode, n, EnumOptions{});
}

long long epsilonOf(LatticeKind lat, AdjacencyMode mode, int n,
                    const EnumOptions& opts) {
  if (lat == LatticeKind::Triangular) return epsilonEmpirical(lat, mode, n, opts);
  if (mode != AdjacencyMode::Edge)
    throw UnsupportedError("vertex adjacency is defined on the triangular lattice only");
  return epsilonFormula(lat, n);
}

long long epsilonOf(LatticeKind lat, AdjacencyMode mode, int n) {
  return epsilonOf(lat, mode, n, EnumOptions{});
}

}  // namespace latanim
