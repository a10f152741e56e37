#include <doctest.h>

#include <set>
#include <vector>

#include "latanim/enumerate.hpp"
#include "latanim/theory.hpp"
#include "oracles.hpp"

using namespace latanim;

TEST_CASE("theory: integer ceil sqrt") {
  CHECK(ceilSqrt(0) == 0);
  CHECK(ceilSqrt(1) == 1);
  CHECK(ceilSqrt(2) == 2);
  CHECK(ceilSqrt(3) == 2);
  CHECK(ceilSqrt(4) == 2);
  CHECK(ceilSqrt(5) == 3);
  CHECK(ceilSqrt(99) == 10);
  CHECK(ceilSqrt(100) == 10);
  CHECK(ceilSqrt(101) == 11);
  long long big = 3037000499LL;  // floor(sqrt(2^63 - 1))
  CHECK(ceilSqrt(big * big) == big);
  CHECK(ceilSqrt(big * big - 1) == big);
  CHECK(ceilSqrt(big * big + 1) == big + 1);
}

TEST_CASE("theory: minimum perimeter formulas") {
  const long long sqTable[] = {4, 6, 7, 8, 8, 9, 10, 10, 11, 11, 12, 12, 12};
  for (int n = 1; n <= 13; ++n)
    CHECK(epsilonFormula(LatticeKind::Square, n) == sqTable[n - 1]);
  const long long hexTable[] = {6, 8, 9, 10, 11, 12, 12, 13, 14, 14};
  for (int n = 1; n <= 10; ++n)
    CHECK(epsilonFormula(LatticeKind::Hexagonal, n) == hexTable[n - 1]);
  CHECK_THROWS_AS(epsilonFormula(LatticeKind::Triangular, 3), UnsupportedError);

  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    long long prev = epsilonFormula(lat, 1);
    for (long long n = 2; n <= 5000; ++n) {
      long long cur = epsilonFormula(lat, n);
      CHECK(cur >= prev);
      // the lone 2-step is n=1 to n=2; it skips the one unattainable perimeter
      if (n > 2) CHECK(cur - prev <= 1);
      prev = cur;
    }
  }

  // Against the naive enumeration oracle.
  for (int n = 1; n <= 7; ++n)
    CHECK(epsilonFormula(LatticeKind::Square, n) ==
          oracle::minPerimeterOf(LatticeKind::Square, AdjacencyMode::Edge, n));
  for (int n = 1; n <= 6; ++n)
    CHECK(epsilonFormula(LatticeKind::Hexagonal, n) ==
          oracle::minPerimeterOf(LatticeKind::Hexagonal, AdjacencyMode::Edge, n));

  CHECK(cStar(LatticeKind::Square) == 4);
  CHECK(cStar(LatticeKind::Hexagonal) == 6);
  CHECK_THROWS_AS(cStar(LatticeKind::Triangular), UnsupportedError);
}

TEST_CASE("theory: attained perimeters and the inverse") {
  CHECK(perimeterAttained(LatticeKind::Square, 4));
  CHECK(!perimeterAttained(LatticeKind::Square, 5));
  CHECK(perimeterAttained(LatticeKind::Square, 6));
  CHECK(!perimeterAttained(LatticeKind::Square, 3));
  CHECK(perimeterAttained(LatticeKind::Hexagonal, 6));
  CHECK(!perimeterAttained(LatticeKind::Hexagonal, 7));
  CHECK(perimeterAttained(LatticeKind::Hexagonal, 8));

  // Attained exactly when some size maps there.
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    std::set<long long> image;
    for (long long n = 1; n <= 6000; ++n) image.insert(epsilonFormula(lat, n));
    for (long long p = 1; p <= 200; ++p)
      CHECK(perimeterAttained(lat, p) == (image.count(p) > 0));
    for (long long p = 4; p <= 120; ++p) {
      if (!perimeterAttained(lat, p)) {
        CHECK_THROWS_AS(epsilonInverse(lat, p), NotAttainedError);
        continue;
      }
      long long n = epsilonInverse(lat, p);
      CHECK(epsilonFormula(lat, n) == p);
      if (n > 1) CHECK(epsilonFormula(lat, n - 1) < p);
    }
  }

  const std::pair<long long, long long> hexInverse[] = {
      {6, 1},  {8, 2},  {9, 3},  {10, 4},  {11, 5},  {12, 6},  {13, 8},
      {14, 9}, {15, 11}, {16, 13}, {17, 15}, {18, 17}, {19, 20}, {20, 22}};
  for (auto [p, n] : hexInverse) CHECK(epsilonInverse(LatticeKind::Hexagonal, p) == n);
}

TEST_CASE("theory: extended inverse and its jumps") {
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    long long c = cStar(lat);
    for (long long p = epsilonFormula(lat, 1); p <= 400; ++p) {
      ExtendedInverse e = epsilonInverseExtended(lat, p);
      CHECK(e.extended == !perimeterAttained(lat, p));
      CHECK(epsilonFormula(lat, e.n) >= p);
      if (e.n > 1) CHECK(epsilonFormula(lat, e.n - 1) < p);
      if (!e.extended) CHECK(e.n == epsilonInverse(lat, p));
      // One inflation step ahead, the least size grows by exactly p - 1.
      CHECK(epsilonInverseExtended(lat, p + c).n - e.n == p - 1);
    }
  }
}

TEST_CASE("theory: step intervals") {
  StepInterval s12 = stepInterval(LatticeKind::Square, 12);
  CHECK(s12.p == 12);
  CHECK(s12.nBegin == 11);
  CHECK(s12.nEnd == 13);
  StepInterval h12 = stepInterval(LatticeKind::Hexagonal, 12);
  CHECK(h12.nBegin == 6);
  CHECK(h12.nEnd == 7);
  CHECK_THROWS_AS(stepInterval(LatticeKind::Square, 5), NotAttainedError);
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    for (long long p = epsilonFormula(lat, 1); p <= 60; ++p) {
      if (!perimeterAttained(lat, p)) continue;
      StepInterval s = stepInterval(lat, p);
      CHECK(epsilonFormula(lat, s.nBegin) == p);
      CHECK(epsilonFormula(lat, s.nEnd) == p);
      if (s.nBegin > 1) {
        long long below = epsilonFormula(lat, s.nBegin - 1);
        CHECK(below < p);
        if (perimeterAttained(lat, p - 1)) CHECK(below == p - 1);
      }
      long long above = epsilonFormula(lat, s.nEnd + 1);
      CHECK(above > p);
      if (perimeterAttained(lat, p + 1)) CHECK(above == p + 1);
    }
  }
}

TEST_CASE("theory: chain roots") {
  auto sqRoots = chainRoots(LatticeKind::Square, 13);
  CHECK(sqRoots == std::vector<long long>{1, 2, 3, 4, 6, 7, 9, 11, 14});

  // Roots are the complement of the inflation-size image.
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    long long nMax = 400;
    std::set<long long> image;
    for (long long n = 1; n <= nMax; ++n) {
      long long t = n + epsilonFormula(lat, n);
      if (t <= nMax) image.insert(t);
    }
    std::vector<long long> complement;
    for (long long n = 1; n <= nMax; ++n)
      if (!image.count(n)) complement.push_back(n);
    auto roots = chainRoots(lat, epsilonFormula(lat, nMax));
    std::vector<long long> trimmed;
    for (long long r : roots)
      if (r <= nMax) trimmed.push_back(r);
    CHECK(trimmed == complement);
  }

  // Hexagonal roots follow the closed expression.
  for (long long p = 6; p <= 60; ++p) {
    if (!perimeterAttained(LatticeKind::Hexagonal, p)) continue;
    CHECK(hexRootFormula(p) == epsilonInverse(LatticeKind::Hexagonal, p));
  }
  CHECK(hexRootFormula(6) == 1);
  CHECK(hexRootFormula(8) == 2);
  CHECK(hexRootFormula(9) == 3);
}

TEST_CASE("theory: chain predecessor") {
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    std::set<long long> roots;
    for (long long r : chainRoots(lat, epsilonFormula(lat, 200))) roots.insert(r);
    for (long long s = 1; s <= 60; ++s) {
      long long t = s + epsilonFormula(lat, s);
      CHECK(chainPredecessor(lat, t) == s);
      CHECK(!roots.count(t));
    }
    for (long long r : roots)
      if (r <= 200) CHECK_THROWS_AS(chainPredecessor(lat, r), ChainRootError);
  }
}

TEST_CASE("theory: the potential separates minimal from non-minimal") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& cells : oracle::allAnimals(LatticeKind::Square, n)) {
      Animal a(LatticeKind::Square, AdjacencyMode::Edge, cells);
      bool minimal =
          (long long)perimeter(a).size() == epsilonFormula(LatticeKind::Square, n);
      CHECK((phi(a) <= 0) == minimal);
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& cells : oracle::allAnimals(LatticeKind::Hexagonal, n)) {
      Animal a(LatticeKind::Hexagonal, AdjacencyMode::Edge, cells);
      bool minimal =
          (long long)perimeter(a).size() == epsilonFormula(LatticeKind::Hexagonal, n);
      CHECK((phi(a) <= 0) == minimal);
    }
  }
}

TEST_CASE("theory: inflation prediction") {
  for (LatticeKind lat : {LatticeKind::Square, LatticeKind::Hexagonal}) {
    long long c = cStar(lat);
    for (long long n : {2LL, 5LL, 9LL, 30LL}) {
      long long eps = epsilonFormula(lat, n);
      InflationPrediction prev{n, eps};
      for (long long k = 1; k <= 6; ++k) {
        InflationPrediction cur = predictInflation(lat, n, k);
        CHECK(cur.size == prev.size + prev.perimeter);
        CHECK(cur.perimeter == prev.perimeter + c);
        prev = cur;
      }
      CHECK(predictInflation(lat, n, 0).size == n);
    }
  }
  // Matches an actual inflation trajectory of a minimal animal.
  Animal a(LatticeKind::Square, AdjacencyMode::Edge, {{0, 0}, {1, 0}});
  for (long long k = 1; k <= 3; ++k) {
    a = inflate(a);
    InflationPrediction p = predictInflation(LatticeKind::Square, 2, k);
    CHECK(a.size() == p.size);
    CHECK((long long)perimeter(a).size() == p.perimeter);
  }
}

TEST_CASE("theory: empirical minimum perimeter") {
  for (int n = 1; n <= 7; ++n)
    CHECK(epsilonEmpirical(LatticeKind::Square, AdjacencyMode::Edge, n) ==
          epsilonFormula(LatticeKind::Square, n));
  for (int n = 1; n <= 9; ++n)
    CHECK(epsilonEmpirical(LatticeKind::Triangular, AdjacencyMode::Edge, n) ==
          oracle::minPerimeterOf(LatticeKind::Triangular, AdjacencyMode::Edge, n));
  for (int n = 1; n <= 6; ++n)
    CHECK(epsilonEmpirical(LatticeKind::Triangular, AdjacencyMode::Vertex, n) ==
          oracle::minPerimeterOf(LatticeKind::Triangular, AdjacencyMode::Vertex, n));
  CHECK(epsilonEmpirical(LatticeKind::Triangular, AdjacencyMode::Vertex, 1) == 12);

  CHECK(epsilonOf(LatticeKind::Square, AdjacencyMode::Edge, 9) ==
        epsilonFormula(LatticeKind::Square, 9));
  CHECK(epsilonOf(LatticeKind::Triangular, AdjacencyMode::Edge, 5) ==
        epsilonEmpirical(LatticeKind::Triangular, AdjacencyMode::Edge, 5));
  CHECK_THROWS_AS(epsilonOf(LatticeKind::Square, AdjacencyMode::Vertex, 3),
                  UnsupportedError);
}
