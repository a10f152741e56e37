#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latanim/enumerate.hpp"

namespace latanim {

enum class VerifyStatus { Pass, Fail, ExceptionDocumented };

struct VerificationReport {
  std::string check;
  LatticeKind lattice = LatticeKind::Square;
  AdjacencyMode mode = AdjacencyMode::Edge;
  long long from = 0, to = 0;  // the size (or perimeter) range actually covered
  VerifyStatus status = VerifyStatus::Pass;
  std::vector<std::string> counterexamples;  // serialized animals
  std::vector<std::pair<std::string, std::string>> details;  // ordered notes
  double elapsedMs = 0;

  bool passed() const { return status != VerifyStatus::Fail; }
  void note(const std::string& key, const std::string& value) {
    details.emplace_back(key, value);
  }
};

// Brute-force minimum perimeters for n = 1..nMax are weakly increasing; on
// the square and hexagonal lattices they also equal the closed formula.
VerificationReport verifyMonotonicity(LatticeKind lat, AdjacencyMode mode, int nMax,
                                      const EnumOptions& opts = {});

// Every minimal animal of size 2..nMax is hole-free and bridge-free, has no
// perimeter bridges, and has |P| - |B| equal to the step constant; inflating
// it grows the perimeter by at most that constant, and on the hexagonal
// lattice the inflated animal is again bridge-free. Bridge freedom is
// pattern-level on the square lattice (cut cells like the plus-pentomino
// center do occur in minimal animals; split neighborhoods do not) and
// semantic on the hexagonal lattice, where the two notions agree. Size 1 is
// excluded (noted). Square and hexagonal lattices only.
VerificationReport verifyStepping(LatticeKind lat, int nMax, const EnumOptions& opts = {});

// Inflation maps the minimal set of size n onto the minimal set of size
// n + eps(n): images have the right size and perimeter, are pairwise
// distinct, deflation round-trips every target member, and (with
// fullSetEquality) the image set equals the enumerated target set. The one
// documented exception is square n = 2, whose target set has two non-image
// members (a diagonal fusion of two plus shapes and its mirror image, both
// deflating to a disconnected cell pair); that run reports
// exception-documented, anything else that fails reports fail. Square and
// hexagonal lattices only.
VerificationReport verifyBijection(LatticeKind lat, AdjacencyMode mode, int n,
                                   bool fullSetEquality, const EnumOptions& opts = {});

// The sizes in [1, nMax] that are not of the form n + eps(n) equal the
// chain roots from the closed formulas (and, on hex, the root formula), and
// each satisfies the root-candidates dichotomy. Also spot-checks that
// inflating the last size of a perimeter run lands on the last size of the
// next run. Square and hexagonal lattices only.
VerificationReport verifyRoots(LatticeKind lat, AdjacencyMode mode, int nMax,
                               const EnumOptions& opts = {});

struct ConvergenceStep {
  long long size = 0;
  long long perimeter = 0;
  long long phiValue = 0;
  int holes = 0;
  long long bridges = 0;
  long long perimeterBridges = 0;
  bool minimal = false;
};

struct ConvergenceResult {
  std::vector<ConvergenceStep> steps;  // index = number of inflations applied
  // Start of the observed suffix that is clean throughout (no holes, bridge
  // patterns or perimeter bridges) and grows the perimeter by exactly the
  // lattice step constant at every inflation. Cleanliness alone is not
  // enough: a perimeter cell whose empty neighbors are all perimeter cells
  // themselves is swallowed whole by the next inflation, costing the new
  // border one cell and the stepping one unit.
  int regularAt = -1;
  int minimalAt = -1;  // first step with minimal perimeter
  VerificationReport report;
};

// Inflates the animal repeatedly and checks that it becomes (and stays)
// minimal within the predicted number of steps, with the potential dropping
// by exactly one per step once the trajectory is regular. Square and
// hexagonal lattices only.
ConvergenceResult convergence(const Animal& a, int maxSteps, const EnumOptions& opts = {});

// Triangular lattice, both adjacency modes. Under vertex adjacency every
// inflation of a minimal animal is minimal, and |M_n| = |M_{n+eps(n)}| with
// inflation injective at each n = 1..nMax whose brute-force minimum perimeter
// does not exceed the next size's; where it does, two consecutive sizes share
// one target size, colliding images are reported, and no bijection is
// claimed. Under edge adjacency a counterexample animal whose inflation is
// not minimal is exhibited.
VerificationReport verifyPolyiamondDuality(int nMax, const EnumOptions& opts = {});

}  // namespace latanim
