#include "latanim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "latanim/patterns.hpp"
#include "latanim/theory.hpp"

namespace latanim {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string oneLine(const Animal& a) {
  std::ostringstream os;
  os << toString(a.lattice()) << " " << toString(a.mode());
  for (Cell c : a.cells()) os << " " << c.x << "," << c.y;
  return os.str();
}

void addCounterexample(VerificationReport& r, const Animal& a) {
  if (r.counterexamples.size() < 32) r.counterexamples.push_back(oneLine(a));
}

// Bridge freedom in the sense the stepping machinery needs. On the square
// lattice that is the absence of split-neighborhood patterns: cut cells such
// as the center of the plus pentomino are fine (the plus is minimal), only a
// border cell with opposite empty neighbors disqualifies. On the hexagonal
// lattice the pattern and connectivity notions coincide for hole-free
// animals, so the semantic operators are used directly.
bool steppingClean(const Animal& q) {
  if (holeCount(q) != 0) return false;
  if (q.lattice() == LatticeKind::Square) {
    PatternCensus cs = census(q);
    for (const auto& [cls, k] : cs.counts)
      if (k > 0 && cls.isBridgePattern()) return false;
    return perimeterBridgeCells(q).empty();
  }
  return bridgeCells(q).empty() && perimeterBridgeCells(q).empty();
}

}  // namespace

VerificationReport verifyMonotonicity(LatticeKind lat, AdjacencyMode mode, int nMax,
                                      const EnumOptions& opts) {
  if (nMax < 1) throw Error("nMax must be at least 1");
  Timer tm;
  VerificationReport r;
  r.check = "monotonicity";
  r.lattice = lat;
  r.mode = mode;
  r.from = 1;
  r.to = nMax;
  const bool closed = lat != LatticeKind::Triangular;
  long long prev = -1;
  int formulaMatches = 0;
  for (int n = 1; n <= nMax; ++n) {
    long long p = epsilonEmpirical(lat, mode, n, opts);
    std::string row = std::to_string(p);
    if (p < prev) {
      row += " NOT MONOTONE";
      r.status = VerifyStatus::Fail;
    }
    if (closed) {
      if (p == epsilonFormula(lat, n)) {
        ++formulaMatches;
      } else {
        row += " FORMULA MISMATCH (formula " + std::to_string(epsilonFormula(lat, n)) + ")";
        r.status = VerifyStatus::Fail;
      }
    }
    r.note("n=" + std::to_string(n), row);
    prev = p;
  }
  if (closed)
    r.note("formulaMatches", std::to_string(formulaMatches) + "/" + std::to_string(nMax));
  r.elapsedMs = tm.ms();
  return r;
}

VerificationReport verifyStepping(LatticeKind lat, int nMax, const EnumOptions& opts) {
  if (lat == LatticeKind::Triangular)
    throw UnsupportedError("stepping checks run on the square and hexagonal lattices only");
  if (nMax < 2) throw Error("nMax must be at least 2");
  Timer tm;
  VerificationReport r;
  r.check = "stepping";
  r.lattice = lat;
  r.mode = AdjacencyMode::Edge;
  r.from = 2;
  r.to = nMax;
  r.note("n=1", "skipped (singleton)");
  const long long c = cStar(lat);
  for (int n = 2; n <= nMax; ++n) {
    MinimalSet m = minimalSet(lat, AdjacencyMode::Edge, n, opts);
    long long bad = 0;
    for (const Animal& q : m.animals) {
      bool ok = steppingClean(q) && steppingGap(q) == c;
      if (ok) {
        Animal iq = inflate(q);
        ok = (long long)perimeter(iq).size() <= m.p + c;
        if (ok && lat == LatticeKind::Hexagonal) ok = bridgeCells(iq).empty();
      }
      if (!ok) {
        ++bad;
        addCounterexample(r, q);
        r.status = VerifyStatus::Fail;
      }
    }
    r.note("n=" + std::to_string(n),
           std::to_string(m.animals.size()) + " animals, p=" + std::to_string(m.p) +
               (bad ? ", " + std::to_string(bad) + " FAILED" : ""));
  }
  r.elapsedMs = tm.ms();
  return r;
}

namespace {

// The target-set members the inflation bijection is allowed to miss: the
// size-8 square union of two diagonally fused plus shapes and its mirror
// image, whose deflations (the two marked centers) are disconnected.
std::set<Animal> squareSizeEightExceptions() {
  return {Animal(LatticeKind::Square,
                 {{0, 0}, {1, -1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}}),
          Animal(LatticeKind::Square,
                 {{0, 0}, {1, -1}, {1, 0}, {1, 1}, {2, -2}, {2, -1}, {2, 0}, {3, -1}})};
}

}  // namespace

VerificationReport verifyBijection(LatticeKind lat, AdjacencyMode mode, int n,
                                   bool fullSetEquality, const EnumOptions& opts) {
  if (lat == LatticeKind::Triangular)
    throw UnsupportedError(
        "bijection certification needs the closed perimeter formula; for the "
        "triangular lattice use the duality check");
  if (n < 1) throw Error("size must be at least 1");
  Timer tm;
  VerificationReport r;
  r.check = "bijection";
  r.lattice = lat;
  r.mode = mode;
  const long long eps = epsilonFormula(lat, n);
  const int target = n + (int)eps;
  const long long targetP = eps + cStar(lat);
  r.from = n;
  r.to = target;
  std::set<Animal> failures;

  MinimalSet src = minimalSet(lat, mode, n, opts);
  r.note("sourceSize", std::to_string(src.animals.size()));
  if (targetP != epsilonFormula(lat, target)) {
    r.note("formulaGap", "eps(n)+c != eps(n+eps(n))");
    r.status = VerifyStatus::Fail;
  }

  std::vector<Animal> images;
  images.reserve(src.animals.size());
  for (const Animal& q : src.animals) {
    Animal iq = inflate(q);
    if (iq.size() != target || (long long)perimeter(iq).size() != targetP) {
      failures.insert(q);
      r.note("badImage", oneLine(q));
    }
    images.push_back(std::move(iq));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    r.note("imagesDistinct", "no");
    r.status = VerifyStatus::Fail;
  }

  std::vector<Animal> targetSet;
  if (fullSetEquality) {
    MinimalSet tgt = minimalSet(lat, mode, target, opts);
    targetSet = std::move(tgt.animals);
    r.note("targetSize", std::to_string(targetSet.size()));
    std::vector<Animal> extras, bogus;
    std::set_difference(targetSet.begin(), targetSet.end(), images.begin(), images.end(),
                        std::back_inserter(extras));
    std::set_difference(images.begin(), images.end(), targetSet.begin(), targetSet.end(),
                        std::back_inserter(bogus));
    for (const Animal& a : extras) failures.insert(a);
    r.note("nonImageMembers", std::to_string(extras.size()));
    if (!bogus.empty()) {
      // an image that is not in the enumerated target set contradicts the
      // formula certificate; never a documented exception
      r.note("imagesOutsideTarget", std::to_string(bogus.size()));
      r.status = VerifyStatus::Fail;
    }
  } else {
    targetSet = images;
    r.note("targetSize", "not enumerated (images only)");
  }

  long long deflateFailures = 0;
  for (const Animal& t : targetSet) {
    std::vector<Cell> d = deflate(t);
    bool good = !d.empty() && (int)d.size() == n && isEdgeConnected(lat, d);
    if (good) {
      Animal dt(lat, mode, std::move(d));
      good = inflate(dt) == t;
    } else if (d.empty() && lat == LatticeKind::Hexagonal && t.size() < 7) {
      r.note("emptyDeflation", oneLine(t));
      continue;
    }
    if (!good) {
      ++deflateFailures;
      failures.insert(t);
    }
  }
  r.note("deflateRoundTripFailures", std::to_string(deflateFailures));

  if (!failures.empty()) {
    bool documented = lat == LatticeKind::Square && n == 2 &&
                      failures == squareSizeEightExceptions();
    for (const Animal& a : failures) addCounterexample(r, a);
    if (documented && r.status != VerifyStatus::Fail) {
      r.status = VerifyStatus::ExceptionDocumented;
      r.note("documentedException",
             "size-8 target members with disconnected deflations are not images");
    } else {
      r.status = VerifyStatus::Fail;
    }
  }
  r.elapsedMs = tm.ms();
  return r;
}

VerificationReport verifyRoots(LatticeKind lat, AdjacencyMode mode, int nMax,
                               const EnumOptions& opts) {
  if (lat == LatticeKind::Triangular)
    throw UnsupportedError("root analysis needs the closed perimeter formula");
  if (nMax < 1) throw Error("nMax must be at least 1");
  Timer tm;
  VerificationReport r;
  r.check = "roots";
  r.lattice = lat;
  r.mode = mode;
  r.from = 1;
  r.to = nMax;

  std::set<long long> image;
  for (long long s = 1; s + epsilonFormula(lat, s) <= nMax; ++s)
    image.insert(s + epsilonFormula(lat, s));
  std::vector<long long> complement;
  for (long long s = 1; s <= nMax; ++s)
    if (!image.count(s)) complement.push_back(s);

  const long long pMax = epsilonFormula(lat, nMax);
  std::vector<long long> roots;
  for (long long root : chainRoots(lat, pMax))
    if (root <= nMax) roots.push_back(root);
  std::sort(roots.begin(), roots.end());

  auto joined = [](const std::vector<long long>& v) {
    std::string s;
    for (long long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  r.note("imageComplement", joined(complement));
  r.note("chainRoots", joined(roots));
  if (complement != roots) r.status = VerifyStatus::Fail;

  if (lat == LatticeKind::Hexagonal) {
    bool formulaOk = true;
    for (long long p = 6; p <= pMax; ++p) {
      if (!perimeterAttained(lat, p)) continue;
      if (hexRootFormula(p) != epsilonInverse(lat, p)) {
        formulaOk = false;
        r.note("rootFormulaMismatch", "p=" + std::to_string(p));
        r.status = VerifyStatus::Fail;
      }
    }
    r.note("rootFormula", formulaOk ? "matches" : "MISMATCH");
  }

  for (long long root : complement) {
    bool first = root == epsilonInverse(lat, epsilonFormula(lat, root));
    bool nextFirst =
        root + 1 == epsilonInverse(lat, epsilonFormula(lat, root + 1));
    if (!first && !nextFirst) {
      r.note("dichotomyViolated", std::to_string(root));
      r.status = VerifyStatus::Fail;
    }
  }

  // Inflating every member of the last size of a perimeter run must land on
  // the last size of the run for the next attained perimeter.
  const int spotMax = lat == LatticeKind::Square ? 10 : 8;
  long long spots = 0;
  for (long long p = epsilonFormula(lat, 1); p <= epsilonFormula(lat, spotMax); ++p) {
    if (!perimeterAttained(lat, p) || !perimeterAttained(lat, p + cStar(lat))) continue;
    StepInterval run = stepInterval(lat, p);
    if (run.nEnd > spotMax) break;
    StepInterval next = stepInterval(lat, p + cStar(lat));
    MinimalSet m = minimalSet(lat, AdjacencyMode::Edge, (int)run.nEnd, opts);
    for (const Animal& q : m.animals) {
      if ((long long)inflate(q).size() != next.nEnd) {
        addCounterexample(r, q);
        r.note("runEndDrift", "p=" + std::to_string(p));
        r.status = VerifyStatus::Fail;
      }
    }
    ++spots;
  }
  r.note("runEndSpotChecks", std::to_string(spots));
  r.elapsedMs = tm.ms();
  return r;
}

ConvergenceResult convergence(const Animal& a, int maxSteps, const EnumOptions& opts) {
  (void)opts;
  if (a.lattice() == LatticeKind::Triangular)
    throw UnsupportedError("convergence tracking needs the closed perimeter formula");
  if (maxSteps < 0) throw Error("maxSteps must be nonnegative");
  Timer tm;
  ConvergenceResult res;
  VerificationReport& r = res.report;
  r.check = "convergence";
  r.lattice = a.lattice();
  r.mode = a.mode();
  r.from = a.size();
  const long long c = cStar(a.lattice());

  std::vector<char> clean;
  auto record = [&](const Animal& q) {
    ConvergenceStep s;
    s.size = q.size();
    s.perimeter = (long long)perimeter(q).size();
    s.phiValue = phi(q);
    s.holes = holeCount(q);
    s.bridges = (long long)bridgeCells(q).size();
    s.perimeterBridges = (long long)perimeterBridgeCells(q).size();
    s.minimal = s.perimeter == epsilonFormula(a.lattice(), s.size);
    res.steps.push_back(s);
    clean.push_back(steppingClean(q) ? 1 : 0);
    return s;
  };
  auto regular = [&](size_t k) { return clean[k] != 0; };

  Animal q = a;
  record(q);
  // run until minimality has visibly persisted (or the budget runs out)
  auto minimalTail = [&]() {
    int run = 0;
    for (auto it = res.steps.rbegin(); it != res.steps.rend() && it->minimal; ++it) ++run;
    return run;
  };
  for (int k = 0; k < maxSteps && minimalTail() < 3; ++k) {
    q = inflate(q);
    record(q);
  }

  // Regularity cannot be read off a single animal: a clean animal may still
  // gain less than c perimeter when a pocketed perimeter cell is swallowed.
  // The onset is therefore found backwards, as the start of the longest
  // suffix that is clean at every step and grows by exactly c.
  int last = (int)res.steps.size() - 1;
  if (regular(last)) {
    res.regularAt = last;
    for (int k = last - 1; k >= 0; --k) {
      if (regular(k) && res.steps[k + 1].perimeter == res.steps[k].perimeter + c)
        res.regularAt = k;
      else
        break;
    }
  }
  long long bound = -1;  // steps allowed until minimality, once regular
  if (res.regularAt >= 0)
    bound = res.regularAt + std::max(res.steps[res.regularAt].phiValue, 0LL);
  for (int k = 0; k <= last; ++k)
    if (res.steps[k].minimal) {
      res.minimalAt = k;
      break;
    }

  for (size_t k = 0; k < res.steps.size(); ++k) {
    const ConvergenceStep& s = res.steps[k];
    std::ostringstream row;
    row << "size=" << s.size << " perimeter=" << s.perimeter << " phi=" << s.phiValue
        << " holes=" << s.holes << " bridges=" << s.bridges
        << " perimeterBridges=" << s.perimeterBridges
        << (s.minimal ? " minimal" : "");
    r.note("k=" + std::to_string(k), row.str());
  }

  bool ok = true;
  if (res.regularAt < 0) {
    r.note("regular", "never within " + std::to_string(maxSteps) + " steps");
    ok = false;
  } else {
    for (size_t k = res.regularAt; k < res.steps.size(); ++k) {
      if (!regular(k)) {
        r.note("regularityLost", "k=" + std::to_string(k));
        ok = false;
      }
      if (k + 1 < res.steps.size()) {
        if (res.steps[k + 1].perimeter != res.steps[k].perimeter + c) {
          r.note("perimeterStep", "k=" + std::to_string(k) + " grew by " +
                                      std::to_string(res.steps[k + 1].perimeter -
                                                     res.steps[k].perimeter));
          ok = false;
        }
        if (res.steps[k + 1].phiValue != res.steps[k].phiValue - 1) {
          r.note("phiStep", "k=" + std::to_string(k));
          ok = false;
        }
      }
    }
  }
  if (res.minimalAt < 0) {
    r.note("minimal", "not reached within " + std::to_string(maxSteps) + " steps");
    ok = false;
  } else {
    if (bound >= 0 && res.minimalAt > bound) {
      r.note("minimalLate", "reached at k=" + std::to_string(res.minimalAt) +
                                ", bound " + std::to_string(bound));
      ok = false;
    }
    for (size_t k = res.minimalAt; k < res.steps.size(); ++k)
      if (!res.steps[k].minimal) {
        r.note("minimalityLost", "k=" + std::to_string(k));
        ok = false;
      }
  }
  if (!ok) {
    r.status = VerifyStatus::Fail;
    addCounterexample(r, a);
  }
  r.to = res.steps.back().size;
  r.note("regularAt", std::to_string(res.regularAt));
  r.note("minimalAt", std::to_string(res.minimalAt));
  r.elapsedMs = tm.ms();
  return res;
}

VerificationReport verifyPolyiamondDuality(int nMax, const EnumOptions& opts) {
  if (nMax < 1) throw Error("nMax must be at least 1");
  Timer tm;
  VerificationReport r;
  r.check = "polyiamond-duality";
  r.lattice = LatticeKind::Triangular;
  r.mode = AdjacencyMode::Vertex;
  r.from = 1;
  r.to = nMax;

  std::map<int, MinimalSet> vertexSets;
  auto vertexSet = [&](int n) -> const MinimalSet& {
    auto it = vertexSets.find(n);
    if (it == vertexSets.end())
      it = vertexSets
               .emplace(n, minimalSet(LatticeKind::Triangular, AdjacencyMode::Vertex, n, opts))
               .first;
    return it->second;
  };

  for (int n = 1; n <= nMax; ++n) {
    const MinimalSet& src = vertexSet(n);
    const int target = n + (int)src.p;
    const MinimalSet& tgt = vertexSet(target);
    std::set<Animal> images;
    bool imagesMinimal = true;
    for (const Animal& q : src.animals) {
      Animal iq = inflate(q);
      if (!std::binary_search(tgt.animals.begin(), tgt.animals.end(), iq))
        imagesMinimal = false;
      images.insert(std::move(iq));
    }
    bool injective = images.size() == src.animals.size();
    bool counts = src.animals.size() == tgt.animals.size();
    // A dip in the brute-force minimum perimeter voids the count claim at the
    // size before the dip: both sizes inflate into the same target size, and
    // the colliding sources can share an image (dropping one cell from a
    // vertex-regular shape does not change its vertex inflation). Such rows
    // are demonstrated rather than failed.
    bool monotone = src.p <= vertexSet(n + 1).p;
    std::ostringstream row;
    row << "|M^v_" << n << "|=" << src.animals.size() << " (p=" << src.p << ") vs |M^v_"
        << target << "|=" << tgt.animals.size();
    if (monotone)
      row << (counts ? "" : " COUNT MISMATCH") << (injective ? "" : " NOT INJECTIVE");
    else
      row << ", " << images.size() << " distinct image(s); bijection not claimed, minimum"
          << " perimeter dips to " << vertexSet(n + 1).p << " at size " << n + 1;
    row << (imagesMinimal ? ", images minimal" : ", images NOT all minimal");
    r.note("n=" + std::to_string(n), row.str());
    if (!imagesMinimal || (monotone && (!counts || !injective))) {
      r.status = VerifyStatus::Fail;
      for (const Animal& q : src.animals) addCounterexample(r, q);
    }
  }

  bool found = false;
  for (int n = 1; n <= nMax && !found; ++n) {
    MinimalSet me = minimalSet(LatticeKind::Triangular, AdjacencyMode::Edge, n, opts);
    for (const Animal& q : me.animals) {
      Animal iq = inflate(q);
      long long best = epsilonEmpirical(LatticeKind::Triangular, AdjacencyMode::Edge,
                                        iq.size(), opts);
      if ((long long)perimeter(iq).size() > best) {
        found = true;
        r.note("edgeCounterexample",
               "n=" + std::to_string(n) + ": inflation has perimeter " +
                   std::to_string(perimeter(iq).size()) + " > " + std::to_string(best) +
                   " = minimum at size " + std::to_string(iq.size()));
        addCounterexample(r, q);
        break;
      }
    }
  }
  if (!found) {
    r.note("edgeCounterexample", "none found up to nMax");
    r.status = VerifyStatus::Fail;
  }
  r.elapsedMs = tm.ms();
  return r;
}

}  // namespace latanim
