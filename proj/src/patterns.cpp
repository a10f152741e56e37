#include "latanim/patterns.hpp"

#include <algorithm>
#include <bit>

namespace latanim {

namespace {

// Sorted lengths of the maximal cyclic runs of `value` bits.
std::vector<int> runLengths(uint32_t bits, int size, bool value) {
  auto at = [&](int i) { return ((bits >> i) & 1u) != 0; };
  std::vector<int> runs;
  int start = -1;
  for (int i = 0; i < size; ++i) {
    if (at(i) != value) {
      start = i;
      break;
    }
  }
  if (start == -1) {
    if (size > 0 && at(0) == value) runs.push_back(size);
    return runs;
  }
  int len = 0;
  for (int k = 1; k <= size; ++k) {
    int i = (start + k) % size;
    if (at(i) == value) {
      ++len;
    } else if (len > 0) {
      runs.push_back(len);
      len = 0;
    }
  }
  if (len > 0) runs.push_back(len);
  std::sort(runs.begin(), runs.end());
  return runs;
}

}  // namespace

PatternClass PatternClass::fromRing(LatticeKind lat, PatternRole role,
                                    const std::vector<bool>& occupiedRing) {
  if (lat == LatticeKind::Triangular)
    throw UnsupportedError("patterns are not defined on the triangular lattice");
  int m = edgeNeighborCount(lat);
  if ((int)occupiedRing.size() != m)
    throw Error("pattern ring has the wrong length");
  uint32_t best = ~0u;
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < m; ++rot) {
      uint32_t v = 0;
      for (int i = 0; i < m; ++i) {
        int j = refl ? (rot - i + 2 * m) % m : (rot + i) % m;
        if (occupiedRing[j]) v |= 1u << i;
      }
      best = std::min(best, v);
    }
  }
  return PatternClass(role, m, best);
}

int PatternClass::occupiedCount() const { return std::popcount(bits_); }

int PatternClass::relevantCount() const {
  int occ = occupiedCount();
  return role_ == PatternRole::Border ? size_ - occ : occ;
}

int PatternClass::runCount() const {
  return (int)runLengths(bits_, size_, role_ == PatternRole::Perimeter).size();
}

char PatternClass::letterOr0() const {
  int occ = occupiedCount();
  auto occRuns = [&] { return runLengths(bits_, size_, true); };
  auto emptyRuns = [&] { return runLengths(bits_, size_, false); };
  if (size_ == 4) {
    if (role_ == PatternRole::Border) {
      switch (4 - occ) {
        case 4: return 'c';
        case 3: return 'b';
        case 2: return emptyRuns() == std::vector<int>{2} ? 'a' : 'd';
        default: return 0;
      }
    }
    switch (occ) {
      case 4: return 'y';
      case 3: return 'x';
      case 2: return occRuns() == std::vector<int>{2} ? 'w' : 'z';
      default: return 0;
    }
  }
  if (role_ == PatternRole::Border) {
    switch (occ) {
      case 0: return 'a';
      case 1: return 'b';
      case 2:
        if (occRuns() == std::vector<int>{2}) return 'c';
        return emptyRuns() == std::vector<int>{1, 3} ? 'd' : 'e';
      case 3: {
        auto r = occRuns();
        if (r == std::vector<int>{3}) return 'f';
        return r == std::vector<int>{1, 2} ? 'g' : 'h';
      }
      case 4: {
        auto r = occRuns();
        if (r == std::vector<int>{4}) return 'i';
        return r == std::vector<int>{1, 3} ? 'j' : 'k';
      }
      case 5: return 'l';
      default: return 0;
    }
  }
  switch (occ) {
    case 6: return 'o';
    case 5: return 'p';
    case 4: {
      auto r = occRuns();
      if (r == std::vector<int>{4}) return 'q';
      return r == std::vector<int>{1, 3} ? 'r' : 's';
    }
    case 3: {
      auto r = occRuns();
      if (r == std::vector<int>{3}) return 't';
      return r == std::vector<int>{1, 2} ? 'u' : 'v';
    }
    case 2:
      if (occRuns() == std::vector<int>{2}) return 'w';
      return emptyRuns() == std::vector<int>{1, 3} ? 'x' : 'y';
    case 1: return 'z';
    default: return 0;
  }
}

std::string PatternClass::key() const {
  if (char c = letterOr0()) return std::string(1, c);
  return (role_ == PatternRole::Border ? "border" : "perimeter") +
         std::to_string(excessValue());
}

long long PatternCensus::count(char letter) const {
  long long n = 0;
  for (auto& [cls, k] : counts)
    if (cls.letterOr0() == letter) n += k;
  return n;
}

long long PatternCensus::count(const PatternClass& cls) const {
  auto it = counts.find(cls);
  return it == counts.end() ? 0 : it->second;
}

long long PatternCensus::borderTotal() const {
  long long n = 0;
  for (auto& [cls, k] : counts)
    if (cls.role() == PatternRole::Border) n += k;
  return n;
}

long long PatternCensus::perimeterTotal() const {
  long long n = 0;
  for (auto& [cls, k] : counts)
    if (cls.role() == PatternRole::Perimeter) n += k;
  return n;
}

long long PatternCensus::eP() const {
  long long n = 0;
  for (auto& [cls, k] : counts)
    if (cls.role() == PatternRole::Perimeter) n += k * cls.excessValue();
  return n;
}

long long PatternCensus::eB() const {
  long long n = 0;
  for (auto& [cls, k] : counts)
    if (cls.role() == PatternRole::Border) n += k * cls.excessValue();
  return n;
}

PatternClass classifyCell(const Animal& a, Cell c) {
  if (a.lattice() == LatticeKind::Triangular)
    throw UnsupportedError("patterns are not defined on the triangular lattice");
  bool inside = a.contains(c);
  std::vector<bool> ring;
  bool touches = false;
  for (Cell d : neighbors(a.lattice(), c)) {
    bool occ = a.contains(d);
    ring.push_back(occ);
    touches |= inside ? !occ : occ;
  }
  if (!touches)
    throw Error("cell is neither on the border nor on the perimeter");
  return PatternClass::fromRing(a.lattice(), inside ? PatternRole::Border : PatternRole::Perimeter,
                                ring);
}

PatternCensus census(const Animal& a) {
  PatternCensus out{a.lattice(), {}};
  for (Cell c : border(a)) ++out.counts[classifyCell(a, c)];
  for (Cell c : perimeter(a)) ++out.counts[classifyCell(a, c)];
  return out;
}

long long turnIdentity(const Animal& a) {
  if (a.lattice() != LatticeKind::Square)
    throw UnsupportedError("the turn identity is a square-lattice quantity");
  if (holeCount(a) > 0)
    throw UnsupportedError("the turn identity requires a hole-free animal");
  PatternCensus cs = census(a);
  // class weights are convex-corner counts; an isolated cell carries all four
  return cs.count('a') + 2 * cs.count('b') + 4 * cs.count('c') - cs.count('w') -
         2 * cs.count('x');
}

AngleBalance hexAngleIdentity(const Animal& a) {
  if (a.lattice() != LatticeKind::Hexagonal)
    throw UnsupportedError("the angle identity is a hexagonal-lattice quantity");
  if (holeCount(a) > 0)
    throw UnsupportedError("the angle identity requires a hole-free animal");
  PatternCensus cs = census(a);
  static const std::string allowed = "cfilqtwz";
  for (auto& [cls, k] : cs.counts) {
    char letter = cls.letterOr0();
    if (k > 0 && (letter == 0 || allowed.find(letter) == std::string::npos))
      throw UnsupportedError("the angle identity is undefined for pattern class " + cls.key());
  }
  AngleBalance b;
  b.lhs = 3 * cs.count('c') + 2 * cs.count('f') + cs.count('i');
  b.rhs = 3 * cs.count('q') + 2 * cs.count('t') + cs.count('w') + 6;
  return b;
}

long long steppingGap(const Animal& a) {
  return (long long)perimeter(a).size() - (long long)border(a).size();
}

}  // namespace latanim
