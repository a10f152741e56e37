#pragma once

#include <map>
#include <vector>

#include "latanim/animal.hpp"

namespace latanim {

enum class PatternRole { Border, Perimeter };

// Occupancy of the edge-neighbor ring of a cell, up to rotation and
// reflection. Border patterns describe animal cells, perimeter patterns
// describe empty cells next to the animal. Only the square and hexagonal
// lattices carry named pattern classes.
class PatternClass {
 public:
  static PatternClass fromRing(LatticeKind lat, PatternRole role,
                               const std::vector<bool>& occupiedRing);

  PatternRole role() const { return role_; }
  int ringSize() const { return size_; }
  int occupiedCount() const;
  // Empty neighbors for a border pattern, occupied for a perimeter pattern.
  int relevantCount() const;
  int excessValue() const { return relevantCount() - 1; }
  // Maximal cyclic runs of relevant neighbors.
  int runCount() const;
  // The whole ring is relevant: an isolated cell or a one-cell hole.
  bool isSingletonOrHole() const { return relevantCount() == size_; }
  // Relevant neighbors split into two or more runs.
  bool isBridgePattern() const { return runCount() >= 2; }
  // Hexagonal ring with a single non-relevant neighbor: the cell hangs off
  // (or plugs into) the rest through one contact.
  bool isBridgeAdjacent() const {
    return size_ == 6 && size_ - relevantCount() == 1;
  }
  // Letter of the named class, or 0 for the unnamed ones.
  char letterOr0() const;
  // Letter, or "<role><excess>" for unnamed classes (e.g. "border0").
  std::string key() const;

  friend auto operator<=>(const PatternClass&, const PatternClass&) = default;

 private:
  PatternClass(PatternRole role, int size, uint32_t bits)
      : role_(role), size_(size), bits_(bits) {}
  PatternRole role_;
  int size_;
  uint32_t bits_;  // canonical: minimal over rotations and reflections
};

struct PatternCensus {
  LatticeKind lattice;
  std::map<PatternClass, long long> counts;
  long long count(char letter) const;
  long long count(const PatternClass& cls) const;
  long long borderTotal() const;
  long long perimeterTotal() const;
  // Excess totals: sum of count * excessValue over one role.
  long long eP() const;
  long long eB() const;
};

// Pattern of one cell of the animal (border role) or of its perimeter
// (perimeter role). The cell must belong to one of the two sets.
PatternClass classifyCell(const Animal& a, Cell c);

// Patterns of every border and perimeter cell.
PatternCensus census(const Animal& a);

// Square lattice: #a + 2 #b - #w - 2 #x. Equals 4 for every hole-free
// square animal; animals with holes are rejected.
long long turnIdentity(const Animal& a);

struct AngleBalance {
  long long lhs = 0;  // 3 #c + 2 #f + #i
  long long rhs = 0;  // 3 #q + 2 #t + #w + 6
};
// Hexagonal lattice. Requires a hole-free animal whose census uses only the
// single-run classes c, f, i, l, q, t, w, z; anything else is rejected with
// the offending class named.
AngleBalance hexAngleIdentity(const Animal& a);

// |P| - |B| for any animal. Equals the lattice step constant on minimal
// animals that are free of holes and bridges.
long long steppingGap(const Animal& a);

}  // namespace latanim
