#pragma once

#include <span>
#include <vector>

#include "latanim/core.hpp"
#include "latanim/lattice.hpp"

namespace latanim {

// A fixed lattice animal: a finite, edge-connected set of cells considered
// up to translation. The cell list is kept sorted and anchored so that the
// lexicographically smallest cell is the origin (or (1, 0) for a triangular
// animal whose smallest cell points downward). The adjacency mode only
// affects derived sets such as the perimeter; connectivity of the animal
// itself is always through shared edges.
class Animal {
 public:
  Animal(LatticeKind lat, AdjacencyMode mode, std::vector<Cell> cells);
  Animal(LatticeKind lat, std::vector<Cell> cells)
      : Animal(lat, AdjacencyMode::Edge, std::move(cells)) {}

  LatticeKind lattice() const { return lat_; }
  AdjacencyMode mode() const { return mode_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return (int)cells_.size(); }
  bool contains(Cell c) const;

  friend bool operator==(const Animal& a, const Animal& b) {
    return a.lat_ == b.lat_ && a.mode_ == b.mode_ && a.cells_ == b.cells_;
  }
  friend auto operator<=>(const Animal& a, const Animal& b) {
    if (auto c = a.lat_ <=> b.lat_; c != 0) return c;
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  LatticeKind lat_;
  AdjacencyMode mode_;
  std::vector<Cell> cells_;
};

// Empty cells adjacent to the animal under its mode, sorted.
std::vector<Cell> perimeter(const Animal& a);

// Animal cells adjacent to an empty cell under the animal's mode, sorted.
std::vector<Cell> border(const Animal& a);

// The animal together with its perimeter. Always connected.
Animal inflate(const Animal& a);

// Cells remaining after the border is removed. May be empty or disconnected,
// so the result is a plain cell set, not an Animal.
std::vector<Cell> deflate(const Animal& a);

// k successive inflations.
Animal inflateK(const Animal& a, int k);

// Number of finite connected components of the complement. Complement
// connectivity is always through shared edges, for every adjacency mode.
int holeCount(const Animal& a);
int holeCountOf(LatticeKind lat, std::span<const Cell> cells);

// Cells whose removal disconnects the rest of the animal, plus cells
// edge-adjacent to two or more distinct holes. Singletons have none.
std::vector<Cell> bridgeCells(const Animal& a);

// Perimeter cells whose addition creates at least one new hole. On the
// square lattice a perimeter cell whose two occupied neighbors sit opposite
// each other also counts.
std::vector<Cell> perimeterBridgeCells(const Animal& a);

// Smallest lattice-aligned extent that contains the animal: the largest of
// the coordinate spans (square, triangular), or of the q, r and q + r spans
// (hexagonal).
int diameter(const Animal& a);

struct ExcessPair {
  long long eP = 0;  // sum over perimeter cells of (occupied neighbors - 1)
  long long eB = 0;  // sum over border cells of (empty neighbors - 1)
};
ExcessPair excess(const Animal& a);

bool isEdgeConnected(LatticeKind lat, std::span<const Cell> cells);

}  // namespace latanim
