#pragma once

#include <span>
#include <utility>
#include <vector>

#include "latanim/core.hpp"

namespace latanim {

// Number of edge neighbors of any cell: 4 (square), 6 (hexagonal),
// 3 (triangular).
int edgeNeighborCount(LatticeKind lat);

// Edge neighbors in a fixed cyclic ring order. The order is translation
// invariant; on the triangular lattice it depends only on the cell
// orientation.
std::vector<Cell> neighbors(LatticeKind lat, Cell c);

// The 12 cells sharing at least one corner with a triangular cell.
// Rejects other lattices.
std::vector<Cell> vertexNeighbors(LatticeKind lat, Cell c);

// Offset table behind vertexNeighbors, one table per orientation.
std::span<const Cell> triVertexOffsets(bool up);

// Neighbors under an adjacency mode. Edge works on every lattice; Vertex is
// only defined on the triangular lattice.
std::vector<Cell> modeNeighbors(LatticeKind lat, AdjacencyMode mode, Cell c);

// Translates the set so its lexicographically smallest cell sits at the
// origin. Triangular translations must keep the parity of x + y, so a set
// whose smallest cell points downward is anchored at (1, 0) instead of
// (0, 0). Returns the cells sorted; duplicates are collapsed.
std::vector<Cell> canonicalTranslate(LatticeKind lat, std::vector<Cell> cells);

// Corner coordinates of one cell as integers:
//   square      position = (u * 0.5,          v * 0.5)
//   hexagonal   position = (u * sqrt(3) / 2,  v * 0.5)
//   triangular  position = (u * 0.5,          v * sqrt(3) / 2)
// Edge-adjacent cells share exactly two corners.
std::vector<std::pair<int, int>> cellCornersDoubled(LatticeKind lat, Cell c);

// Planar polygon of one cell for rendering, in the scale described above.
std::vector<std::pair<double, double>> cellGeometry(LatticeKind lat, Cell c);

}  // namespace latanim
