#include "latanim/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace latanim {

std::string toString(LatticeKind lat) {
  switch (lat) {
    case LatticeKind::Square: return "square";
    case LatticeKind::Hexagonal: return "hex";
    case LatticeKind::Triangular: return "tri";
  }
  return "?";
}

std::string toString(AdjacencyMode mode) {
  return mode == AdjacencyMode::Edge ? "edge" : "vertex";
}

int edgeNeighborCount(LatticeKind lat) {
  switch (lat) {
    case LatticeKind::Square: return 4;
    case LatticeKind::Hexagonal: return 6;
    case LatticeKind::Triangular: return 3;
  }
  return 0;
}

namespace {

constexpr std::array<Cell, 4> kSquareRing = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

constexpr std::array<Cell, 6> kHexRing = {
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

// Up cell: left, right, below. Down cell: left, right, above.
constexpr std::array<Cell, 3> kTriUpRing = {{{1, 0}, {-1, 0}, {0, -1}}};
constexpr std::array<Cell, 3> kTriDownRing = {{{1, 0}, {-1, 0}, {0, 1}}};

// All cells sharing a corner with an up cell, sorted. Down cells use the
// negated table (the lattice maps onto itself under negation, which swaps
// orientations).
constexpr std::array<Cell, 12> kTriVertexUp = {{{-2, -1},
                                                {-2, 0},
                                                {-1, -1},
                                                {-1, 0},
                                                {-1, 1},
                                                {0, -1},
                                                {0, 1},
                                                {1, -1},
                                                {1, 0},
                                                {1, 1},
                                                {2, -1},
                                                {2, 0}}};

constexpr std::array<Cell, 12> negated(const std::array<Cell, 12>& t) {
  std::array<Cell, 12> r{};
  for (size_t i = 0; i < t.size(); ++i) r[i] = {-t[i].x, -t[i].y};
  return r;
}

constexpr std::array<Cell, 12> kTriVertexDown = negated(kTriVertexUp);

}  // namespace

std::vector<Cell> neighbors(LatticeKind lat, Cell c) {
  std::vector<Cell> out;
  auto add = [&](auto& ring) {
    out.reserve(ring.size());
    for (Cell d : ring) out.push_back(c + d);
  };
  switch (lat) {
    case LatticeKind::Square: add(kSquareRing); break;
    case LatticeKind::Hexagonal: add(kHexRing); break;
    case LatticeKind::Triangular:
      add(triUp(c) ? kTriUpRing : kTriDownRing);
      break;
  }
  return out;
}

std::span<const Cell> triVertexOffsets(bool up) {
  return up ? std::span<const Cell>(kTriVertexUp)
            : std::span<const Cell>(kTriVertexDown);
}

std::vector<Cell> vertexNeighbors(LatticeKind lat, Cell c) {
  if (lat != LatticeKind::Triangular)
    throw UnsupportedError("vertex adjacency is only defined on the triangular lattice");
  auto offs = triVertexOffsets(triUp(c));
  std::vector<Cell> out;
  out.reserve(offs.size());
  for (Cell d : offs) out.push_back(c + d);
  return out;
}

std::vector<Cell> modeNeighbors(LatticeKind lat, AdjacencyMode mode, Cell c) {
  if (mode == AdjacencyMode::Edge) return neighbors(lat, c);
  return vertexNeighbors(lat, c);
}

std::vector<Cell> canonicalTranslate(LatticeKind lat, std::vector<Cell> cells) {
  if (cells.empty()) throw Error("cannot anchor an empty cell set");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Cell m = cells.front();
  int dx = -m.x;
  if (lat == LatticeKind::Triangular && !triUp(m)) dx += 1;
  for (Cell& c : cells) {
    c.x += dx;
    c.y -= m.y;
  }
  return cells;
}

std::vector<std::pair<int, int>> cellCornersDoubled(LatticeKind lat, Cell c) {
  switch (lat) {
    case LatticeKind::Square:
      return {{2 * c.x, 2 * c.y},
              {2 * c.x + 2, 2 * c.y},
              {2 * c.x + 2, 2 * c.y + 2},
              {2 * c.x, 2 * c.y + 2}};
    case LatticeKind::Hexagonal: {
      int u = 2 * c.x + c.y;
      int v = 3 * c.y;
      return {{u + 1, v + 1}, {u, v + 2},  {u - 1, v + 1},
              {u - 1, v - 1}, {u, v - 2},  {u + 1, v - 1}};
    }
    case LatticeKind::Triangular:
      if (triUp(c))
        return {{c.x, c.y}, {c.x + 2, c.y}, {c.x + 1, c.y + 1}};
      return {{c.x + 1, c.y}, {c.x + 2, c.y + 1}, {c.x, c.y + 1}};
  }
  return {};
}

std::vector<std::pair<double, double>> cellGeometry(LatticeKind lat, Cell c) {
  double sx = 0.5, sy = 0.5;
  const double s3h = std::sqrt(3.0) / 2.0;
  if (lat == LatticeKind::Hexagonal) sx = s3h;
  if (lat == LatticeKind::Triangular) sy = s3h;
  std::vector<std::pair<double, double>> out;
  for (auto [u, v] : cellCornersDoubled(lat, c)) out.emplace_back(u * sx, v * sy);
  return out;
}

}  // namespace latanim
