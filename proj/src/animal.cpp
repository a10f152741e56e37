#include "latanim/animal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace latanim {

namespace {

using CellSet = std::unordered_set<Cell, CellHash>;

CellSet toSet(std::span<const Cell> cells) {
  CellSet s;
  s.reserve(cells.size() * 2);
  for (Cell c : cells) s.insert(c);
  return s;
}

struct Box {
  int x0, x1, y0, y1;  // inclusive
  bool inside(Cell c) const {
    return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
  }
};

Box boundingBox(std::span<const Cell> cells, int margin) {
  Box b{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
        std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (Cell c : cells) {
    b.x0 = std::min(b.x0, c.x);
    b.x1 = std::max(b.x1, c.x);
    b.y0 = std::min(b.y0, c.y);
    b.y1 = std::max(b.y1, c.y);
  }
  b.x0 -= margin;
  b.x1 += margin;
  b.y0 -= margin;
  b.y1 += margin;
  return b;
}

// Labels every empty cell inside the margin-2 box that belongs to a finite
// complement component. Returns the component count; labels start at 0.
int holeComponentMap(LatticeKind lat, std::span<const Cell> cells,
                     std::unordered_map<Cell, int, CellHash>* labels) {
  if (cells.empty()) return 0;
  CellSet occ = toSet(cells);
  Box box = boundingBox(cells, 2);
  CellSet outside;
  std::deque<Cell> queue;
  auto seed = [&](Cell c) {
    if (!occ.contains(c) && outside.insert(c).second) queue.push_back(c);
  };
  for (int x = box.x0; x <= box.x1; ++x) {
    seed({x, box.y0});
    seed({x, box.y1});
  }
  for (int y = box.y0; y <= box.y1; ++y) {
    seed({box.x0, y});
    seed({box.x1, y});
  }
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (Cell d : neighbors(lat, c))
      if (box.inside(d)) seed(d);
  }
  int count = 0;
  std::unordered_map<Cell, int, CellHash> local;
  auto& map = labels ? *labels : local;
  for (int y = box.y0; y <= box.y1; ++y) {
    for (int x = box.x0; x <= box.x1; ++x) {
      Cell c{x, y};
      if (occ.contains(c) || outside.contains(c) || map.contains(c)) continue;
      map.emplace(c, count);
      std::deque<Cell> q{c};
      while (!q.empty()) {
        Cell u = q.front();
        q.pop_front();
        for (Cell d : neighbors(lat, u)) {
          if (occ.contains(d) || outside.contains(d) || map.contains(d)) continue;
          map.emplace(d, count);
          q.push_back(d);
        }
      }
      ++count;
    }
  }
  return count;
}

}  // namespace

bool isEdgeConnected(LatticeKind lat, std::span<const Cell> cells) {
  if (cells.empty()) return false;
  CellSet todo = toSet(cells);
  if (todo.size() != cells.size()) return false;
  std::deque<Cell> queue{cells.front()};
  todo.erase(cells.front());
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (Cell d : neighbors(lat, c)) {
      auto it = todo.find(d);
      if (it != todo.end()) {
        queue.push_back(d);
        todo.erase(it);
      }
    }
  }
  return todo.empty();
}

Animal::Animal(LatticeKind lat, AdjacencyMode mode, std::vector<Cell> cells)
    : lat_(lat), mode_(mode) {
  if (mode == AdjacencyMode::Vertex && lat != LatticeKind::Triangular)
    throw InvalidAnimalError("vertex adjacency is only defined on the triangular lattice");
  if (cells.empty()) throw InvalidAnimalError("an animal needs at least one cell");
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidAnimalError("duplicate cell in animal");
  if (!isEdgeConnected(lat, sorted))
    throw InvalidAnimalError("animal cells are not edge-connected");
  cells_ = canonicalTranslate(lat, std::move(sorted));
}

bool Animal::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<Cell> perimeter(const Animal& a) {
  CellSet occ = toSet(a.cells());
  CellSet out;
  for (Cell c : a.cells())
    for (Cell d : modeNeighbors(a.lattice(), a.mode(), c))
      if (!occ.contains(d)) out.insert(d);
  std::vector<Cell> v(out.begin(), out.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Cell> border(const Animal& a) {
  CellSet occ = toSet(a.cells());
  std::vector<Cell> v;
  for (Cell c : a.cells()) {
    for (Cell d : modeNeighbors(a.lattice(), a.mode(), c)) {
      if (!occ.contains(d)) {
        v.push_back(c);
        break;
      }
    }
  }
  return v;  // cells() is sorted, so v is too
}

Animal inflate(const Animal& a) {
  std::vector<Cell> cells = a.cells();
  auto p = perimeter(a);
  cells.insert(cells.end(), p.begin(), p.end());
  return Animal(a.lattice(), a.mode(), std::move(cells));
}

std::vector<Cell> deflate(const Animal& a) {
  auto b = border(a);
  std::vector<Cell> out;
  std::set_difference(a.cells().begin(), a.cells().end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Animal inflateK(const Animal& a, int k) {
  if (k < 0) throw Error("negative inflation count");
  Animal r = a;
  for (int i = 0; i < k; ++i) r = inflate(r);
  return r;
}

int holeCountOf(LatticeKind lat, std::span<const Cell> cells) {
  return holeComponentMap(lat, cells, nullptr);
}

int holeCount(const Animal& a) { return holeCountOf(a.lattice(), a.cells()); }

std::vector<Cell> bridgeCells(const Animal& a) {
  if (a.size() <= 1) return {};
  std::unordered_map<Cell, int, CellHash> holeOf;
  holeComponentMap(a.lattice(), a.cells(), &holeOf);
  std::vector<Cell> out;
  std::vector<Cell> rest;
  rest.reserve(a.size() - 1);
  for (Cell c : a.cells()) {
    rest.clear();
    for (Cell d : a.cells())
      if (d != c) rest.push_back(d);
    bool bridge = !isEdgeConnected(a.lattice(), rest);
    if (!bridge) {
      int seen = -1;
      for (Cell d : neighbors(a.lattice(), c)) {
        auto it = holeOf.find(d);
        if (it == holeOf.end()) continue;
        if (seen == -1) {
          seen = it->second;
        } else if (it->second != seen) {
          bridge = true;
          break;
        }
      }
    }
    if (bridge) out.push_back(c);
  }
  return out;
}

std::vector<Cell> perimeterBridgeCells(const Animal& a) {
  int base = holeCount(a);
  CellSet occ = toSet(a.cells());
  std::vector<Cell> out;
  for (Cell c : perimeter(a)) {
    bool bridge = false;
    if (a.lattice() == LatticeKind::Square) {
      bool e = occ.contains(c + Cell{1, 0}), w = occ.contains(c + Cell{-1, 0});
      bool n = occ.contains(c + Cell{0, 1}), s = occ.contains(c + Cell{0, -1});
      if ((int)e + w + n + s == 2 && ((e && w) || (n && s))) bridge = true;
    }
    if (!bridge) {
      std::vector<Cell> grown = a.cells();
      grown.push_back(c);
      if (holeCountOf(a.lattice(), grown) > base) bridge = true;
    }
    if (bridge) out.push_back(c);
  }
  return out;
}

int diameter(const Animal& a) {
  Box b = boundingBox(a.cells(), 0);
  int dx = b.x1 - b.x0, dy = b.y1 - b.y0;
  if (a.lattice() != LatticeKind::Hexagonal) return std::max(dx, dy);
  int s0 = std::numeric_limits<int>::max(), s1 = std::numeric_limits<int>::min();
  for (Cell c : a.cells()) {
    s0 = std::min(s0, c.x + c.y);
    s1 = std::max(s1, c.x + c.y);
  }
  return std::max({dx, dy, s1 - s0});
}

ExcessPair excess(const Animal& a) {
  CellSet occ = toSet(a.cells());
  ExcessPair e;
  for (Cell c : perimeter(a)) {
    int k = 0;
    for (Cell d : modeNeighbors(a.lattice(), a.mode(), c))
      if (occ.contains(d)) ++k;
    e.eP += k - 1;
  }
  for (Cell c : border(a)) {
    int k = 0;
    for (Cell d : modeNeighbors(a.lattice(), a.mode(), c))
      if (!occ.contains(d)) ++k;
    e.eB += k - 1;
  }
  return e;
}

}  // namespace latanim
