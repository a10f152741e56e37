#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latanim {

enum class LatticeKind { Square, Hexagonal, Triangular };
enum class AdjacencyMode { Edge, Vertex };

// One lattice cell. Square cells use (x, y), hexagonal cells use axial
// coordinates stored as (x, y) = (q, r), triangular cells use (x, y) with the
// orientation derived from the parity of x + y (even = upward-pointing,
// odd = downward-pointing).
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool triUp(Cell c) { return ((c.x + c.y) & 1) == 0; }

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
inline Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

struct CellHash {
  size_t operator()(Cell c) const {
    uint64_t v = (uint64_t)(uint32_t)c.x << 32 | (uint32_t)c.y;
    v *= 0x9e3779b97f4a7c15ULL;
    return (size_t)(v ^ (v >> 32));
  }
};

std::string toString(LatticeKind lat);
std::string toString(AdjacencyMode mode);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// lattice/mode combination or precondition an operation does not support
struct UnsupportedError : Error {
  using Error::Error;
};

// perimeter value not attained by the minimal-perimeter step function
struct NotAttainedError : Error {
  using Error::Error;
};

// the requested size is an inflation-chain root: no predecessor set exists
struct ChainRootError : Error {
  using Error::Error;
};

// enumeration would exceed the configured animal budget
struct BudgetError : Error {
  using Error::Error;
};

// cell set cannot form an animal (empty, duplicates, disconnected, bad mode)
struct InvalidAnimalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  enum class Kind {
    Syntax,
    UnknownLattice,
    UnknownAdjacency,
    DuplicateCell,
    Disconnected,
    VertexModeInvalid,
    EmptyCells,
  };
  Kind kind;
  int line;  // 1-based, -1 when not tied to a line
  ParseError(Kind k, int ln, const std::string& msg)
      : Error(msg), kind(k), line(ln) {}
};

}  // namespace latanim
