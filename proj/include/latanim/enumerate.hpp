#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "latanim/animal.hpp"

namespace latanim {

struct EnumOptions {
  int threads = 0;                     // 0 = hardware concurrency
  long long maxAnimals = 100'000'000;  // abort once more animals than this are generated
  bool serializeVisitor = false;       // forEachAnimal: lock around the visitor
};

// Visits every fixed animal of size n exactly once (canonical form, edge
// adjacency) and returns the count. With more than one worker the visit
// order is unspecified; pass serializeVisitor when the visitor is not thread
// safe, or threads = 1 for the fixed generation order.
long long forEachAnimal(LatticeKind lat, int n,
                        const std::function<void(const Animal&)>& visitor,
                        const EnumOptions& opts = {});

// The count alone, skipping animal construction.
long long countAnimals(LatticeKind lat, int n, const EnumOptions& opts = {});

// Perimeter value -> number of size-n animals with that perimeter.
std::map<long long, long long> countByPerimeter(LatticeKind lat, AdjacencyMode mode,
                                                int n, const EnumOptions& opts = {});

// Minimum perimeter over all size-n animals, by exhaustive enumeration.
long long minPerimeterBrute(LatticeKind lat, AdjacencyMode mode, int n,
                            const EnumOptions& opts = {});

struct MinimalSet {
  LatticeKind lattice = LatticeKind::Square;
  AdjacencyMode mode = AdjacencyMode::Edge;
  int n = 0;
  long long p = 0;              // the minimal perimeter value
  std::vector<Animal> animals;  // sorted, pairwise distinct
};

// All size-n animals of minimal perimeter, by direct enumeration.
MinimalSet minimalSet(LatticeKind lat, AdjacencyMode mode, int n,
                      const EnumOptions& opts = {});

// The minimal set reached through the size chain: finds the predecessor n'
// with n' + eps(n') = n, obtains its minimal set (recursively, or directly
// once small enough), and inflates every member. Images are certified to
// have size n, perimeter eps(n), and to be pairwise distinct, which reaches
// sizes far beyond any enumeration budget. Square and hexagonal lattices
// only. Throws ChainRootError when n has no usable predecessor: chain
// roots, and square size 8, whose minimal set is not fully covered by
// inflation — enumerate those directly.
MinimalSet minimalSetViaChain(LatticeKind lat, AdjacencyMode mode, int n,
                              const EnumOptions& opts = {});

// LATANIM_CACHE_DIR if set, otherwise the user cache directory.
std::string defaultCacheDir();

// Chain-or-direct computation with a disk cache. Cached sets are revalidated
// (header match, member sizes and perimeters, distinctness) and recomputed on
// any mismatch. An empty cacheDir disables caching.
MinimalSet minimalSetCached(LatticeKind lat, AdjacencyMode mode, int n,
                            const EnumOptions& opts = {},
                            const std::string& cacheDir = defaultCacheDir());

}  // namespace latanim
