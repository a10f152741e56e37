#include "latanim/enumerate.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "latanim/io.hpp"
#include "latanim/theory.hpp"

namespace latanim {

namespace {

// Transfer-matrix style flattened board. The window is sized so that any
// animal grown from the seed, together with every cell its mode adjacency can
// touch, stays strictly inside; table entries are then always valid indices.
// The growth universe is the half plane y > 0 plus the ray y == 0, x >= seedX,
// which pins the lexicographically smallest cell of the bottom row to the
// seed and yields exactly one representative per translation class.
struct Grid {
  LatticeKind lat = LatticeKind::Square;
  int n = 0;
  int W = 0, H = 0, x0 = 0, y0 = 0;
  int cells = 0;
  int kEdge = 0, kMode = 0;
  int seed = 0;
  std::vector<int32_t> grow;  // cells * kEdge, -1 = outside the universe
  std::vector<int32_t> adj;   // cells * kMode, valid for every reachable cell

  Cell cellOf(int idx) const { return {x0 + idx % W, y0 + idx / W}; }
};

Grid buildGrid(LatticeKind lat, AdjacencyMode mode, int n, int seedX, bool needAdj) {
  if (mode == AdjacencyMode::Vertex && lat != LatticeKind::Triangular)
    throw UnsupportedError("vertex adjacency is defined on the triangular lattice only");
  Grid g;
  g.lat = lat;
  g.n = n;
  g.x0 = -(n + 2);
  const int x1 = n + 3;
  g.y0 = -2;
  const int y1 = n + 1;
  g.W = x1 - g.x0 + 1;
  g.H = y1 - g.y0 + 1;
  g.cells = g.W * g.H;
  g.kEdge = edgeNeighborCount(lat);
  g.kMode = mode == AdjacencyMode::Edge ? g.kEdge : 12;
  auto inWindow = [&](Cell c) {
    return c.x >= g.x0 && c.x <= x1 && c.y >= g.y0 && c.y <= y1;
  };
  auto indexOf = [&](Cell c) { return (c.y - g.y0) * g.W + (c.x - g.x0); };
  g.grow.assign((size_t)g.cells * g.kEdge, -1);
  if (needAdj) g.adj.assign((size_t)g.cells * g.kMode, -1);
  for (int i = 0; i < g.cells; ++i) {
    Cell c = g.cellOf(i);
    auto en = neighbors(lat, c);
    for (int k = 0; k < (int)en.size(); ++k) {
      Cell d = en[k];
      bool inUniverse = d.y > 0 || (d.y == 0 && d.x >= seedX);
      if (inUniverse && inWindow(d)) g.grow[(size_t)i * g.kEdge + k] = indexOf(d);
    }
    if (needAdj) {
      auto mn = modeNeighbors(lat, mode, c);
      for (int k = 0; k < (int)mn.size(); ++k)
        if (inWindow(mn[k])) g.adj[(size_t)i * g.kMode + k] = indexOf(mn[k]);
    }
  }
  g.seed = indexOf({seedX, 0});
  return g;
}

struct GenState {
  std::vector<uint8_t> occ;
  std::vector<uint8_t> reached;
  std::vector<int32_t> cnt;  // occupied mode-neighbors per cell
  std::vector<int32_t> list; // untried cells, shared across recursion levels
  std::vector<int32_t> placed;
  int placedCount = 0;
  int viewBegin = 0, viewEnd = 0;
  long long perim = 0;

  void init(const Grid& g, bool trackPerim) {
    occ.assign(g.cells, 0);
    reached.assign(g.cells, 0);
    cnt.assign(trackPerim ? g.cells : 0, 0);
    list.assign((size_t)g.kEdge * g.n + 4, 0);
    placed.assign(g.n, 0);
    placedCount = 0;
    perim = 0;
    list[0] = g.seed;
    reached[g.seed] = 1;
    viewBegin = 0;
    viewEnd = 1;
  }
};

constexpr long long kFlushEvery = 4096;

template <class Sink>
struct Walker {
  const Grid& g;
  GenState& s;
  Sink& sink;
  std::atomic<long long>& produced;
  long long budget;
  int splitDepth = 0;                 // 0 = run to the leaves
  std::vector<GenState>* tasks = nullptr;
  long long sinceFlush = 0;

  void run() {
    rec(s.viewBegin, s.viewEnd);
    flush();
  }

  void flush() {
    if (sinceFlush == 0) return;
    long long total = produced.fetch_add(sinceFlush, std::memory_order_relaxed) + sinceFlush;
    sinceFlush = 0;
    if (total > budget)
      throw BudgetError("animal budget of " + std::to_string(budget) + " exceeded");
  }

  void place(int i) {
    if constexpr (Sink::kTrackPerim) {
      if (s.cnt[i] > 0) --s.perim;
      const int32_t* a = &g.adj[(size_t)i * g.kMode];
      for (int k = 0; k < g.kMode; ++k) {
        int j = a[k];
        if (++s.cnt[j] == 1 && !s.occ[j]) ++s.perim;
      }
    }
    s.occ[i] = 1;
    s.placed[s.placedCount++] = i;
  }

  void unplace(int i) {
    --s.placedCount;
    s.occ[i] = 0;
    if constexpr (Sink::kTrackPerim) {
      const int32_t* a = &g.adj[(size_t)i * g.kMode];
      for (int k = 0; k < g.kMode; ++k) {
        int j = a[k];
        if (--s.cnt[j] == 0 && !s.occ[j]) --s.perim;
      }
      if (s.cnt[i] > 0) ++s.perim;
    }
  }

  void rec(int viewBegin, int viewEnd) {
    for (int t = viewBegin; t < viewEnd; ++t) {
      const int i = s.list[t];
      place(i);
      if (s.placedCount == g.n) {
        sink.leaf(g, s);
        if (++sinceFlush >= kFlushEvery) flush();
      } else {
        int newEnd = viewEnd;
        const int32_t* gr = &g.grow[(size_t)i * g.kEdge];
        for (int k = 0; k < g.kEdge; ++k) {
          int j = gr[k];
          if (j >= 0 && !s.reached[j]) {
            s.reached[j] = 1;
            s.list[newEnd++] = j;
          }
        }
        if (splitDepth > 0 && s.placedCount == splitDepth) {
          GenState snap = s;
          snap.viewBegin = t + 1;
          snap.viewEnd = newEnd;
          tasks->push_back(std::move(snap));
        } else {
          rec(t + 1, newEnd);
        }
        for (int q = viewEnd; q < newEnd; ++q) s.reached[s.list[q]] = 0;
      }
      unplace(i);
    }
  }
};

template <class Sink>
Sink runEnumeration(LatticeKind lat, AdjacencyMode mode, int n,
                    const EnumOptions& opts, const Sink& proto) {
  if (n < 1) throw Error("animal size must be at least 1");
  if (n > 1000) throw Error("animal size is out of range");
  int threads = opts.threads > 0 ? opts.threads
                                 : (int)std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  std::atomic<long long> produced{0};
  Sink total = proto;
  std::vector<int> seedXs =
      lat == LatticeKind::Triangular ? std::vector<int>{0, 1} : std::vector<int>{0};
  for (int seedX : seedXs) {
    Grid g = buildGrid(lat, mode, n, seedX, Sink::kTrackPerim);
    const int splitDepth = n >= 12 ? 6 : 5;
    if (threads == 1 || n <= splitDepth + 2) {
      GenState st;
      st.init(g, Sink::kTrackPerim);
      Walker<Sink> w{g, st, total, produced, opts.maxAnimals};
      w.run();
      continue;
    }
    std::vector<GenState> tasks;
    {
      GenState st;
      st.init(g, Sink::kTrackPerim);
      Walker<Sink> harvester{g, st, total, produced, opts.maxAnimals, splitDepth, &tasks};
      harvester.run();
    }
    std::vector<Sink> parts(threads, proto);
    std::vector<std::exception_ptr> errs(threads);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          GenState local;
          Walker<Sink> w{g, local, parts[t], produced, opts.maxAnimals};
          for (;;) {
            size_t k = next.fetch_add(1, std::memory_order_relaxed);
            if (k >= tasks.size()) break;
            local = tasks[k];
            w.run();
          }
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts) total.merge(std::move(p));
  }
  return total;
}

struct CountSink {
  static constexpr bool kTrackPerim = false;
  long long count = 0;
  void leaf(const Grid&, const GenState&) { ++count; }
  void merge(CountSink&& o) { count += o.count; }
};

struct HistSink {
  static constexpr bool kTrackPerim = true;
  std::map<long long, long long> hist;
  void leaf(const Grid&, const GenState& s) { ++hist[s.perim]; }
  void merge(HistSink&& o) {
    for (auto& [p, k] : o.hist) hist[p] += k;
  }
};

struct MinSink {
  static constexpr bool kTrackPerim = true;
  long long best = std::numeric_limits<long long>::max();
  void leaf(const Grid&, const GenState& s) { best = std::min(best, s.perim); }
  void merge(MinSink&& o) { best = std::min(best, o.best); }
};

struct CollectMinSink {
  static constexpr bool kTrackPerim = true;
  long long best = std::numeric_limits<long long>::max();
  std::vector<std::vector<Cell>> sets;
  void leaf(const Grid& g, const GenState& s) {
    if (s.perim > best) return;
    if (s.perim < best) {
      best = s.perim;
      sets.clear();
    }
    std::vector<Cell> cs;
    cs.reserve(s.placedCount);
    for (int q = 0; q < s.placedCount; ++q) cs.push_back(g.cellOf(s.placed[q]));
    sets.push_back(std::move(cs));
  }
  void merge(CollectMinSink&& o) {
    if (o.best < best) {
      best = o.best;
      sets = std::move(o.sets);
    } else if (o.best == best) {
      std::move(o.sets.begin(), o.sets.end(), std::back_inserter(sets));
    }
  }
};

struct VisitorSink {
  static constexpr bool kTrackPerim = false;
  const std::function<void(const Animal&)>* visitor = nullptr;
  std::mutex* lock = nullptr;
  long long count = 0;
  void leaf(const Grid& g, const GenState& s) {
    ++count;
    std::vector<Cell> cs;
    cs.reserve(s.placedCount);
    for (int q = 0; q < s.placedCount; ++q) cs.push_back(g.cellOf(s.placed[q]));
    Animal a(g.lat, AdjacencyMode::Edge, std::move(cs));
    if (lock) {
      std::lock_guard<std::mutex> guard(*lock);
      (*visitor)(a);
    } else {
      (*visitor)(a);
    }
  }
  void merge(VisitorSink&& o) { count += o.count; }
};

}  // namespace

long long forEachAnimal(LatticeKind lat, int n,
                        const std::function<void(const Animal&)>& visitor,
                        const EnumOptions& opts) {
  std::mutex lock;
  VisitorSink proto;
  proto.visitor = &visitor;
  proto.lock = opts.serializeVisitor ? &lock : nullptr;
  return runEnumeration(lat, AdjacencyMode::Edge, n, opts, proto).count;
}

long long countAnimals(LatticeKind lat, int n, const EnumOptions& opts) {
  return runEnumeration(lat, AdjacencyMode::Edge, n, opts, CountSink{}).count;
}

std::map<long long, long long> countByPerimeter(LatticeKind lat, AdjacencyMode mode,
                                                int n, const EnumOptions& opts) {
  return runEnumeration(lat, mode, n, opts, HistSink{}).hist;
}

long long minPerimeterBrute(LatticeKind lat, AdjacencyMode mode, int n,
                            const EnumOptions& opts) {
  return runEnumeration(lat, mode, n, opts, MinSink{}).best;
}

MinimalSet minimalSet(LatticeKind lat, AdjacencyMode mode, int n,
                      const EnumOptions& opts) {
  CollectMinSink sink = runEnumeration(lat, mode, n, opts, CollectMinSink{});
  MinimalSet out;
  out.lattice = lat;
  out.mode = mode;
  out.n = n;
  out.p = sink.best;
  out.animals.reserve(sink.sets.size());
  for (auto& cs : sink.sets) out.animals.emplace_back(lat, mode, std::move(cs));
  std::sort(out.animals.begin(), out.animals.end());
  return out;
}

std::string defaultCacheDir() {
  if (const char* e = std::getenv("LATANIM_CACHE_DIR")) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/latanim";
  if (const char* h = std::getenv("HOME")) return std::string(h) + "/.cache/latanim";
  return ".latanim-cache";
}

namespace {

int directMax(LatticeKind lat) { return lat == LatticeKind::Square ? 14 : 11; }

std::string cachePath(LatticeKind lat, AdjacencyMode mode, int n, const std::string& dir) {
  return dir + "/" + toString(lat) + "-" + toString(mode) + "-n" + std::to_string(n) + ".set";
}

std::optional<MinimalSet> loadCachedSet(LatticeKind lat, AdjacencyMode mode, int n,
                                        const std::string& dir) {
  std::error_code ec;
  std::string path = cachePath(lat, mode, n, dir);
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  try {
    MinimalSet m = readSetFile(path);
    if (m.lattice != lat || m.mode != mode || m.n != n) return std::nullopt;
    if (m.animals.empty()) return std::nullopt;
    if (lat != LatticeKind::Triangular && m.p != epsilonFormula(lat, n)) return std::nullopt;
    for (const Animal& a : m.animals) {
      if (a.size() != n) return std::nullopt;
      if ((long long)perimeter(a).size() != m.p) return std::nullopt;
    }
    if (!std::is_sorted(m.animals.begin(), m.animals.end())) return std::nullopt;
    if (std::adjacent_find(m.animals.begin(), m.animals.end()) != m.animals.end())
      return std::nullopt;
    return m;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void storeCachedSet(const MinimalSet& m, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::string path = cachePath(m.lattice, m.mode, m.n, dir);
  std::string tmp = path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) return;
    os << serializeSet(m);
    if (!os) {
      os.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

MinimalSet obtainSet(LatticeKind lat, AdjacencyMode mode, int n,
                     const EnumOptions& opts, const std::string& cacheDir);

MinimalSet chainStep(LatticeKind lat, AdjacencyMode mode, int n,
                     const EnumOptions& opts, const std::string& cacheDir) {
  if (lat == LatticeKind::Triangular)
    throw UnsupportedError(
        "the size chain needs a closed perimeter formula, which the triangular "
        "lattice does not have");
  long long pred = chainPredecessor(lat, n);
  if (lat == LatticeKind::Square && pred == 2)
    throw ChainRootError(
        "the square size-8 minimal set is not fully covered by inflation from "
        "size 2; enumerate size 8 directly");
  MinimalSet base = obtainSet(lat, mode, (int)pred, opts, cacheDir);
  MinimalSet out;
  out.lattice = lat;
  out.mode = mode;
  out.n = n;
  out.p = epsilonFormula(lat, n);
  out.animals.reserve(base.animals.size());
  for (const Animal& a : base.animals) {
    Animal img = inflate(a);
    if (img.size() != n || (long long)perimeter(img).size() != out.p)
      throw Error("inflation image failed the minimality certificate");
    out.animals.push_back(std::move(img));
  }
  std::sort(out.animals.begin(), out.animals.end());
  if (std::adjacent_find(out.animals.begin(), out.animals.end()) != out.animals.end())
    throw Error("inflation images are not pairwise distinct");
  return out;
}

MinimalSet obtainSet(LatticeKind lat, AdjacencyMode mode, int n,
                     const EnumOptions& opts, const std::string& cacheDir) {
  if (!cacheDir.empty()) {
    if (auto cached = loadCachedSet(lat, mode, n, cacheDir)) return *cached;
  }
  MinimalSet m;
  if (lat == LatticeKind::Triangular || n <= directMax(lat)) {
    m = minimalSet(lat, mode, n, opts);
  } else {
    try {
      m = chainStep(lat, mode, n, opts, cacheDir);
    } catch (const ChainRootError&) {
      m = minimalSet(lat, mode, n, opts);
    }
  }
  if (!cacheDir.empty()) storeCachedSet(m, cacheDir);
  return m;
}

}  // namespace

MinimalSet minimalSetViaChain(LatticeKind lat, AdjacencyMode mode, int n,
                              const EnumOptions& opts) {
  return chainStep(lat, mode, n, opts, std::string());
}

MinimalSet minimalSetCached(LatticeKind lat, AdjacencyMode mode, int n,
                            const EnumOptions& opts, const std::string& cacheDir) {
  return obtainSet(lat, mode, n, opts, cacheDir);
}

}  // namespace latanim
