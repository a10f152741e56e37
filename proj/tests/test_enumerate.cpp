#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "latanim/enumerate.hpp"
#include "latanim/theory.hpp"
#include "oracles.hpp"

using namespace latanim;

namespace {

std::map<long long, long long> oracleHistogram(LatticeKind lat, AdjacencyMode mode,
                                               int n) {
  std::map<long long, long long> h;
  for (const auto& cells : oracle::allAnimals(lat, n))
    ++h[(long long)oracle::perimeterOf(lat, mode, cells).size()];
  return h;
}

}  // namespace

TEST_CASE("enumerate: counts match reference values") {
  const long long sq[] = {1,    2,     6,     19,     63,    216,
                          760,  2725,  9910,  36446,  135268};
  for (int n = 1; n <= 11; ++n) CHECK(countAnimals(LatticeKind::Square, n) == sq[n - 1]);
  const long long hex[] = {1, 3, 11, 44, 186, 814, 3652, 16689, 77359, 362671};
  for (int n = 1; n <= 10; ++n)
    CHECK(countAnimals(LatticeKind::Hexagonal, n) == hex[n - 1]);
  const long long tri[] = {2, 3, 6, 14, 36, 94, 250, 675, 1838, 5053, 14016, 39169};
  for (int n = 1; n <= 12; ++n)
    CHECK(countAnimals(LatticeKind::Triangular, n) == tri[n - 1]);
}

TEST_CASE("enumerate: counts match the naive oracle") {
  for (int n = 1; n <= 8; ++n)
    CHECK(countAnimals(LatticeKind::Square, n) ==
          (long long)oracle::allAnimals(LatticeKind::Square, n).size());
  for (int n = 1; n <= 6; ++n)
    CHECK(countAnimals(LatticeKind::Hexagonal, n) ==
          (long long)oracle::allAnimals(LatticeKind::Hexagonal, n).size());
  for (int n = 1; n <= 9; ++n)
    CHECK(countAnimals(LatticeKind::Triangular, n) ==
          (long long)oracle::allAnimals(LatticeKind::Triangular, n).size());
}

TEST_CASE("enumerate: visitor sees every animal exactly once") {
  struct Case {
    LatticeKind lat;
    int nMax;
  } cases[] = {{LatticeKind::Square, 6}, {LatticeKind::Hexagonal, 5},
               {LatticeKind::Triangular, 7}};
  EnumOptions serial;
  serial.threads = 1;
  for (auto [lat, nMax] : cases) {
    for (int n = 1; n <= nMax; ++n) {
      std::set<std::vector<Cell>> seen;
      long long visited = forEachAnimal(lat, n, [&](const Animal& a) {
        CHECK(a.lattice() == lat);
        CHECK((int)a.size() == n);
        CHECK(seen.insert(a.cells()).second);
      }, serial);
      CHECK(visited == (long long)seen.size());
      std::set<std::vector<Cell>> expected;
      for (const auto& cells : oracle::allAnimals(lat, n))
        expected.insert(canonicalTranslate(lat, cells));
      CHECK(seen == expected);
    }
  }
}

TEST_CASE("enumerate: perimeter histograms") {
  for (int n = 1; n <= 7; ++n) {
    auto got = countByPerimeter(LatticeKind::Square, AdjacencyMode::Edge, n);
    CHECK(got == oracleHistogram(LatticeKind::Square, AdjacencyMode::Edge, n));
    long long total = 0;
    for (auto [p, c] : got) total += c;
    CHECK(total == countAnimals(LatticeKind::Square, n));
    CHECK(got.begin()->first == epsilonFormula(LatticeKind::Square, n));
  }
  for (int n = 1; n <= 5; ++n) {
    auto got = countByPerimeter(LatticeKind::Hexagonal, AdjacencyMode::Edge, n);
    CHECK(got == oracleHistogram(LatticeKind::Hexagonal, AdjacencyMode::Edge, n));
  }
  auto tv = countByPerimeter(LatticeKind::Triangular, AdjacencyMode::Vertex, 5);
  CHECK(tv == oracleHistogram(LatticeKind::Triangular, AdjacencyMode::Vertex, 5));

  for (int n = 1; n <= 8; ++n)
    CHECK(minPerimeterBrute(LatticeKind::Square, AdjacencyMode::Edge, n) ==
          epsilonFormula(LatticeKind::Square, n));
  for (int n = 1; n <= 7; ++n)
    CHECK(minPerimeterBrute(LatticeKind::Hexagonal, AdjacencyMode::Edge, n) ==
          epsilonFormula(LatticeKind::Hexagonal, n));
}

TEST_CASE("enumerate: the animal budget aborts oversized runs") {
  EnumOptions tight;
  tight.maxAnimals = 1000;
  CHECK_THROWS_AS(countAnimals(LatticeKind::Square, 12, tight), BudgetError);
  tight.maxAnimals = 100;
  CHECK_THROWS_AS(countByPerimeter(LatticeKind::Hexagonal, AdjacencyMode::Edge, 6, tight),
                  BudgetError);
}

TEST_CASE("enumerate: results are identical across thread counts") {
  std::vector<int> threadCounts = {1, 2, 4};

  std::vector<long long> sq, hex, tri;
  std::vector<std::map<long long, long long>> hist;
  std::vector<std::vector<Animal>> sets;
  for (int t : threadCounts) {
    EnumOptions opts;
    opts.threads = t;
    sq.push_back(countAnimals(LatticeKind::Square, 11, opts));
    hex.push_back(countAnimals(LatticeKind::Hexagonal, 9, opts));
    tri.push_back(countAnimals(LatticeKind::Triangular, 13, opts));
    hist.push_back(countByPerimeter(LatticeKind::Square, AdjacencyMode::Edge, 9, opts));
    sets.push_back(minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 9, opts).animals);
  }
  for (size_t i = 1; i < sq.size(); ++i) {
    CHECK(sq[i] == sq[0]);
    CHECK(hex[i] == hex[0]);
    CHECK(tri[i] == tri[0]);
    CHECK(hist[i] == hist[0]);
    CHECK(sets[i] == sets[0]);
  }
  CHECK(sq[0] == 135268);
  CHECK(hex[0] == 77359);
  CHECK(tri[0] == 110194);
}

TEST_CASE("enumerate: minimal sets") {
  MinimalSet m8 = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 8);
  CHECK(m8.n == 8);
  CHECK(m8.p == 10);
  CHECK(m8.animals.size() == 4);

  MinimalSet h9 = minimalSet(LatticeKind::Hexagonal, AdjacencyMode::Edge, 9);
  CHECK(h9.p == 14);
  CHECK(h9.animals.size() == 27);

  MinimalSet m5 = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 5);
  CHECK(m5.animals.size() == 1);
  CHECK(m5.animals[0] ==
        Animal(LatticeKind::Square, AdjacencyMode::Edge,
               {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}));

  for (int n = 2; n <= 6; ++n) {
    MinimalSet m = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, n);
    long long eps = epsilonFormula(LatticeKind::Square, n);
    CHECK(m.p == eps);
    long long oracleMinimal = 0;
    for (const auto& cells : oracle::allAnimals(LatticeKind::Square, n))
      if ((long long)oracle::perimeterOf(LatticeKind::Square, AdjacencyMode::Edge,
                                         cells).size() == eps)
        ++oracleMinimal;
    CHECK((long long)m.animals.size() == oracleMinimal);
    for (const Animal& a : m.animals) {
      CHECK((int)a.size() == n);
      CHECK((long long)perimeter(a).size() == eps);
    }
    CHECK(std::is_sorted(m.animals.begin(), m.animals.end()));
  }

  MinimalSet t2 = minimalSet(LatticeKind::Triangular, AdjacencyMode::Edge, 2);
  CHECK(t2.p == 4);
  CHECK(t2.animals.size() == 3);
}

TEST_CASE("enumerate: minimal sets through the size chain") {
  MinimalSet via5 = minimalSetViaChain(LatticeKind::Square, AdjacencyMode::Edge, 5);
  MinimalSet dir5 = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 5);
  CHECK(via5.animals == dir5.animals);
  CHECK(via5.p == dir5.p);

  MinimalSet via10 = minimalSetViaChain(LatticeKind::Square, AdjacencyMode::Edge, 10);
  CHECK(via10.animals.size() == 4);
  CHECK(via10.animals == minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 10).animals);

  MinimalSet hv10 = minimalSetViaChain(LatticeKind::Hexagonal, AdjacencyMode::Edge, 10);
  CHECK(hv10.animals.size() == 3);
  CHECK(hv10.animals == minimalSet(LatticeKind::Hexagonal, AdjacencyMode::Edge, 10).animals);

  CHECK_THROWS_AS(minimalSetViaChain(LatticeKind::Square, AdjacencyMode::Edge, 9),
                  ChainRootError);
  CHECK_THROWS_AS(minimalSetViaChain(LatticeKind::Square, AdjacencyMode::Edge, 8),
                  ChainRootError);
  CHECK_THROWS_AS(minimalSetViaChain(LatticeKind::Triangular, AdjacencyMode::Edge, 6),
                  UnsupportedError);
}

TEST_CASE("enumerate: cached minimal sets") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("latanim-test-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);

  MinimalSet first =
      minimalSetCached(LatticeKind::Square, AdjacencyMode::Edge, 6, {}, dir.string());
  fs::path file = dir / "square-edge-n6.set";
  CHECK(fs::exists(file));
  MinimalSet again =
      minimalSetCached(LatticeKind::Square, AdjacencyMode::Edge, 6, {}, dir.string());
  CHECK(first.animals == again.animals);
  CHECK(first.animals == minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 6).animals);

  {
    std::ofstream os(file, std::ios::trunc);
    os << "not a set file\n";
  }
  MinimalSet healed =
      minimalSetCached(LatticeKind::Square, AdjacencyMode::Edge, 6, {}, dir.string());
  CHECK(healed.animals == first.animals);

  fs::remove_all(dir);
}

TEST_CASE("enumerate: cache directory override") {
  const char* old = std::getenv("LATANIM_CACHE_DIR");
  std::string saved = old ? old : "";
  setenv("LATANIM_CACHE_DIR", "/tmp/latanim-alt-cache", 1);
  CHECK(defaultCacheDir() == "/tmp/latanim-alt-cache");
  if (old)
    setenv("LATANIM_CACHE_DIR", saved.c_str(), 1);
  else
    unsetenv("LATANIM_CACHE_DIR");
}
