#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "latanim/io.hpp"
#include "latanim/theory.hpp"
#include "latanim/verify.hpp"
#include "oracles.hpp"

using namespace latanim;

namespace {

size_t countOccurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

void expectParseError(const std::string& text, ParseError::Kind kind, int line) {
  try {
    parseAnimal(text);
    FAIL("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.kind == kind);
    CHECK(e.line == line);
    CHECK(std::string(e.what()) != "");
  }
}

}  // namespace

TEST_CASE("io: animal text format") {
  Animal domino = parseAnimal("lattice: square\ncells:\n0 0\n1 0\n");
  CHECK(domino == Animal(LatticeKind::Square, AdjacencyMode::Edge, {{0, 0}, {1, 0}}));

  Animal hex2 = parseAnimal(
      "# a comment line\n"
      "lattice: hex\n"
      "\n"
      "cells:\n"
      "  0 0   # trailing comment\n"
      "  1 0\n");
  CHECK(hex2.lattice() == LatticeKind::Hexagonal);
  CHECK(hex2.size() == 2);

  Animal tv = parseAnimal("lattice: tri\nadjacency: vertex\ncells:\n0 0\n1 0\n");
  CHECK(tv.mode() == AdjacencyMode::Vertex);
  CHECK(tv.lattice() == LatticeKind::Triangular);

  std::string round = serializeAnimal(domino);
  CHECK(round == "lattice: square\ncells:\n0 0\n1 0\n");
  CHECK(serializeAnimal(tv).find("adjacency: vertex") != std::string::npos);
}

TEST_CASE("io: animal round trips") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& cells : oracle::allAnimals(LatticeKind::Square, n)) {
      Animal a(LatticeKind::Square, AdjacencyMode::Edge, cells);
      CHECK(parseAnimal(serializeAnimal(a)) == a);
    }
  }
  Animal h(LatticeKind::Hexagonal, AdjacencyMode::Edge, {{0, 0}, {1, -1}, {0, -1}});
  CHECK(parseAnimal(serializeAnimal(h)) == h);
  Animal te(LatticeKind::Triangular, AdjacencyMode::Edge, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(parseAnimal(serializeAnimal(te)) == te);
  Animal tv(LatticeKind::Triangular, AdjacencyMode::Vertex, {{0, 0}, {1, 0}});
  Animal tvBack = parseAnimal(serializeAnimal(tv));
  CHECK(tvBack == tv);
  CHECK(tvBack.mode() == AdjacencyMode::Vertex);
}

TEST_CASE("io: parse failures carry a kind and a line") {
  using K = ParseError::Kind;
  expectParseError("lattice square\ncells:\n0 0\n", K::Syntax, 1);
  expectParseError("lattice: square\ncells:\n1 2 3\n", K::Syntax, 3);
  expectParseError("lattice: square\ncolor: red\ncells:\n0 0\n", K::Syntax, 2);
  expectParseError("lattice: square\nlattice: hex\ncells:\n0 0\n", K::Syntax, 2);
  expectParseError("lattice: pentagonal\ncells:\n0 0\n", K::UnknownLattice, 1);
  expectParseError("lattice: square\nadjacency: diagonal\ncells:\n0 0\n",
                   K::UnknownAdjacency, 2);
  expectParseError("lattice: square\ncells:\n0 0\n1 0\n0 0\n", K::DuplicateCell, 5);
  expectParseError("lattice: square\ncells:\n0 0\n2 0\n", K::Disconnected, -1);
  expectParseError("lattice: hex\nadjacency: vertex\ncells:\n0 0\n",
                   K::VertexModeInvalid, 2);
  expectParseError("lattice: square\ncells:\n", K::EmptyCells, -1);
  expectParseError("lattice: square\n", K::EmptyCells, -1);
  expectParseError("cells:\n0 0\n", K::Syntax, -1);
}

TEST_CASE("io: set container format") {
  MinimalSet m3 = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 3);
  std::string text = serializeSet(m3);
  CHECK(text.substr(0, text.find('\n')) == "latanim-set 1 square edge 3 7 4");

  MinimalSet back = parseSet(text);
  CHECK(back.lattice == m3.lattice);
  CHECK(back.mode == m3.mode);
  CHECK(back.n == m3.n);
  CHECK(back.p == m3.p);
  CHECK(back.animals == m3.animals);

  CHECK_THROWS_AS(parseSet("latanim-set 2 square edge 3 7 0\n"), ParseError);
  CHECK_THROWS_AS(parseSet("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parseSet("latanim-set 1 square edge 3 7 2\n0,0 1,0 2,0\n"),
                  ParseError);
  CHECK_THROWS_AS(parseSet("latanim-set 1 square edge 3 7 1\n0,0 1,0\n"), ParseError);
  CHECK_THROWS_AS(parseSet("latanim-set 1 hex vertex 1 6 1\n0,0\n"), ParseError);
}

TEST_CASE("io: file round trips") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("latanim-test-io-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  Animal a(LatticeKind::Hexagonal, AdjacencyMode::Edge, {{0, 0}, {1, 0}});
  std::string af = (dir / "a.anim").string();
  writeAnimalFile(a, af);
  CHECK(readAnimalFile(af) == a);
  CHECK_THROWS_AS(readAnimalFile((dir / "missing.anim").string()), Error);

  MinimalSet m = minimalSet(LatticeKind::Hexagonal, AdjacencyMode::Edge, 3);
  std::string sf = (dir / "m.set").string();
  writeSetFile(m, sf);
  MinimalSet back = readSetFile(sf);
  CHECK(back.animals == m.animals);
  CHECK(back.p == m.p);

  fs::remove_all(dir);
}

TEST_CASE("io: svg rendering") {
  Animal plus(LatticeKind::Square, AdjacencyMode::Edge,
              {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});
  std::string svg = renderSvg(plus);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(countOccurrences(svg, "class=\"cell\"") == 5);
  CHECK(countOccurrences(svg, "class=\"rim\"") == 8);
  CHECK(renderSvg(plus) == svg);

  MinimalSet m3 = minimalSet(LatticeKind::Square, AdjacencyMode::Edge, 3);
  std::string sheet = renderSvg(m3);
  CHECK(countOccurrences(sheet, "class=\"cell\"") == 4 * 3);
  CHECK(countOccurrences(sheet, "class=\"rim\"") == 4 * 7);

  MinimalSet empty;
  empty.lattice = LatticeKind::Square;
  empty.mode = AdjacencyMode::Edge;
  CHECK_THROWS_AS(renderSvg(empty), Error);

  Animal hexOne(LatticeKind::Hexagonal, AdjacencyMode::Edge, {{0, 0}});
  std::string hsvg = renderSvg(hexOne);
  CHECK(countOccurrences(hsvg, "class=\"cell\"") == 1);
  CHECK(countOccurrences(hsvg, "class=\"rim\"") == 6);
}

TEST_CASE("io: census json") {
  Animal ell(LatticeKind::Square, AdjacencyMode::Edge, {{0, 0}, {1, 0}, {0, 1}});
  auto j = nlohmann::json::parse(censusJson(ell));
  CHECK(j["lattice"] == "square");
  CHECK(j["counts"]["a"] == 1);
  CHECK(j["counts"]["b"] == 2);
  CHECK(j["counts"]["w"] == 1);
  CHECK(j["borderTotal"] == 3);
  CHECK(j["perimeterTotal"] == 7);
  CHECK(j["eB"] == 5);
  CHECK(j["eP"] == 1);
}

TEST_CASE("io: verification reports as json") {
  VerificationReport r = verifyRoots(LatticeKind::Square, AdjacencyMode::Edge, 13);
  std::string one = reportToJson(r);
  auto j = nlohmann::json::parse(one);
  CHECK(j["schema"] == 1);
  REQUIRE(j["reports"].size() == 1);
  auto& jr = j["reports"][0];
  CHECK(jr["check"] == r.check);
  CHECK(jr["lattice"] == "square");
  CHECK(jr["mode"] == "edge");
  CHECK(jr["status"] == "pass");
  CHECK(jr["range"]["from"] == r.from);
  CHECK(jr["range"]["to"] == r.to);
  CHECK(jr["counterexamples"].is_array());
  CHECK(jr["meta"].contains("elapsedMs"));

  // Identical modulo timing.
  auto j2 = nlohmann::json::parse(reportToJson(verifyRoots(
      LatticeKind::Square, AdjacencyMode::Edge, 13)));
  j["reports"][0].erase("meta");
  j2["reports"][0].erase("meta");
  CHECK(j.dump() == j2.dump());

  std::vector<VerificationReport> rs = {r, r};
  auto jv = nlohmann::json::parse(reportToJson(rs));
  CHECK(jv["reports"].size() == 2);
}
