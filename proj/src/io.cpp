#include "latanim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "latanim/patterns.hpp"
#include "latanim/verify.hpp"

namespace latanim {

namespace {

using Kind = ParseError::Kind;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parseInt(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

bool parseLL(const std::string& tok, long long& out) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

LatticeKind latticeFromName(const std::string& name, int line) {
  if (name == "square") return LatticeKind::Square;
  if (name == "hex") return LatticeKind::Hexagonal;
  if (name == "tri") return LatticeKind::Triangular;
  throw ParseError(Kind::UnknownLattice, line, "unknown lattice \"" + name + "\"");
}

AdjacencyMode modeFromName(const std::string& name, int line) {
  if (name == "edge") return AdjacencyMode::Edge;
  if (name == "vertex") return AdjacencyMode::Vertex;
  throw ParseError(Kind::UnknownAdjacency, line, "unknown adjacency \"" + name + "\"");
}

std::string readFileOrThrow(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void writeFileOrThrow(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << text;
  if (!os) throw Error("failed writing " + path);
}

// Pre-validates what the Animal constructor would reject, so every failure
// surfaces as a ParseError with a position instead of InvalidAnimalError.
void validateCells(LatticeKind lat, AdjacencyMode mode,
                   const std::vector<Cell>& cells, const std::vector<int>& lineOf,
                   int fallbackLine) {
  if (cells.empty())
    throw ParseError(Kind::EmptyCells, fallbackLine, "animal has no cells");
  std::set<Cell> seen;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (!seen.insert(cells[i]).second) {
      int ln = i < lineOf.size() ? lineOf[i] : fallbackLine;
      throw ParseError(Kind::DuplicateCell, ln,
                       "duplicate cell " + std::to_string(cells[i].x) + " " +
                           std::to_string(cells[i].y));
    }
  }
  if (mode == AdjacencyMode::Vertex && lat != LatticeKind::Triangular)
    throw ParseError(Kind::VertexModeInvalid, fallbackLine,
                     "vertex adjacency is defined on the triangular lattice only");
  if (!isEdgeConnected(lat, cells))
    throw ParseError(Kind::Disconnected, fallbackLine, "cells are not edge-connected");
}

}  // namespace

Animal parseAnimal(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineNo = 0;
  bool haveLattice = false, inCells = false;
  int latticeLine = -1, modeLine = -1;
  LatticeKind lat = LatticeKind::Square;
  AdjacencyMode mode = AdjacencyMode::Edge;
  std::vector<Cell> cells;
  std::vector<int> lineOf;
  while (std::getline(is, raw)) {
    ++lineNo;
    std::string line = raw;
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    if (!inCells) {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError(Kind::Syntax, lineNo, "expected a \"key:\" header line");
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "lattice") {
        if (haveLattice)
          throw ParseError(Kind::Syntax, lineNo, "duplicate lattice header");
        lat = latticeFromName(value, lineNo);
        haveLattice = true;
        latticeLine = lineNo;
      } else if (key == "adjacency") {
        if (modeLine != -1)
          throw ParseError(Kind::Syntax, lineNo, "duplicate adjacency header");
        mode = modeFromName(value, lineNo);
        modeLine = lineNo;
      } else if (key == "cells") {
        if (!value.empty())
          throw ParseError(Kind::Syntax, lineNo, "cells header takes no value");
        inCells = true;
      } else {
        throw ParseError(Kind::Syntax, lineNo, "unknown header \"" + key + "\"");
      }
      continue;
    }
    auto toks = splitWs(line);
    int x = 0, y = 0;
    if (toks.size() != 2 || !parseInt(toks[0], x) || !parseInt(toks[1], y))
      throw ParseError(Kind::Syntax, lineNo, "expected a cell as two integers");
    cells.push_back({x, y});
    lineOf.push_back(lineNo);
  }
  if (!haveLattice)
    throw ParseError(Kind::Syntax, -1, "missing lattice header");
  if (!inCells)
    throw ParseError(Kind::EmptyCells, -1, "missing cells section");
  if (mode == AdjacencyMode::Vertex && lat != LatticeKind::Triangular)
    throw ParseError(Kind::VertexModeInvalid, modeLine,
                     "vertex adjacency is defined on the triangular lattice only");
  (void)latticeLine;
  validateCells(lat, mode, cells, lineOf, -1);
  return Animal(lat, mode, std::move(cells));
}

std::string serializeAnimal(const Animal& a) {
  std::ostringstream os;
  os << "lattice: " << toString(a.lattice()) << "\n";
  if (a.mode() == AdjacencyMode::Vertex)
    os << "adjacency: " << toString(a.mode()) << "\n";
  os << "cells:\n";
  for (Cell c : a.cells()) os << c.x << " " << c.y << "\n";
  return os.str();
}

Animal readAnimalFile(const std::string& path) {
  return parseAnimal(readFileOrThrow(path));
}

void writeAnimalFile(const Animal& a, const std::string& path) {
  writeFileOrThrow(path, serializeAnimal(a));
}

MinimalSet parseSet(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line))
    throw ParseError(Kind::Syntax, 1, "missing set header line");
  auto head = splitWs(trim(line));
  if (head.size() != 7 || head[0] != "latanim-set")
    throw ParseError(Kind::Syntax, 1, "malformed set header line");
  if (head[1] != "1")
    throw ParseError(Kind::Syntax, 1, "unsupported set format version " + head[1]);
  MinimalSet m;
  m.lattice = latticeFromName(head[2], 1);
  m.mode = modeFromName(head[3], 1);
  long long n = 0, count = 0;
  if (!parseLL(head[4], n) || n < 1 || !parseLL(head[5], m.p) || !parseLL(head[6], count) ||
      count < 0)
    throw ParseError(Kind::Syntax, 1, "malformed set header numbers");
  m.n = (int)n;
  if (m.mode == AdjacencyMode::Vertex && m.lattice != LatticeKind::Triangular)
    throw ParseError(Kind::VertexModeInvalid, 1,
                     "vertex adjacency is defined on the triangular lattice only");
  int lineNo = 1;
  while (std::getline(is, line)) {
    ++lineNo;
    std::string body = trim(line);
    if (body.empty()) continue;
    std::vector<Cell> cells;
    for (const std::string& tok : splitWs(body)) {
      size_t comma = tok.find(',');
      int x = 0, y = 0;
      if (comma == std::string::npos || !parseInt(tok.substr(0, comma), x) ||
          !parseInt(tok.substr(comma + 1), y))
        throw ParseError(Kind::Syntax, lineNo, "expected cells as \"x,y\" pairs");
      cells.push_back({x, y});
    }
    if ((long long)cells.size() != n)
      throw ParseError(Kind::Syntax, lineNo, "animal has " + std::to_string(cells.size()) +
                                                 " cells, header says " + std::to_string(n));
    validateCells(m.lattice, m.mode, cells, {}, lineNo);
    m.animals.emplace_back(m.lattice, m.mode, std::move(cells));
  }
  if ((long long)m.animals.size() != count)
    throw ParseError(Kind::Syntax, lineNo,
                     "set has " + std::to_string(m.animals.size()) + " animals, header says " +
                         std::to_string(count));
  return m;
}

std::string serializeSet(const MinimalSet& m) {
  std::ostringstream os;
  os << "latanim-set 1 " << toString(m.lattice) << " " << toString(m.mode) << " " << m.n
     << " " << m.p << " " << m.animals.size() << "\n";
  for (const Animal& a : m.animals) {
    bool first = true;
    for (Cell c : a.cells()) {
      if (!first) os << " ";
      os << c.x << "," << c.y;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

MinimalSet readSetFile(const std::string& path) {
  return parseSet(readFileOrThrow(path));
}

void writeSetFile(const MinimalSet& m, const std::string& path) {
  writeFileOrThrow(path, serializeSet(m));
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct SvgSheet {
  std::ostringstream body;
  double minX = 1e18, minY = 1e18, maxX = -1e18, maxY = -1e18;

  void polygon(const std::vector<std::pair<double, double>>& pts, double ox, double oy,
               bool filled) {
    body << "  <polygon class=\"" << (filled ? "cell" : "rim") << "\" points=\"";
    bool first = true;
    for (auto [x, y] : pts) {
      double px = x + ox, py = -(y + oy);  // flip so y grows upward
      if (!first) body << " ";
      body << fmt(px) << "," << fmt(py);
      first = false;
      minX = std::min(minX, px);
      maxX = std::max(maxX, px);
      minY = std::min(minY, py);
      maxY = std::max(maxY, py);
    }
    body << "\"/>\n";
  }

  void animal(const Animal& a, double ox, double oy) {
    for (Cell c : a.cells()) polygon(cellGeometry(a.lattice(), c), ox, oy, true);
    for (Cell c : perimeter(a)) polygon(cellGeometry(a.lattice(), c), ox, oy, false);
  }

  std::string finish() const {
    double pad = 0.5;
    double x0 = minX - pad, y0 = minY - pad;
    double w = maxX - minX + 2 * pad, h = maxY - minY + 2 * pad;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " " << fmt(y0)
       << " " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(w * 40) << "\" height=\""
       << fmt(h * 40) << "\">\n";
    os << "  <style>.cell{fill:#3b6ea5;stroke:#14304f;stroke-width:0.03}"
          ".rim{fill:none;stroke:#b0413e;stroke-width:0.03;stroke-dasharray:0.09,0.06}"
          "</style>\n";
    os << body.str();
    os << "</svg>\n";
    return os.str();
  }
};

// Rough extent of one drawing, used to space members of a set.
std::pair<double, double> drawExtent(const Animal& a) {
  double minX = 1e18, minY = 1e18, maxX = -1e18, maxY = -1e18;
  auto eat = [&](Cell c) {
    for (auto [x, y] : cellGeometry(a.lattice(), c)) {
      minX = std::min(minX, x);
      maxX = std::max(maxX, x);
      minY = std::min(minY, y);
      maxY = std::max(maxY, y);
    }
  };
  for (Cell c : a.cells()) eat(c);
  for (Cell c : perimeter(a)) eat(c);
  return {maxX - minX, maxY - minY};
}

}  // namespace

std::string renderSvg(const Animal& a) {
  SvgSheet sheet;
  sheet.animal(a, 0, 0);
  return sheet.finish();
}

std::string renderSvg(const MinimalSet& m) {
  if (m.animals.empty()) throw Error("cannot render an empty set");
  double w = 0, h = 0;
  for (const Animal& a : m.animals) {
    auto [aw, ah] = drawExtent(a);
    w = std::max(w, aw);
    h = std::max(h, ah);
  }
  w += 1.5;
  h += 1.5;
  int cols = (int)std::ceil(std::sqrt((double)m.animals.size()));
  SvgSheet sheet;
  for (size_t i = 0; i < m.animals.size(); ++i) {
    double ox = (double)(i % cols) * w;
    double oy = -(double)(i / cols) * h;
    sheet.animal(m.animals[i], ox, oy);
  }
  return sheet.finish();
}

std::string censusJson(const Animal& a) {
  PatternCensus cs = census(a);
  nlohmann::ordered_json j;
  j["lattice"] = toString(a.lattice());
  j["counts"] = nlohmann::ordered_json::object();
  for (auto& [cls, k] : cs.counts) j["counts"][cls.key()] = k;
  j["borderTotal"] = cs.borderTotal();
  j["perimeterTotal"] = cs.perimeterTotal();
  j["eB"] = cs.eB();
  j["eP"] = cs.eP();
  return j.dump(2) + "\n";
}

namespace {

nlohmann::ordered_json reportJson(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["lattice"] = toString(r.lattice);
  j["mode"] = toString(r.mode);
  j["range"] = {{"from", r.from}, {"to", r.to}};
  switch (r.status) {
    case VerifyStatus::Pass: j["status"] = "pass"; break;
    case VerifyStatus::Fail: j["status"] = "fail"; break;
    case VerifyStatus::ExceptionDocumented: j["status"] = "exception-documented"; break;
  }
  j["counterexamples"] = r.counterexamples;
  j["details"] = nlohmann::ordered_json::object();
  for (auto& [k, v] : r.details) j["details"][k] = v;
  j["meta"] = {{"elapsedMs", r.elapsedMs}};
  return j;
}

}  // namespace

std::string reportToJson(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["reports"] = nlohmann::ordered_json::array({reportJson(r)});
  return j.dump(2) + "\n";
}

std::string reportToJson(const std::vector<VerificationReport>& rs) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(reportJson(r));
  j["reports"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace latanim
