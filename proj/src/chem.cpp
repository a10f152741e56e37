#include "latanim/chem.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "latanim/theory.hpp"

namespace latanim {

std::string MolecularFormula::str() const {
  return "C" + std::to_string(carbons) + "H" + std::to_string(hydrogens);
}

MolecularFormula molecularFormula(const Animal& a) {
  if (a.lattice() != LatticeKind::Hexagonal)
    throw UnsupportedError("molecular formulas are defined for polyhexes only");
  using V = std::pair<int, int>;
  std::set<V> covered;
  for (Cell c : a.cells())
    for (auto v : cellCornersDoubled(a.lattice(), c)) covered.insert(v);
  MolecularFormula f;
  f.carbons = (long long)covered.size();
  // Vertex neighbors in the doubled scheme depend on the vertex row mod 3:
  // rows = 1 (mod 3) connect up, rows = 2 (mod 3) connect down.
  for (auto [x, y] : covered) {
    int rem = ((y % 3) + 3) % 3;
    int deg = 0;
    if (rem == 1) {
      deg = covered.count({x + 1, y + 1}) + covered.count({x - 1, y + 1}) +
            covered.count({x, y - 2});
    } else {
      deg = covered.count({x + 1, y - 1}) + covered.count({x - 1, y - 1}) +
            covered.count({x, y + 2});
    }
    if (deg < 3) ++f.hydrogens;
  }
  long long perim = (long long)perimeter(a).size();
  if (perim == epsilonFormula(a.lattice(), a.size()) && f.hydrogens != perim)
    throw Error("hydrogen count disagrees with the perimeter on minimal input");
  return f;
}

std::vector<IsomerSeriesRow> isomerSeries(long long pMax, int terms,
                                          const EnumOptions& opts,
                                          const std::string& cacheDir) {
  if (terms < 1) throw Error("need at least one series term");
  std::vector<IsomerSeriesRow> rows;
  for (long long root : chainRoots(LatticeKind::Hexagonal, pMax)) {
    IsomerSeriesRow row;
    row.root = root;
    row.p = epsilonFormula(LatticeKind::Hexagonal, root);
    long long n = root;
    for (int t = 0; t < terms; ++t) {
      row.sizes.push_back(n);
      n += epsilonFormula(LatticeKind::Hexagonal, n);
    }
    try {
      row.isomers = -1;
      for (long long size : row.sizes) {
        MinimalSet m = size == root
                           ? minimalSetCached(LatticeKind::Hexagonal, AdjacencyMode::Edge,
                                              (int)size, opts, cacheDir)
                           : minimalSetViaChain(LatticeKind::Hexagonal, AdjacencyMode::Edge,
                                                (int)size, opts);
        if (row.isomers == -1) row.isomers = (long long)m.animals.size();
        if (row.isomers != (long long)m.animals.size())
          throw Error("isomer count drifted along a series");
        MolecularFormula f = molecularFormula(m.animals.front());
        for (const Animal& member : m.animals)
          if (!(molecularFormula(member) == f))
            throw Error("series members of one size disagree on the formula");
        row.formulas.push_back(f);
      }
      row.computed = true;
    } catch (const BudgetError&) {
      row.computed = false;
      row.isomers = 0;
      row.formulas.clear();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string isomerSeriesCsv(const std::vector<IsomerSeriesRow>& rows) {
  std::ostringstream os;
  os << "p,root,sizes,isomers,formulas\n";
  for (const IsomerSeriesRow& row : rows) {
    os << row.p << "," << row.root << ",";
    for (size_t i = 0; i < row.sizes.size(); ++i)
      os << (i ? " " : "") << row.sizes[i];
    os << ",";
    if (!row.computed) {
      os << "uncomputed,\n";
      continue;
    }
    os << row.isomers << ",";
    for (size_t i = 0; i < row.formulas.size(); ++i)
      os << (i ? " " : "") << row.formulas[i].str();
    os << "\n";
  }
  return os.str();
}

}  // namespace latanim
