#pragma once

#include <string>
#include <vector>

#include "latanim/enumerate.hpp"

namespace latanim {

struct MolecularFormula {
  long long carbons = 0;
  long long hydrogens = 0;
  std::string str() const;  // "C10H8"
  friend bool operator==(const MolecularFormula&, const MolecularFormula&) = default;
};

// Carbon count = distinct lattice vertices covered by the cells; hydrogen
// count = covered vertices with fewer than three covered neighbors along
// lattice edges. On minimal-perimeter input the hydrogen count additionally
// equals the perimeter size (checked internally). Hexagonal lattice only.
MolecularFormula molecularFormula(const Animal& a);

struct IsomerSeriesRow {
  long long p = 0;     // minimal perimeter of the root size
  long long root = 0;  // first size of the series
  std::vector<long long> sizes;
  bool computed = false;  // false: the root set was beyond the budget
  long long isomers = 0;  // |M_n|, constant along the series
  std::vector<MolecularFormula> formulas;  // one per size
};

// One row per chain root with perimeter at most pMax, each carrying the
// first `terms` sizes of its series. Set membership beyond the root comes
// from certified inflation; a root whose direct enumeration exceeds the
// budget yields an uncomputed row (sizes are still filled in).
std::vector<IsomerSeriesRow> isomerSeries(long long pMax, int terms = 4,
                                          const EnumOptions& opts = {},
                                          const std::string& cacheDir = std::string());

// CSV with header "p,root,sizes,isomers,formulas"; list cells are
// space-separated, uncomputed rows say so in the isomers column.
std::string isomerSeriesCsv(const std::vector<IsomerSeriesRow>& rows);

}  // namespace latanim
