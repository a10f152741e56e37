#pragma once

#include <string>
#include <vector>

#include "latanim/animal.hpp"
#include "latanim/enumerate.hpp"

namespace latanim {

struct VerificationReport;

// Text format: '#' starts a comment, a 'lattice:' header names the lattice
// (square, hex, tri), an optional 'adjacency:' header picks edge or vertex
// (edge by default), and a 'cells:' header is followed by one "x y" pair per
// line. Parse failures throw ParseError with the offending line number.
Animal parseAnimal(const std::string& text);
std::string serializeAnimal(const Animal& a);
Animal readAnimalFile(const std::string& path);
void writeAnimalFile(const Animal& a, const std::string& path);

// Container format for minimal sets: a header line
//   latanim-set 1 <lattice> <mode> <n> <p> <count>
// followed by one animal per line as space-separated "x,y" pairs.
MinimalSet parseSet(const std::string& text);
std::string serializeSet(const MinimalSet& m);
MinimalSet readSetFile(const std::string& path);
void writeSetFile(const MinimalSet& m, const std::string& path);

// Deterministic SVG. Animal cells are drawn filled, perimeter cells outlined.
std::string renderSvg(const Animal& a);
// Every member of the set on one sheet, in a near-square grid.
std::string renderSvg(const MinimalSet& m);

// Pattern census of an animal as a JSON object.
std::string censusJson(const Animal& a);

// Verification reports as JSON (schema 1). Timing lives in an isolated meta
// block so that everything outside it is reproducible.
std::string reportToJson(const VerificationReport& r);
std::string reportToJson(const std::vector<VerificationReport>& rs);

}  // namespace latanim
