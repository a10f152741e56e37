#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latanim/chem.hpp"
#include "latanim/enumerate.hpp"
#include "latanim/io.hpp"
#include "latanim/theory.hpp"
#include "latanim/verify.hpp"

using namespace latanim;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

LatticeKind latFromName(const std::string& s) {
  if (s == "square") return LatticeKind::Square;
  if (s == "hex") return LatticeKind::Hexagonal;
  if (s == "tri") return LatticeKind::Triangular;
  throw Error("unknown lattice \"" + s + "\" (expected square, hex or tri)");
}

AdjacencyMode modeFromName(const std::string& s) {
  if (s == "edge") return AdjacencyMode::Edge;
  if (s == "vertex") return AdjacencyMode::Vertex;
  throw Error("unknown adjacency \"" + s + "\" (expected edge or vertex)");
}

std::string statusWord(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::ExceptionDocumented: return "exception-documented";
  }
  return "?";
}

void printReportLine(const VerificationReport& r) {
  std::cout << r.check << " " << toString(r.lattice) << "/" << toString(r.mode) << " ["
            << r.from << "," << r.to << "]: " << statusWord(r.status) << "\n";
}

void writeJsonReports(const std::string& path, const std::vector<VerificationReport>& rs) {
  if (path.empty()) return;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << reportToJson(rs);
}

struct Options {
  std::string lattice = "square";
  std::string adjacency = "edge";
  std::string inFile, outFile, jsonFile;
  int size = 0;
  int nMax = 0;
  long long pMax = 0;
  int from = 0, to = 0;
  int steps = 1;
  int maxSteps = 64;
  int terms = 4;
  bool viaChain = false;
  bool bruteForce = false;
  bool fullSet = false;
  int threads = 0;
  long long maxAnimals = 100'000'000;
};

EnumOptions enumOptions(const Options& o) {
  EnumOptions e;
  e.threads = o.threads;
  if (e.threads == 0) {
    if (const char* env = std::getenv("LATANIM_THREADS")) e.threads = std::atoi(env);
  }
  e.maxAnimals = o.maxAnimals;
  return e;
}

int cmdEps(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  AdjacencyMode mode = modeFromName(o.adjacency);
  bool closed = lat != LatticeKind::Triangular;
  if (!closed && !o.bruteForce)
    throw Error("the triangular lattice has no closed formula; pass --brute-force");
  EnumOptions opts = enumOptions(o);
  std::cout << "n,formula,oracle\n";
  for (int n = 1; n <= o.nMax; ++n) {
    std::cout << n << ",";
    if (closed) std::cout << epsilonFormula(lat, n);
    std::cout << ",";
    if (o.bruteForce) std::cout << epsilonEmpirical(lat, mode, n, opts);
    std::cout << "\n";
  }
  return kExitPass;
}

int cmdCount(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  std::cout << countAnimals(lat, o.size, enumOptions(o)) << "\n";
  return kExitPass;
}

int cmdMinimal(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  AdjacencyMode mode = modeFromName(o.adjacency);
  EnumOptions opts = enumOptions(o);
  MinimalSet m = o.viaChain ? minimalSetViaChain(lat, mode, o.size, opts)
                            : minimalSetCached(lat, mode, o.size, opts);
  std::cout << m.animals.size() << " animals, perimeter " << m.p << "\n";
  if (!o.outFile.empty()) writeSetFile(m, o.outFile);
  return kExitPass;
}

int cmdInflate(const Options& o, bool inflating) {
  Animal a = readAnimalFile(o.inFile);
  if (o.steps < 0) throw Error("--steps must be nonnegative");
  if (inflating) {
    std::cout << serializeAnimal(inflateK(a, o.steps));
    return kExitPass;
  }
  for (int k = 0; k < o.steps; ++k) {
    std::vector<Cell> d = deflate(a);
    if (d.empty()) throw Error("deflation emptied the animal");
    if (!isEdgeConnected(a.lattice(), d))
      throw Error("deflation left a disconnected cell set");
    a = Animal(a.lattice(), a.mode(), std::move(d));
  }
  std::cout << serializeAnimal(a);
  return kExitPass;
}

int cmdRoots(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  std::cout << "p,root\n";
  for (long long root : chainRoots(lat, o.pMax))
    std::cout << epsilonFormula(lat, root) << "," << root << "\n";
  return kExitPass;
}

int cmdConverge(const Options& o) {
  Animal a = readAnimalFile(o.inFile);
  ConvergenceResult res = convergence(a, o.maxSteps, enumOptions(o));
  std::cout << "k,size,perimeter,phi,holes,bridges,perimeterBridges,minimal\n";
  for (size_t k = 0; k < res.steps.size(); ++k) {
    const ConvergenceStep& s = res.steps[k];
    std::cout << k << "," << s.size << "," << s.perimeter << "," << s.phiValue << ","
              << s.holes << "," << s.bridges << "," << s.perimeterBridges << ","
              << (s.minimal ? "yes" : "no") << "\n";
  }
  if (res.minimalAt >= 0)
    std::cout << "minimal after " << res.minimalAt << " steps\n";
  printReportLine(res.report);
  writeJsonReports(o.jsonFile, {res.report});
  return res.report.passed() ? kExitPass : kExitVerifyFail;
}

int cmdChemFormula(const Options& o) {
  Animal a = readAnimalFile(o.inFile);
  MolecularFormula f = molecularFormula(a);
  bool minimal =
      (long long)perimeter(a).size() == epsilonFormula(a.lattice(), a.size());
  std::cout << f.str();
  if (!minimal) std::cout << " (degree-based count; input is not minimal-perimeter)";
  std::cout << "\n";
  return kExitPass;
}

int cmdChemSeries(const Options& o) {
  auto rows = isomerSeries(o.pMax, o.terms, enumOptions(o), defaultCacheDir());
  std::cout << isomerSeriesCsv(rows);
  return kExitPass;
}

int cmdRender(const Options& o) {
  Animal a = readAnimalFile(o.inFile);
  std::ofstream os(o.outFile, std::ios::binary);
  if (!os) throw Error("cannot open " + o.outFile + " for writing");
  os << renderSvg(a);
  return kExitPass;
}

int finishVerify(const Options& o, const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) printReportLine(r);
  writeJsonReports(o.jsonFile, reports);
  for (const VerificationReport& r : reports)
    if (!r.passed()) return kExitVerifyFail;
  return kExitPass;
}

int cmdVerifyBijection(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  if (o.from < 1 || o.to < o.from) throw Error("need 1 <= --from <= --to");
  EnumOptions opts = enumOptions(o);
  std::vector<VerificationReport> reports;
  for (int n = o.from; n <= o.to; ++n)
    reports.push_back(verifyBijection(lat, AdjacencyMode::Edge, n, o.fullSet, opts));
  return finishVerify(o, reports);
}

int cmdVerifyRoots(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  return finishVerify(o, {verifyRoots(lat, AdjacencyMode::Edge, o.nMax, enumOptions(o))});
}

int cmdVerifyStepping(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  return finishVerify(o, {verifyStepping(lat, o.nMax, enumOptions(o))});
}

int cmdVerifyMonotonic(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  AdjacencyMode mode = modeFromName(o.adjacency);
  return finishVerify(o, {verifyMonotonicity(lat, mode, o.nMax, enumOptions(o))});
}

int cmdVerifyConvergence(const Options& o) {
  LatticeKind lat = latFromName(o.lattice);
  EnumOptions opts = enumOptions(o);
  EnumOptions sweepOpts = opts;
  sweepOpts.serializeVisitor = true;
  VerificationReport sweep;
  sweep.check = "convergence-sweep";
  sweep.lattice = lat;
  sweep.mode = AdjacencyMode::Edge;
  sweep.from = 1;
  sweep.to = o.nMax;
  for (int n = 1; n <= o.nMax; ++n) {
    long long failures = 0;
    long long total = forEachAnimal(
        lat, n,
        [&](const Animal& a) {
          ConvergenceResult res = convergence(a, o.maxSteps, opts);
          if (!res.report.passed()) {
            ++failures;
            if (sweep.counterexamples.size() < 16)
              sweep.counterexamples.push_back(res.report.counterexamples.front());
          }
        },
        sweepOpts);
    sweep.note("n=" + std::to_string(n),
               std::to_string(total) + " animals" +
                   (failures ? ", " + std::to_string(failures) + " FAILED" : ""));
    if (failures) sweep.status = VerifyStatus::Fail;
  }
  return finishVerify(o, {sweep});
}

int cmdVerifyPolyiamond(const Options& o) {
  return finishVerify(o, {verifyPolyiamondDuality(o.nMax, enumOptions(o))});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-perimeter lattice animal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads / --max-animals may follow the subcommand
  Options o;
  app.add_option("--threads", o.threads, "worker threads (0 = LATANIM_THREADS or all cores)");
  app.add_option("--max-animals", o.maxAnimals,
                 "enumeration budget: abort once more animals than this are generated");

  auto addLattice = [&](CLI::App* c) {
    c->add_option("--lattice", o.lattice, "square, hex or tri")->required();
  };

  CLI::App* eps = app.add_subcommand("eps", "minimum-perimeter table as CSV");
  addLattice(eps);
  eps->add_option("--n-max", o.nMax, "largest size")->required();
  eps->add_option("--adjacency", o.adjacency, "edge or vertex");
  eps->add_flag("--brute-force", o.bruteForce, "fill the oracle column by enumeration");

  CLI::App* count = app.add_subcommand("count", "number of fixed animals of one size");
  addLattice(count);
  count->add_option("--size", o.size, "animal size")->required();

  CLI::App* minimal = app.add_subcommand("minimal", "minimal-perimeter set of one size");
  addLattice(minimal);
  minimal->add_option("--size", o.size, "animal size")->required();
  minimal->add_option("--adjacency", o.adjacency, "edge or vertex");
  minimal->add_flag("--via-chain", o.viaChain, "derive the set by certified inflation");
  minimal->add_option("--out", o.outFile, "write the set to this file");

  CLI::App* inflateCmd = app.add_subcommand("inflate", "grow an animal by its perimeter");
  inflateCmd->add_option("--in", o.inFile, "animal file")->required();
  inflateCmd->add_option("--steps", o.steps, "number of inflations (default 1)");

  CLI::App* deflateCmd = app.add_subcommand("deflate", "strip an animal's border");
  deflateCmd->add_option("--in", o.inFile, "animal file")->required();
  deflateCmd->add_option("--steps", o.steps, "number of deflations (default 1)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification check");
  verify->require_subcommand(1);
  auto addJson = [&](CLI::App* c) {
    c->add_option("--json", o.jsonFile, "write the JSON report here");
  };
  CLI::App* vb = verify->add_subcommand("bijection", "inflation maps minimal sets to minimal sets");
  addLattice(vb);
  vb->add_option("--from", o.from, "first source size")->required();
  vb->add_option("--to", o.to, "last source size")->required();
  vb->add_flag("--full-set", o.fullSet, "enumerate the target set and compare exactly");
  addJson(vb);
  CLI::App* vr = verify->add_subcommand("roots", "chain roots match the closed formulas");
  addLattice(vr);
  vr->add_option("--n-max", o.nMax, "largest size")->required();
  addJson(vr);
  CLI::App* vs = verify->add_subcommand("stepping", "minimal animals are hole- and bridge-free");
  addLattice(vs);
  vs->add_option("--n-max", o.nMax, "largest size")->required();
  addJson(vs);
  CLI::App* vm = verify->add_subcommand("monotonic", "minimum perimeter is weakly increasing");
  addLattice(vm);
  vm->add_option("--n-max", o.nMax, "largest size")->required();
  vm->add_option("--adjacency", o.adjacency, "edge or vertex");
  addJson(vm);
  CLI::App* vc = verify->add_subcommand("convergence", "repeated inflation reaches a minimal animal");
  addLattice(vc);
  vc->add_option("--n-max", o.nMax, "largest starting size")->required();
  vc->add_option("--max-steps", o.maxSteps, "step cap per animal");
  addJson(vc);
  CLI::App* vp = verify->add_subcommand("polyiamond", "triangular duality: vertex bijection, edge counterexample");
  vp->add_option("--n-max", o.nMax, "largest size")->required();
  addJson(vp);

  CLI::App* roots = app.add_subcommand("roots", "chain roots by perimeter as CSV");
  addLattice(roots);
  roots->add_option("--p-max", o.pMax, "largest perimeter")->required();

  CLI::App* converge = app.add_subcommand("converge", "inflation trajectory of one animal");
  converge->add_option("--in", o.inFile, "animal file")->required();
  converge->add_option("--max-steps", o.maxSteps, "step cap")->required();
  addJson(converge);

  CLI::App* chem = app.add_subcommand("chem", "benzenoid views of polyhexes");
  chem->require_subcommand(1);
  CLI::App* cf = chem->add_subcommand("formula", "molecular formula of a polyhex");
  cf->add_option("--in", o.inFile, "animal file")->required();
  CLI::App* cs = chem->add_subcommand("series", "constant-isomer series table as CSV");
  cs->add_option("--p-max", o.pMax, "largest root perimeter")->required();
  cs->add_option("--terms", o.terms, "series terms per row (default 4)");

  CLI::App* render = app.add_subcommand("render", "draw an animal as SVG");
  render->add_option("--in", o.inFile, "animal file")->required();
  render->add_option("--out", o.outFile, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "latanim: error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*eps) return cmdEps(o);
    if (*count) return cmdCount(o);
    if (*minimal) return cmdMinimal(o);
    if (*inflateCmd) return cmdInflate(o, true);
    if (*deflateCmd) return cmdInflate(o, false);
    if (*vb) return cmdVerifyBijection(o);
    if (*vr) return cmdVerifyRoots(o);
    if (*vs) return cmdVerifyStepping(o);
    if (*vm) return cmdVerifyMonotonic(o);
    if (*vc) return cmdVerifyConvergence(o);
    if (*vp) return cmdVerifyPolyiamond(o);
    if (*roots) return cmdRoots(o);
    if (*converge) return cmdConverge(o);
    if (*cf) return cmdChemFormula(o);
    if (*cs) return cmdChemSeries(o);
    if (*render) return cmdRender(o);
    std::cerr << "latanim: error: no subcommand\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "latanim: error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "latanim: error: " << e.what() << "\n";
    return kExitUsage;
  }
}
