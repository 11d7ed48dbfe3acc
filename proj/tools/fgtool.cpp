// Command-line front end: structure transforms, fundamental-group reports,
// homology/Hochschild dimensions and the randomized theorem checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgtool/algebra.hpp"
#include "fgtool/check.hpp"
#include "fgtool/io.hpp"
#include "fgtool/pi1.hpp"

using namespace fgtool;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned long long hom_budget() {
  const char* env = std::getenv("FGTOOL_HOM_BUDGET");
  if (!env || !*env) return kDefaultHomBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw Error(Errc::InvalidInput, "FGTOOL_HOM_BUDGET must be a positive integer");
  return v;
}

SimplicialComplex load_complex(const std::string& path, bool closeDown) {
  InputDocument doc = parse_input(read_file(path), closeDown);
  if (doc.kind != DocumentKind::Complex)
    throw Error(Errc::InvalidInput, "'" + path + "' is not a complex file");
  return *doc.complex;
}

Poset load_poset(const std::string& path) {
  InputDocument doc = parse_input(read_file(path));
  if (doc.kind != DocumentKind::Poset)
    throw Error(Errc::InvalidInput, "'" + path + "' is not a poset file");
  return *doc.poset;
}

Quiver load_quiver(const std::string& path) {
  InputDocument doc = parse_input(read_file(path));
  if (doc.kind != DocumentKind::Quiver)
    throw Error(Errc::InvalidInput, "'" + path + "' is not a quiver file");
  return *doc.quiver;
}

Report group_report(std::string echo, const Presentation& p) {
  Report rep;
  rep.echo = std::move(echo);
  std::vector<std::string> notes;
  InvariantReport inv = invariant_suite(p, hom_budget(), &notes);
  std::ostringstream shape;
  shape << p.generators.size() << " generator(s), " << p.relators.size() << " relator(s)";
  rep.summary.push_back(shape.str());
  std::string described = describe_group(p);
  if (!described.empty()) rep.summary.push_back(described);
  for (const auto& n : notes) rep.summary.push_back(n);
  rep.machine = serialize_presentation(p) + format_invariants(inv);
  return rep;
}

Report structure_report(std::string echo, std::string machine, std::string summary) {
  Report rep;
  rep.echo = std::move(echo);
  rep.summary.push_back(std::move(summary));
  rep.machine = std::move(machine);
  return rep;
}

int print_check(const CheckResult& res) {
  std::cout << "# check " << res.name << '\n';
  for (const auto& line : res.lines) std::cout << line << '\n';
  std::cout << res.name << ": " << (res.cases - res.failures) << "/" << res.cases
            << " passed\n";
  return res.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of complexes, posets and acyclic quivers"};
  app.require_subcommand(1);

  std::string file, file1, file2;
  std::string basepoint;
  bool closeDown = false;
  long long characteristic = 0;
  std::uint64_t seed = 1;
  int count = 25;
  int maxSize = 8;

  // complex ----------------------------------------------------------------
  auto* complexCmd = app.add_subcommand("complex", "operations on simplicial complexes");
  complexCmd->require_subcommand(1);
  auto addComplexFile = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "complex file")->required();
    cmd->add_flag("--close-down", closeDown, "add missing faces instead of rejecting");
  };
  auto* cxPi1 = complexCmd->add_subcommand("pi1", "edge-path group presentation");
  addComplexFile(cxPi1);
  cxPi1->add_option("--basepoint", basepoint, "base vertex (default: least label)");
  auto* cxPos = complexCmd->add_subcommand("pos", "poset of simplexes under inclusion");
  addComplexFile(cxPos);
  auto* cxBary = complexCmd->add_subcommand("barycentric", "barycentric subdivision");
  addComplexFile(cxBary);
  auto* cxH1 = complexCmd->add_subcommand("h1", "integral first homology");
  addComplexFile(cxH1);
  auto* cxH1dim = complexCmd->add_subcommand("h1dim", "dim of first cohomology over k");
  addComplexFile(cxH1dim);
  cxH1dim->add_option("--char", characteristic, "field characteristic (0 or prime)")->required();

  // poset ------------------------------------------------------------------
  auto* posetCmd = app.add_subcommand("poset", "operations on posets");
  posetCmd->require_subcommand(1);
  auto* psSim = posetCmd->add_subcommand("sim", "order complex");
  psSim->add_option("file", file, "poset file")->required();
  auto* psHasse = posetCmd->add_subcommand("hasse", "Hasse quiver of cover relations");
  psHasse->add_option("file", file, "poset file")->required();
  auto* psPi1 = posetCmd->add_subcommand("pi1", "fundamental group presentation");
  psPi1->add_option("file", file, "poset file")->required();
  auto* psHh1 = posetCmd->add_subcommand("hh1", "first Hochschild cohomology dimension");
  psHh1->add_option("file", file, "poset file")->required();
  psHh1->add_option("--char", characteristic, "field characteristic (0 or prime)")->required();

  // quiver -----------------------------------------------------------------
  auto* quiverCmd = app.add_subcommand("quiver", "operations on acyclic quivers");
  quiverCmd->require_subcommand(1);
  auto* qvPi1 = quiverCmd->add_subcommand("pi1", "fundamental group presentation");
  qvPi1->add_option("file", file, "quiver file")->required();
  auto* qvComplete = quiverCmd->add_subcommand("complete", "add arrows parallel to paths");
  qvComplete->add_option("file", file, "quiver file")->required();
  auto* qvOrder = quiverCmd->add_subcommand("order", "drop arrows parallel to paths");
  qvOrder->add_option("file", file, "quiver file")->required();

  // vankampen ----------------------------------------------------------------
  auto* vkCmd = app.add_subcommand("vankampen", "glue the groups of two covering pieces");
  vkCmd->add_option("quiver", file, "ambient quiver file")->required();
  vkCmd->add_option("piece1", file1, "first piece file")->required();
  vkCmd->add_option("piece2", file2, "second piece file")->required();
  vkCmd->add_option("--basepoint", basepoint, "base vertex of the intersection piece");

  // check --------------------------------------------------------------------
  auto* checkCmd = app.add_subcommand("check", "randomized theorem checks");
  checkCmd->require_subcommand(1);
  std::vector<CLI::App*> checks;
  for (const char* name : {"theorem2", "theorem3", "theorem4", "roundtrip"}) {
    auto* c = checkCmd->add_subcommand(name);
    c->add_option("--seed", seed, "first seed (default 1)");
    c->add_option("--count", count, "number of cases (default 25)");
    c->add_option("--max-size", maxSize, "maximum structure size (default 8)");
    checks.push_back(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1; // usage problems are input errors
  }

  auto echo = [&](std::initializer_list<std::string> parts) {
    std::string s = "fgtool";
    for (const auto& p : parts) s += " " + p;
    return s;
  };

  try {
    if (cxPi1->parsed()) {
      SimplicialComplex c = load_complex(file, closeDown);
      Label bp = basepoint.empty() ? c.vertices.front() : basepoint;
      std::cout << group_report(echo({"complex", "pi1", file}),
                                edge_path_presentation(c, bp))
                       .render();
    } else if (cxPos->parsed()) {
      SimplicialComplex c = load_complex(file, closeDown);
      Poset p = pos_of_complex(c);
      std::cout << structure_report(echo({"complex", "pos", file}), serialize_poset(p),
                                    std::to_string(p.size()) + " element(s)")
                       .render();
    } else if (cxBary->parsed()) {
      SimplicialComplex c = load_complex(file, closeDown);
      SimplicialComplex b = barycentric(c);
      std::cout << structure_report(echo({"complex", "barycentric", file}),
                                    serialize_complex(b),
                                    std::to_string(b.vertices.size()) + " vertex(es), " +
                                        std::to_string(b.simplexes.size()) + " simplex(es)")
                       .render();
    } else if (cxH1->parsed()) {
      SimplicialComplex c = load_complex(file, closeDown);
      H1Result h = h1_integral(c);
      std::ostringstream machine;
      machine << "h1: rank " << h.rank;
      if (!h.torsion.empty()) {
        machine << " torsion";
        for (const auto& d : h.torsion) machine << ' ' << d;
      }
      machine << '\n';
      std::cout << structure_report(echo({"complex", "h1", file}), machine.str(),
                                    "integral first homology")
                       .render();
    } else if (cxH1dim->parsed()) {
      SimplicialComplex c = load_complex(file, closeDown);
      int dim = h1_cohomology_dim(c, make_field(characteristic));
      std::cout << structure_report(
                       echo({"complex", "h1dim", file}),
                       "h1dim: " + std::to_string(dim) + "\n",
                       "cohomology over characteristic " + std::to_string(characteristic))
                       .render();
    } else if (psSim->parsed()) {
      SimplicialComplex c = sim_of_poset(load_poset(file));
      std::cout << structure_report(echo({"poset", "sim", file}), serialize_complex(c),
                                    std::to_string(c.simplexes.size()) + " simplex(es)")
                       .render();
    } else if (psHasse->parsed()) {
      Quiver h = hasse_quiver(load_poset(file)).quiver;
      std::cout << structure_report(echo({"poset", "hasse", file}), serialize_quiver(h),
                                    std::to_string(h.arrows.size()) + " arrow(s)")
                       .render();
    } else if (psPi1->parsed()) {
      Quiver h = hasse_quiver(load_poset(file)).quiver;
      std::cout << group_report(echo({"poset", "pi1", file}),
                                quiver_pi1_presentation(h, h.vertices.front()))
                       .render();
    } else if (psHh1->parsed()) {
      int dim = hh1_dimension(load_poset(file), make_field(characteristic));
      std::cout << structure_report(
                       echo({"poset", "hh1", file}), "hh1: " + std::to_string(dim) + "\n",
                       "derivations modulo inner derivations, characteristic " +
                           std::to_string(characteristic))
                       .render();
    } else if (qvPi1->parsed()) {
      Quiver q = load_quiver(file);
      std::cout << group_report(echo({"quiver", "pi1", file}),
                                quiver_pi1_presentation(q, q.vertices.front()))
                       .render();
    } else if (qvComplete->parsed()) {
      Quiver qc = complete_quiver(load_quiver(file));
      std::cout << structure_report(echo({"quiver", "complete", file}), serialize_quiver(qc),
                                    std::to_string(qc.arrows.size()) + " arrow(s)")
                       .render();
    } else if (qvOrder->parsed()) {
      Quiver qo = order_quiver(load_quiver(file)).quiver;
      std::cout << structure_report(echo({"quiver", "order", file}), serialize_quiver(qo),
                                    std::to_string(qo.arrows.size()) + " arrow(s)")
                       .render();
    } else if (vkCmd->parsed()) {
      Quiver q = load_quiver(file), q1 = load_quiver(file1), q2 = load_quiver(file2);
      std::optional<Label> bp;
      if (!basepoint.empty()) bp = basepoint;
      Presentation p = van_kampen_assemble(q, q1, q2, bp);
      std::cout << group_report(echo({"vankampen", file, file1, file2}), p).render();
    } else if (checks[0]->parsed()) {
      return print_check(check_theorem2(seed, count, maxSize, hom_budget()));
    } else if (checks[1]->parsed()) {
      return print_check(check_theorem3());
    } else if (checks[2]->parsed()) {
      return print_check(check_theorem4(seed, count, maxSize, hom_budget()));
    } else if (checks[3]->parsed()) {
      return print_check(check_roundtrip(seed, count, maxSize));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
