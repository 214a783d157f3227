#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "covspec/error.hpp"
#include "covspec/fano.hpp"
#include "covspec/reference_data.hpp"
#include "covspec/json_io.hpp"
#include "covspec/repro.hpp"

using namespace covspec;

namespace {

constexpr int kPass = 0, kAssertion = 1, kUndecided = 2, kInput = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::vector<Rational>> parse_basis(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::istringstream cs(row);
    std::string tok;
    std::vector<Rational> r;
    while (cs >> tok) r.push_back(Rational::parse(tok));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

CovSpecBudgets budgets_from(const std::string& budget) {
  CovSpecBudgets b;
  b.oracle = OracleBudgets::from_environment();
  if (!budget.empty()) b.max_budget = Rational::parse(budget);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering spectra of metric graphs and flat tori"};
  app.require_subcommand(1);

  std::string input, budget, la = "2/1", lb = "5/2", group = "fano", basis, fano_graph, name = "G";
  bool explain = false;
  long stab1 = -1, stab2 = -1;
  std::size_t n = 1;

  auto* cs = app.add_subcommand("covspec", "covering spectrum of a graph JSON file");
  cs->add_option("--input", input, "graph JSON")->required();
  cs->add_option("--budget", budget, "largest enumeration length to try (p/q)");
  cs->add_flag("--explain", explain, "include witnesses and certificates");

  auto* fano = app.add_subcommand("fano", "both Fano Schreier graphs at (l_A, l_B)");
  fano->add_option("--la", la, "length of A edges (p/q)");
  fano->add_option("--lb", lb, "length of B edges (p/q)");
  fano->add_option("--budget", budget, "largest enumeration length to try (p/q)");
  fano->add_flag("--explain", explain, "include witnesses and certificates");

  auto* triple = app.add_subcommand("triple", "Gassmann-Sunada and jump-equivalence check");
  triple->add_option("--group", group, "group file, or 'fano'");
  triple->add_option("--stab1", stab1, "H1 = stabilizer of this point");
  triple->add_option("--stab2", stab2, "H2 = stabilizer of this point");

  auto* torus = app.add_subcommand("torus", "covering spectrum of a flat torus");
  torus->add_option("--basis", basis, "rows separated by ';', e.g. \"2 0; 0 3\"")->required();

  auto* repro = app.add_subcommand("repro", "full Fano pipeline with genus table");
  repro->add_option("--n", n, "genus table size")->check(CLI::PositiveNumber);
  repro->add_option("--budget", budget, "largest enumeration length to try (p/q)");
  repro->add_flag("--explain", explain, "include witnesses and certificates");

  auto* dot = app.add_subcommand("export-dot", "Graphviz text for a graph");
  auto* dot_in = dot->add_option("--input", input, "graph JSON");
  dot->add_option("--fano", fano_graph, "points or lines")->excludes(dot_in)->check(CLI::IsMember({"points", "lines"}));
  dot->add_option("--name", name, "graph name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*cs) {
      MetricGraph x = metric_graph_from_json(parse_json(read_file(input)));
      auto r = covering_spectrum(x, budgets_from(budget));
      emit(covspec_to_json(x, r, explain));
      return kPass;
    }
    if (*fano) {
      auto r = run_fano(Rational::parse(la), Rational::parse(lb), budgets_from(budget));
      if (!r.constraint_ok)
        std::cerr << "warning: lengths violate 0 < l_A < l_B < 3/2 l_A; assertions not claimed\n";
      emit(fano_to_json(r, explain));
      return r.pass() ? kPass : kAssertion;
    }
    if (*triple) {
      if (group == "fano") {
        auto t = run_fano_triple();
        emit(triple_to_json(t));
        return t.gassmann.holds ? kPass : kAssertion;
      }
      GroupFile gf = parse_group_file(read_file(group));
      FiniteGroup g = FiniteGroup::closure(gf.generators);
      auto pick = [&](bool has, const std::vector<Permutation>& gens, long stab, const char* which) {
        if (stab >= 0) {
          if (static_cast<std::size_t>(stab) >= g.degree()) throw InputError(std::string(which) + " point out of range");
          return stabilizer(g, static_cast<std::size_t>(stab));
        }
        if (!has) throw InputError(std::string("no ") + which + " given (file line or --stab option)");
        return subgroup_generated(g, std::span<const Permutation>(gens));
      };
      Subgroup h1 = pick(gf.has_h1, gf.h1, stab1, "H1");
      Subgroup h2 = pick(gf.has_h2, gf.h2, stab2, "H2");
      emit(triple_to_json(run_triple(h1, h2)));
      return kPass;
    }
    if (*torus) {
      emit(lattice_to_json(covering_spectrum_lattice(parse_basis(basis))));
      return kPass;
    }
    if (*repro) {
      auto r = run_repro(n, budgets_from(budget));
      emit(repro_to_json(r, explain));
      return r.pass() ? kPass : kAssertion;
    }
    if (*dot) {
      ColoredGraph g;
      if (!fano_graph.empty()) {
        auto fg = fano_graphs();
        g = fano_graph == "points" ? fg.points : fg.lines;
      } else if (!input.empty()) {
        g = colored_graph_from_json(parse_json(read_file(input)));
      } else {
        throw InputError("export-dot needs --input or --fano");
      }
      std::cout << export_dot(g, name);
      return kPass;
    }
  } catch (const OracleUndecided& e) {
    std::cerr << "undecided: " << e.what() << "\nquery: " << e.query() << '\n';
    return kUndecided;
  } catch (const CapExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kUndecided;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertion;
  }
  return kInput;
}
