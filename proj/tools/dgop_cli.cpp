// dgop: exact checks on the dg operads Π, Pasc, K′ and their duals.

#include "dgop/homology.hpp"
#include "dgop/koszul_dual.hpp"
#include "dgop/presentations.hpp"
#include "dgop/report.hpp"
#include "dgop/series.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_to(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

int finish(const dgop::RunReport& rep, const std::string& json_path, bool quiet_text) {
  if (!quiet_text) {
    std::cout << rep.text();
    int fail = 0, conj = 0;
    for (const auto& c : rep.checks) {
      fail += c.status == dgop::Status::fail;
      conj += c.status == dgop::Status::conjectural_pass;
    }
    std::cout << rep.checks.size() << " checks, " << fail << " failed";
    if (conj) std::cout << ", " << conj << " conjectural";
    std::cout << "\n";
  }
  if (!json_path.empty()) write_to(json_path, rep.to_json().dump(2) + "\n");
  return rep.exit_code();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the dg operads of permutohedra, simplices and associahedra"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "cap on OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  std::string json_path, csv_path, operad, pair;
  int max_arity = -1, arity = -1, row = -1;
  bool serial = false, squares = false;

  auto* verify = app.add_subcommand("verify", "axiom suite (explicit models) or presentation checks");
  verify->add_option("operad", operad, "pi, pasc, kprime, trias, coprod or lambda")->required();
  verify->add_option("--max-arity", max_arity, "largest (total) arity checked")->required();
  verify->add_flag("--serial", serial, "use the serial reference kernels");
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* hom = app.add_subcommand("homology", "integral homology of one arity component");
  hom->add_option("operad", operad, "pi, pasc or any presentation id")->required();
  hom->add_option("--arity", arity, "arity n")->required();
  hom->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* table = app.add_subcommand("table", "generating-series table, computed against closed forms");
  table->add_option("--max-arity", max_arity, "truncation order")->required();
  table->add_option("--csv", csv_path, "write operad,n,k,dim rows here ('-' for stdout)");
  table->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* dual = app.add_subcommand("dual", "Koszul dual relations against the orthogonal complement");
  dual->add_option("pair", pair, "pi-coprod, pasc-lambda or kprime-trias")->required();
  dual->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* morph = app.add_subcommand("morphisms", "morphisms of the diagram");
  morph->add_flag("--squares", squares, "only the commutative squares");
  morph->add_option("--max-arity", max_arity, "bound for the degree-0 identifications (default 5)");
  morph->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* exact = app.add_subcommand("exactness", "row exactness of the diagram");
  exact->add_option("--row", row, "2, 3 or 4")->required();
  exact->add_option("--max-arity", max_arity, "largest arity compared (default 3)");
  exact->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  dgop::RunReport rep;
  rep.command = app.get_subcommands().front()->get_name();
  const bool json_to_stdout = json_path == "-";
  try {
    if (*verify) {
      require(max_arity >= 1, "--max-arity must be at least 1");
      const auto& ids = dgop::verifiable_operads();
      require(std::find(ids.begin(), ids.end(), operad) != ids.end(), "unknown operad '" + operad + "'");
      rep.arguments = {{"operad", operad}, {"max_arity", max_arity}, {"serial", serial}};
      rep.append(dgop::verify_checks(operad, max_arity, serial ? dgop::Execution::serial : dgop::Execution::parallel));
    } else if (*hom) {
      require(arity >= 1, "--arity must be at least 1");
      auto ids = dgop::presentation_ids();
      require(operad == "pi" || operad == "pasc" || std::find(ids.begin(), ids.end(), operad) != ids.end(),
              "unknown operad '" + operad + "'");
      rep.arguments = {{"operad", operad}, {"arity", arity}};
      rep.append(dgop::homology_checks(operad, arity));
      if (!json_to_stdout) {
        auto C = dgop::build_complex(operad, arity);
        std::cout << operad << "(" << arity << "): dims " << dgop::format_dims(C.dims()) << ", "
                  << dgop::homology(C).format() << "\n";
      }
    } else if (*table) {
      require(max_arity >= 1, "--max-arity must be at least 1");
      rep.arguments = {{"max_arity", max_arity}};
      if (!json_to_stdout && csv_path != "-") std::cout << dgop::table_text(max_arity);
      if (!csv_path.empty()) write_to(csv_path, dgop::dimension_csv(max_arity));
      rep.append(dgop::table_checks(max_arity));
    } else if (*dual) {
      bool known = false;
      for (const auto& p : dgop::dual_pairs()) known |= p.id == pair;
      require(known, "unknown pair '" + pair + "'");
      rep.arguments = {{"pair", pair}};
      rep.append(dgop::duality_checks(pair));
    } else if (*morph) {
      if (max_arity < 0) max_arity = 5;
      require(max_arity >= 1, "--max-arity must be at least 1");
      rep.arguments = {{"squares", squares}, {"max_arity", max_arity}};
      if (!squares) rep.append(dgop::well_defined_checks());
      rep.append(dgop::square_checks());
      if (!squares) rep.append(dgop::degree_zero_checks(max_arity));
    } else if (*exact) {
      if (max_arity < 0) max_arity = 3;
      require(row >= 2 && row <= 4, "--row must be 2, 3 or 4");
      require(max_arity >= 1, "--max-arity must be at least 1");
      rep.arguments = {{"row", row}, {"max_arity", max_arity}};
      rep.append(dgop::exactness_checks(row, max_arity));
    }
  } catch (const UsageError& e) {
    std::cerr << "dgop: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dgop: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "dgop: " << e.what() << "\n";
    return 1;
  }
  return finish(rep, json_path, json_to_stdout || csv_path == "-");
}
