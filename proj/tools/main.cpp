#include "commands.hpp"

#include "bergerspec/geodesic_slices.hpp"
#include "bergerspec/page_constants.hpp"
#include "bergerspec/table.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace cli = bergerspec::cli;
using bergerspec::Table;

namespace {

constexpr int kUsage = 2;
constexpr int kDomain = 3;

int default_precision() {
  const char* env = std::getenv("BERGERSPEC_PRECISION");
  if (env == nullptr || *env == '\0') return bergerspec::kDefaultPrecision;
  try {
    std::size_t used = 0;
    const int p = std::stoi(env, &used);
    if (used == std::string(env).size() && p >= 1 && p <= bergerspec::kMaxPrecision) return p;
  } catch (const std::exception&) {
  }
  throw cli::UsageError("BERGERSPEC_PRECISION must be an integer in [1, 30]");
}

void write(const Table& table, const std::string& format, int precision, const std::string& path) {
  const std::string text = format == "json" ? bergerspec::to_json(table, precision) + "\n"
                                            : bergerspec::to_csv(table, precision);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace and Jacobi spectra of round and Berger spheres"};
  app.require_subcommand(1);

  std::string format = "csv";
  int precision = 0;
  std::string output;
  std::string page_config;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", precision, "significant digits for reals (1-30)")
      ->check(CLI::Range(1, bergerspec::kMaxPrecision));
  app.add_option("-o,--output", output, "output file (default stdout)");
  app.add_option("--page-config", page_config, "Page constants file");

  auto* sphere = app.add_subcommand("sphere", "spectrum of the round unit sphere");
  unsigned dim = 0;
  std::uint64_t k_max = 0;
  sphere->add_option("--dim", dim, "sphere dimension p")->required();
  sphere->add_option("--kmax", k_max, "largest degree")->required();

  auto* berger = app.add_subcommand("berger", "distinct spectrum of a Berger sphere");
  cli::BergerRequest berger_req;
  double t_value = 0.0;
  double eps_value = 0.0;
  auto* t_opt = berger->add_option("--t", t_value, "squash parameter of g_B^t");
  auto* eps_opt = berger->add_option("--epsilon", eps_value, "fiber length of s1^2+s2^2+eps^2 s3^2");
  berger->add_option("--count", berger_req.count, "number of distinct values, zero included");
  berger->add_flag("--with-multiplicity", berger_req.with_multiplicity, "add multiplicity columns");

  auto* piecewise = app.add_subcommand("piecewise", "i-th nonzero eigenvalue as branches in x = t^-3");
  std::size_t index = 0;
  std::string x_max_text = "20";
  piecewise->add_option("--index", index, "position i >= 1")->required();
  piecewise->add_option("--xmax", x_max_text, "right end of the x range (p, p/q or decimal)");

  auto* index_cmd = app.add_subcommand("index", "index and nullity of slice families");
  std::string space = "cp2";
  cli::IndexRequest index_req;
  double r_value = 0.0;
  std::vector<std::string> scan;
  index_cmd->add_option("space", space, "cp2 or page")->required()->check(CLI::IsMember({"cp2", "page"}));
  auto* r_opt = index_cmd->add_option("--r", r_value, "single parameter value");
  auto* scan_opt = index_cmd->add_option("--scan", scan, "RMIN RMAX STEPS")->expected(3);
  index_cmd->add_flag("--roots", index_req.roots_only, "print the transition roots (page)");
  index_cmd->add_option("--tol", index_req.tol, "root tolerance");
  index_cmd->add_option("--depth", index_req.depth, "distinct eigenvalues examined");

  auto* plot = app.add_subcommand("plot", "figure data");
  std::string figure;
  unsigned points = 201;
  plot->add_option("figure", figure, "fig1, fig2 or fig3")->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  plot->add_option("--out", output, "output file");
  plot->add_option("--points", points, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (precision == 0) precision = default_precision();
    bergerspec::PageConstants constants =
        page_config.empty() ? bergerspec::page_constants() : bergerspec::PageConstants::load(page_config);

    Table table;
    if (*sphere) {
      table = cli::sphere_table(dim, k_max);
    } else if (*berger) {
      if (*t_opt) berger_req.t = t_value;
      if (*eps_opt) berger_req.epsilon = eps_value;
      table = cli::berger_table(berger_req);
    } else if (*piecewise) {
      table = cli::piecewise_table(index, bergerspec::parse_rational(x_max_text));
    } else if (*index_cmd) {
      index_req.space = space == "page" ? cli::Space::Page : cli::Space::Cp2;
      if (*r_opt) index_req.r = r_value;
      if (*scan_opt) {
        index_req.scan_min = std::stod(scan[0]);
        index_req.scan_max = std::stod(scan[1]);
        index_req.scan_steps = static_cast<unsigned>(std::stoul(scan[2]));
      }
      table = cli::index_table(index_req, constants);
    } else if (*plot) {
      const cli::Figure fig = figure == "fig1"   ? cli::Figure::Fig1
                              : figure == "fig2" ? cli::Figure::Fig2
                                                 : cli::Figure::Fig3;
      table = cli::figure_table(fig, points, constants);
    }
    write(table, format, precision, output);
  } catch (const bergerspec::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const bergerspec::PageTranscriptionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
