#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "slackcert/slackbridge/oracle.hpp"
#include "slackcert/veripipe/pipeline.hpp"

using namespace slackcert;

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::vector<Point2> pts(std::initializer_list<std::array<int, 4>> xs) {
  std::vector<Point2> out;
  for (const auto& x : xs) out.push_back({Rational(x[0], x[1]), Rational(x[2], x[3])});
  return out;
}

std::string show(const Rational& q) { return q.get_den() == 1 ? q.get_num().get_str() : to_text(q); }

std::string format_matrix(const Matrix<Rational>& m) {
  std::string s;
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) s += (k ? " " : "") + show(row[k]);
    s += "\n";
  }
  return s;
}

int run_oracle(const std::string& demo, int grid) {
  std::vector<Point2> p;
  std::vector<Point2> q;
  if (demo == "triangle") {
    p = q = pts({{0, 1, 0, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}});
  } else if (demo == "square") {
    p = q = pts({{0, 1, 0, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 1, 1}});
  } else {
    p = pts({{2, 5, 1, 5}, {3, 5, 1, 5}, {3, 5, 2, 5}, {2, 5, 2, 5}});
    q = pts({{-1, 1, -1, 1}, {3, 1, -1, 1}, {-1, 1, 3, 1}});
  }
  HPolytope qh = polygon_hrep(q);
  std::vector<RPoint> pe;
  for (const auto& x : p) pe.push_back(embed2(x));
  SlackMatrix a = slack_matrix(VPolytope(pe), qh, "demo " + demo);
  std::cout << "slack matrix (" << a.rows() << " x " << a.cols() << "):\n" << format_matrix(*exact_rational(a));
  OracleResult r = nesting_oracle_2d(p, q, grid);
  if (!r.witness) {
    std::cout << "NotFoundAtResolution (grid " << grid << ", " << r.grid_points_in_q << " lattice points in Q)\n";
    return 0;
  }
  std::cout << "triangle:";
  for (const auto& v : r.witness->vertices) std::cout << " (" << show(v[0]) << ", " << show(v[1]) << ")";
  std::cout << "\n";
  FactorCheck fc = nested_factorization(p, q, *r.witness);
  std::cout << "A = B C with inner dimension 3: " << (fc.ok() ? "verified" : "NOT verified") << "\n";
  std::cout << "B:\n" << format_matrix(fc.factors.B) << "C:\n" << format_matrix(fc.factors.C);
  return fc.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified verifier for a nested-polytope counterexample"};
  app.require_subcommand(1);

  std::string eps_text = "1/1000";
  long precision_max = 512;
  std::string out_path;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "run the full verification and emit a certificate");
  verify->add_option("--eps", eps_text, "initial eps (exact rational)")->capture_default_str();
  verify->add_option("--precision-max", precision_max, "largest interval precision in bits")->capture_default_str();
  verify->add_option("--out", out_path, "certificate output file (default stdout)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  int digits = 30;
  auto* constants = app.add_subcommand("constants", "print certified enclosures of alpha, beta, gamma, tau");
  constants->add_option("--digits", digits, "decimal digits")->check(CLI::Range(1, 2000))->capture_default_str();

  std::string csv_path = "slack.csv";
  std::string exact_path = "slack.exact.txt";
  auto* emit = app.add_subcommand("emit-slack", "write the slack matrix of P in Q");
  emit->add_option("--out-csv", csv_path, "midpoint CSV")->capture_default_str();
  emit->add_option("--out-exact", exact_path, "exact entries and enclosures")->capture_default_str();

  std::string demo;
  int grid = 8;
  auto* oracle = app.add_subcommand("oracle", "2-D nesting oracle demos");
  oracle->add_option("--demo", demo, "triangle, square or nested")
      ->required()
      ->check(CLI::IsMember({"triangle", "square", "nested"}));
  oracle->add_option("--grid", grid, "lattice resolution")->check(CLI::Range(1, 200))->capture_default_str();

  std::string dump_path;
  auto* model = app.add_subcommand("model", "dump the symbolic model");
  model->add_option("--dump", dump_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      VerifyConfig cfg;
      cfg.eps = parse_rational(eps_text);
      if (cfg.eps <= 0 || precision_max < 1) {
        std::cerr << "eps and precision-max must be positive\n";
        return 2;
      }
      cfg.precision_max = precision_max;
      Certificate cert = run_verify(cfg);
      std::string text = format == "json" ? cert.dump() : cert.render_text();
      if (out_path.empty()) {
        std::cout << text;
      } else if (!write_file(out_path, text)) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      } else {
        std::cout << (cert.pass ? "PASS" : "FAIL") << "\n";
      }
      return cert.pass ? 0 : 1;
    }
    if (*constants) {
      for (const auto& line : list_constants(digits).lines) std::cout << line << "\n";
      return 0;
    }
    if (*emit) {
      Certificate cert = run_verify();
      if (!cert.slack) {
        std::cerr << "slack matrix not produced; failing:";
        for (const auto& id : cert.failing) std::cerr << " " << id;
        std::cerr << "\n";
        return 1;
      }
      if (!write_file(csv_path, slack_csv(*cert.slack)) || !write_file(exact_path, slack_sidecar(*cert.slack))) {
        std::cerr << "cannot write output files\n";
        return 2;
      }
      std::cout << cert.slack->rows() << " x " << cert.slack->cols() << " slack matrix written\n";
      return cert.slack->certified_nonnegative() ? 0 : 1;
    }
    if (*oracle) return run_oracle(demo, grid);
    if (*model) {
      if (!write_file(dump_path, dump_model(build_model(build_pi())))) {
        std::cerr << "cannot write " << dump_path << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
