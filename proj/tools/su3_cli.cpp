// Batch front end: evaluate representation matrices, run the verification
// suites, and emit irrep and coupling tables as JSON/CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "su3/adjoint.hpp"
#include "su3/json_io.hpp"
#include "su3/verify.hpp"

namespace {

su3::EulerAngles parse_angles(const std::string& csv) {
  std::array<double, 8> v{};
  std::stringstream ss(csv);
  std::string item;
  size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 8) throw CLI::ValidationError("--angles", "expected 8 comma-separated values");
    v[n++] = std::stod(item);
  }
  if (n != 8) throw CLI::ValidationError("--angles", "expected 8 comma-separated values");
  return su3::EulerAngles{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

su3::IrrepLabel parse_label(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("label", "expected p,q");
  }
  return su3::IrrepLabel{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-angle SU(3) toolkit: representation matrices, ladder operators, "
               "invariant-measure orthogonality, and coupling coefficients"};
  app.require_subcommand(1);
  app.fallthrough();

  su3::RunConfig cfg;
  std::string out_path;
  app.add_option("--tol", cfg.tol_override, "override every check tolerance")
      ->envname("SU3_TOL");
  app.add_option("--gauss-order", cfg.gauss_order, "quadrature order per trig axis")
      ->envname("SU3_GAUSS_ORDER");
  app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count")
      ->envname("SU3_MC_SAMPLES");
  app.add_option("--seed", cfg.seed, "random seed for probe draws")->envname("SU3_SEED");
  app.add_option("--out", out_path, "output file (default: stdout)")->envname("SU3_OUT");

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "fundamental|adjoint|diffops|irreps|haar|cg|all")
      ->check(CLI::IsMember({"fundamental", "adjoint", "diffops", "irreps", "haar", "cg",
                             "all"}));

  // emit -----------------------------------------------------------------
  auto* emit = app.add_subcommand("emit", "write matrices, irrep tables, couplings");
  std::string what;
  emit->add_option("what", what, "dmatrix|irrep|cg|volume")
      ->required()
      ->check(CLI::IsMember({"dmatrix", "irrep", "cg", "volume"}));
  std::string rep_name = "3";
  std::optional<std::string> angles_csv;
  std::string label_str = "1,1";
  std::vector<std::string> factor_strs;
  std::string target_str = "1,1";
  int mult_index = 0;
  emit->add_option("--rep", rep_name, "3 or 3* (dmatrix, adjoint via 'adj')")
      ->check(CLI::IsMember({"3", "3*", "3star", "adj"}));
  emit->add_option("--angles", angles_csv,
                   "alpha,beta,gamma,theta,a,b,c,phi in radians (dmatrix)");
  emit->add_option("--label", label_str, "irrep p,q (irrep)");
  emit->add_option("--factors", factor_strs, "two factor labels p,q p,q (cg)")
      ->expected(2);
  emit->add_option("--target", target_str, "target label p,q (cg)");
  emit->add_option("--mult", mult_index, "multiplicity index (cg)");
  std::string format = "json";
  emit->add_option("--format", format, "json|csv (cg tables)")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<su3::SuiteReport> reports;
      if (suite == "all") {
        reports = su3::run_all(cfg);
      } else {
        reports.push_back(su3::run_suite(suite, cfg));
      }
      write_output(su3::reports_to_json(reports), out_path);
      bool pass = true;
      for (const auto& r : reports) {
        pass = pass && r.pass();
        for (const auto& c : r.checks) {
          std::cerr << (c.pass ? "PASS " : "FAIL ") << r.suite << "/" << c.name
                    << "  residual=" << su3::JsonWriter::format_double(c.residual)
                    << "  tol=" << su3::JsonWriter::format_double(c.tolerance) << "\n";
        }
      }
      return pass ? 0 : 1;
    }

    su3::QuadratureSpec spec;
    spec.gauss_order = cfg.gauss_order;
    spec.mc_samples = cfg.mc_samples;
    spec.seed = cfg.seed;

    if (what == "dmatrix") {
      if (!angles_csv) throw CLI::ValidationError("--angles", "dmatrix needs --angles");
      su3::EulerAngles x = parse_angles(*angles_csv);
      if (rep_name == "adj") {
        write_output(su3::matrix_to_json(su3::adjoint_closed(x)), out_path);
      } else {
        auto rep = rep_name == "3" ? su3::FundamentalRep::Three
                                   : su3::FundamentalRep::ThreeStar;
        write_output(su3::matrix_to_json(su3::MatX(su3::closed_rep(x, rep))), out_path);
      }
    } else if (what == "irrep") {
      su3::IrrepLabel label = parse_label(label_str);
      auto states = su3::generate_irrep(label, spec);
      write_output(su3::irrep_to_json(label, states), out_path);
    } else if (what == "cg") {
      if (factor_strs.size() != 2) {
        throw CLI::ValidationError("--factors", "cg needs two factor labels");
      }
      su3::CouplingTable t =
          su3::wcg_coefficients(parse_label(factor_strs[0]), parse_label(factor_strs[1]),
                                parse_label(target_str), mult_index, spec);
      write_output(format == "csv" ? su3::coupling_to_csv(t) : su3::coupling_to_json(t),
                   out_path);
    } else if (what == "volume") {
      su3::JsonWriter w;
      w.begin_object();
      w.key("v0").value(su3::group_volume(spec));
      w.end_object();
      write_output(w.str(), out_path);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
