// orientcalc: command-line front end over the library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orientcalc/cobordism.hpp"
#include "orientcalc/duality.hpp"
#include "orientcalc/projspace.hpp"
#include "orientcalc/serialize.hpp"
#include "orientcalc/verify.hpp"

namespace oc = orientcalc;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct Options {
  std::string fgl;
  std::optional<int> truncation;
  bool json = false;
  bool text = false;
  std::string out;
};

struct Output {
  oc::Json json;
  std::string text;
  int code = kOk;
};

int exit_code_for(oc::ErrorKind k) {
  switch (k) {
    case oc::ErrorKind::ConfigError:
    case oc::ErrorKind::ParseError:
    case oc::ErrorKind::TruncationTooSmall:
    case oc::ErrorKind::InsufficientCoefficients:
    case oc::ErrorKind::UndeclaredVariable:
    case oc::ErrorKind::InvalidRing:
    case oc::ErrorKind::NotSymmetric:
    case oc::ErrorKind::NotHomogeneous:
    case oc::ErrorKind::NonTerminating:
    case oc::ErrorKind::ExponentOverflow:
      return kUsage;
    default:
      return kInternal;
  }
}

std::string list_text(const std::vector<oc::RingElement>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += oc::to_string(v[i]);
  }
  return s + "]";
}

std::string matrix_text(const oc::CoeffMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(oc::to_string(m(i, j)));
      width[j] = std::max(width[j], cells[i].back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << "  ";
      os << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << "\n";
  }
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

Output element_output(const oc::RingElement& e) {
  return {oc::to_json(e), oc::to_string(e)};
}

Output series_output(const oc::UnivariateSeries& s) {
  return {oc::to_json(s), oc::to_string(s, "x")};
}

Output matrix_output(const oc::CoeffMatrix& m) {
  return {oc::to_json(m), matrix_text(m)};
}

oc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw oc::Error(oc::ErrorKind::ConfigError, "cannot open '" + path + "'");
  try {
    return oc::Json::parse(in);
  } catch (const oc::Json::exception& e) {
    throw oc::Error(oc::ErrorKind::ConfigError, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal group law Chern / Thom / cobordism calculator"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--fgl", opt.fgl,
                 "Preset (additive, multiplicative, generic, generic:W) or "
                 "JSON config path; defaults to $ORIENTCALC_FGL");
  app.add_option("--truncation", opt.truncation,
                 "Weight truncation W (degree bound D = W + 1)")
      ->check(CLI::Range(1, 60));
  auto* json_flag = app.add_flag("--json", opt.json, "JSON output (default)");
  app.add_flag("--text", opt.text, "Text output")->excludes(json_flag);
  app.add_option("--out", opt.out, "Write output to a file");
  app.fallthrough();

  // fgl
  auto* fgl = app.add_subcommand("fgl", "Formal group law operations");
  fgl->require_subcommand(1);
  auto* fgl_check = fgl->add_subcommand("check", "Check the FGL axioms");
  auto* fgl_inverse = fgl->add_subcommand("inverse", "Formal inverse m(x)");
  int nseries_n = 0;
  auto* fgl_nseries = fgl->add_subcommand("nseries", "n-series [n](x)");
  fgl_nseries->add_option("n", nseries_n)->required();
  auto* fgl_omega = fgl->add_subcommand("omega", "omega(x) = dF/dy(x, 0)");

  int diag_n = 0;
  std::string diag_route = "closed";
  auto* diag = app.add_subcommand("diagonal", "Class of the diagonal in P^n x P^n");
  diag->add_option("n", diag_n)->required()->check(CLI::NonNegativeNumber);
  diag->add_option("--route", diag_route)->check(CLI::IsMember({"closed", "direct"}));

  int dual_n = 0;
  auto* dual = app.add_subcommand("dual-matrix", "Duality matrix M_n and eta'");
  dual->add_option("n", dual_n)->required()->check(CLI::NonNegativeNumber);

  int pn_N = 0;
  std::string pn_method = "recurrence";
  auto* pn = app.add_subcommand("pn-class", "Cobordism classes [P^0..P^N]");
  pn->add_option("N", pn_N)->required()->check(CLI::NonNegativeNumber);
  pn->add_option("--method", pn_method)
      ->check(CLI::IsMember({"recurrence", "series", "det"}));

  std::string thom_file;
  std::string thom_route = "relation";
  auto* thom = app.add_subcommand("thom", "Thom class of a bundle");
  thom->add_option("bundle", thom_file, "Bundle JSON file")->required();
  thom->add_option("--route", thom_route)
      ->check(CLI::IsMember({"relation", "twist", "quotient"}));

  int mult_r = 1;
  auto* mult = app.add_subcommand("multiplicity", "F-intersection multiplicity rho");
  mult->add_option("r", mult_r)->required()->check(CLI::PositiveNumber);

  int blow_n = 1;
  auto* blow = app.add_subcommand("blowup-matrix", "Blow-up Gysin matrix");
  blow->add_option("n", blow_n)->required()->check(CLI::PositiveNumber);

  int pair_n = 0;
  auto* pair = app.add_subcommand("pairing", "Gram matrix of the pairing on P^n");
  pair->add_option("n", pair_n)->required()->check(CLI::NonNegativeNumber);

  int verify_n = 3;
  auto* verify = app.add_subcommand("verify", "Replay every identity");
  verify->add_option("--max-n", verify_n)->check(CLI::Range(0, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Output result;
  try {
    if (opt.fgl.empty()) {
      if (const char* env = std::getenv("ORIENTCALC_FGL")) opt.fgl = env;
    }
    if (opt.fgl.empty()) {
      throw oc::Error(oc::ErrorKind::ConfigError,
                      "no FGL given (use --fgl or ORIENTCALC_FGL)");
    }
    const oc::FormalGroupLaw F = oc::load_fgl(opt.fgl, opt.truncation);

    if (*fgl_check) {
      auto v = oc::check_axioms(F);
      result.json = {{"ok", v.empty()}, {"violations", oc::Json::array()}};
      std::ostringstream os;
      for (const auto& a : v) {
        result.json["violations"].push_back(
            {{"axiom", a.axiom}, {"where", a.where}, {"defect", oc::to_json(a.defect)}});
        os << a.axiom << " " << a.where << ": " << oc::to_string(a.defect) << "\n";
      }
      result.text = v.empty() ? "ok" : os.str() + "FAILED";
      if (!v.empty()) result.code = kVerifyFailed;
    } else if (*fgl_inverse) {
      result = series_output(oc::formal_inverse(F));
    } else if (*fgl_nseries) {
      result = series_output(oc::n_series(F, nseries_n));
    } else if (*fgl_omega) {
      result = series_output(oc::omega_series(F));
    } else if (*diag) {
      result = element_output(diag_route == "direct"
                                  ? oc::diagonal_class_direct(F, diag_n)
                                  : oc::diagonal_class_closed(F, diag_n));
    } else if (*dual) {
      oc::CoeffMatrix m = oc::dual_matrix(F, dual_n);
      auto eta = oc::eta_coeffs(F, dual_n);
      auto etap = oc::eta_prime_coeffs(F, dual_n);
      result.json = {{"matrix", oc::to_json(m)},
                     {"eta", oc::to_json(eta)},
                     {"eta_prime", oc::to_json(etap)}};
      result.text = matrix_text(m) + "\neta  = " + list_text(eta) +
                    "\neta' = " + list_text(etap);
    } else if (*pn) {
      oc::CobordismTable t = pn_method == "series" ? oc::pn_class_series(F, pn_N)
                             : pn_method == "det"  ? oc::pn_class_det(F, pn_N)
                                                   : oc::pn_class_recurrence(F, pn_N);
      result.json = oc::table_to_json(F, t);
      result.text = list_text(t.classes);
    } else if (*thom) {
      oc::BundleFile bf = oc::bundle_from_json(read_json_file(thom_file), F.coeff_ring());
      oc::CohomologyModel model = oc::model_thom(bf.base, bf.bundle);
      oc::ThomRoute route = thom_route == "twist"    ? oc::ThomRoute::Twist
                            : thom_route == "quotient" ? oc::ThomRoute::Quotient
                                                       : oc::ThomRoute::Relation;
      result = element_output(oc::thom_class(F, model, route));
    } else if (*mult) {
      oc::Multiplicity m = oc::f_intersection_multiplicity(F, mult_r);
      result.json = {{"rho", oc::to_json(m.rho)},
                     {"augmentation", oc::augmentation(m.rho).get_str()}};
      result.text = oc::to_string(m.rho);
    } else if (*blow) {
      oc::BlowupMatrices b = oc::blowup_gysin_matrix(F, blow_n);
      oc::RingElement d = oc::determinant(b.dropped);
      result.json = {{"full", oc::to_json(b.full)},
                     {"dropped", oc::to_json(b.dropped)},
                     {"dropped_det", oc::to_json(d)}};
      result.text = matrix_text(b.full) + "\ndet(dropped) = " + oc::to_string(d);
    } else if (*pair) {
      oc::CoeffMatrix g = oc::pairing_gram(F, pair_n);
      oc::RingElement d = oc::determinant(g);
      result.json = {{"gram", oc::to_json(g)}, {"det", oc::to_json(d)}};
      result.text = matrix_text(g) + "\ndet = " + oc::to_string(d);
    } else if (*verify) {
      auto checks = oc::run_verification(F, verify_n);
      result.json = oc::Json::array();
      std::ostringstream os;
      std::size_t width = 0;
      for (const auto& c : checks) width = std::max(width, c.name.size());
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.passed;
        result.json.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name
           << std::string(width - c.name.size(), ' ');
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
      }
      os << (all ? "all checks passed" : "some checks FAILED");
      result.text = os.str();
      result.json = {{"passed", all}, {"checks", result.json}};
      if (!all) result.code = kVerifyFailed;
    }
  } catch (const oc::Error& e) {
    std::string kind(oc::kind_name(e.kind()));
    if (opt.text) {
      std::cerr << "error: " << kind << ": " << e.what() << "\n";
    } else {
      std::cerr << oc::Json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
    }
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  std::string payload = opt.text ? result.text : result.json.dump(2);
  if (opt.out.empty()) {
    std::cout << payload << "\n";
  } else {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "error: cannot write '" << opt.out << "'\n";
      return kUsage;
    }
    f << payload << "\n";
  }
  return result.code;
}
