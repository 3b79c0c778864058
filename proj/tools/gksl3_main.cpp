// Command-line front end: tables, transition matrices, verification runs,
// and JSON/CSV export.  Machine output goes to stdout, diagnostics to stderr.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gksl3/gamma.hpp"
#include "gksl3/json_io.hpp"
#include "gksl3/ktype.hpp"
#include "gksl3/module.hpp"
#include "gksl3/sl2.hpp"
#include "gksl3/su2.hpp"

namespace gksl3 {
namespace {

struct SeriesFlags {
  std::string series;
  std::string sigma;
  int k = 0;
  std::string nu;
};

void add_series_flags(CLI::App* cmd, SeriesFlags& f) {
  cmd->add_option("--series", f.series, "Series: p0, p1 or p2")
      ->required()
      ->check(CLI::IsMember({"p0", "p1", "p2"}));
  cmd->add_option("--sigma", f.sigma, "Sign character bits s1,s2 (p0 only)");
  cmd->add_option("--k", f.k, "Lowest K-weight of the inducing factor (p1/p2)");
  cmd->add_option("--nu", f.nu,
                  "Induction parameter(s), exact rationals or Gaussian "
                  "rationals; two comma-separated values for p0, one for "
                  "p1/p2.  Omitted: formal symbols.");
}

std::pair<std::string, std::string> split_pair(const std::string& text,
                                               const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw ParseError(std::string(what) + " needs exactly two comma-separated values");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

SeriesParams make_series(const SeriesFlags& f) {
  if (f.series == "p0") {
    if (f.k != 0) throw ParseError("--k applies only to p1/p2");
    if (f.sigma.empty()) throw ParseError("p0 requires --sigma s1,s2");
    const auto [s1, s2] = split_pair(f.sigma, "--sigma");
    const int sigma1 = std::stoi(s1);
    const int sigma2 = std::stoi(s2);
    if (f.nu.empty()) return SeriesParams::p0(sigma1, sigma2);
    const auto [a, b] = split_pair(f.nu, "--nu");
    return SeriesParams::p0(sigma1, sigma2, Scalar(parse_gaussian(a)),
                            Scalar(parse_gaussian(b)));
  }
  if (!f.sigma.empty()) throw ParseError("--sigma applies only to p0");
  if (f.k == 0) throw ParseError(f.series + " requires --k");
  const Scalar nu = f.nu.empty()
                        ? Scalar::symbol(f.series == "p1" ? Symbol::nu1 : Symbol::nu2)
                        : Scalar(parse_gaussian(f.nu));
  return f.series == "p1" ? SeriesParams::p1(f.k, nu) : SeriesParams::p2(f.k, nu);
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

// ---- coeffs ----------------------------------------------------------------

int run_coeffs(int l, std::optional<int> m_opt, const std::string& table) {
  std::vector<int> shifts;
  if (m_opt) {
    shifts.push_back(*m_opt);
  } else {
    for (int m = -2; m <= 2; ++m) {
      if (component_exists(l, m)) shifts.push_back(m);
    }
  }
  std::cout << "table,l,m,a,b,num,den\n";
  for (int m : shifts) {
    if (table != "b") {
      for (int k = 0; k <= l + 2 * m; ++k) {
        for (int i = 0; i <= 4; ++i) {
          const Rational v = cg_a(l, m, k, i);
          std::cout << "A," << l << "," << m << "," << k << "," << i << ","
                    << num(v) << "," << den(v) << "\n";
        }
      }
    }
    if (table != "a") {
      for (int q = 0; q <= l; ++q) {
        for (int r = 0; r <= 4; ++r) {
          const Rational v = cg_b(l, m, q, r);
          std::cout << "B," << l << "," << m << "," << q << "," << r << ","
                    << num(v) << "," << den(v) << "\n";
        }
      }
    }
  }
  return 0;
}

// ---- gamma -----------------------------------------------------------------

int run_gamma(const SeriesParams& sp, int l, int m, const std::string& format) {
  const GammaMatrix g = gamma_matrix(sp, l, m);
  if (format == "json") {
    emit_json(gamma_to_json(g));
    return 0;
  }
  std::cout << "row,col,value\n";
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      std::cout << r << "," << c << "," << csv_quote(g.at(r, c).str()) << "\n";
    }
  }
  return 0;
}

// ---- ktypes ----------------------------------------------------------------

int run_ktypes(const SeriesParams& sp, int lmax, const std::string& format) {
  if (lmax < 0) throw IndexOutOfRange("--lmax must be >= 0");
  if (format == "json") {
    Json j;
    j["series"] = series_to_json(sp);
    Json rows = Json::array();
    for (int l = 0; l <= lmax; ++l) rows.push_back(ktype_to_json(ktype_info(sp, l)));
    j["ktypes"] = std::move(rows);
    emit_json(j);
    return 0;
  }
  std::cout << "series,l,d,delta,epsilon,p_list\n";
  for (int l = 0; l <= lmax; ++l) {
    const KTypeInfo info = ktype_info(sp, l);
    std::cout << csv_quote(sp.label()) << "," << info.l << "," << info.d << ","
              << info.delta << ",";
    if (info.epsilon) std::cout << *info.epsilon;
    std::cout << ",";
    for (std::size_t i = 0; i < info.p_list.size(); ++i) {
      if (i) std::cout << " ";
      std::cout << info.p_list[i];
    }
    std::cout << "\n";
  }
  return 0;
}

// ---- verify ----------------------------------------------------------------

std::vector<SeriesParams> verification_points(const SeriesParams& base, int points,
                                              std::uint64_t seed) {
  if (points <= 0) return {base};
  std::vector<SeriesParams> out;
  out.reserve(static_cast<std::size_t>(points));
  const int per = base.series == Series::P0 ? 2 : 1;
  const auto values = seeded_gaussian_rationals(seed, per * points);
  for (int i = 0; i < points; ++i) {
    if (base.series == Series::P0) {
      out.push_back(SeriesParams::p0(base.sigma1, base.sigma2,
                                     Scalar(values[2 * i]), Scalar(values[2 * i + 1])));
    } else if (base.series == Series::P1) {
      out.push_back(SeriesParams::p1(base.k, Scalar(values[i])));
    } else {
      out.push_back(SeriesParams::p2(base.k, Scalar(values[i])));
    }
  }
  return out;
}

void print_text_report(const VerifyReport& rep) {
  std::cout << "# " << rep.params.label() << " lmax=" << rep.l_max << "\n";
  int passed = 0;
  long long checked = 0;
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.kind << " " << c.label
              << " checked=" << c.checked;
    if (!c.passed) std::cout << " | first failure: " << c.failure;
    std::cout << "\n";
    if (c.passed) ++passed;
    checked += c.checked;
  }
  std::cout << "summary: " << passed << "/" << rep.checks.size()
            << " identities, " << checked << " elementary checks, all_passed="
            << (rep.all_passed ? "true" : "false") << "\n";
}

int run_verify(const SeriesParams& base, int lmax, int points, std::uint64_t seed,
               bool seed_given, const std::string& report) {
  if (points > 0 && !seed_given) {
    throw ParseError("--random-points requires an explicit --seed");
  }
  const auto configs = verification_points(base, points, seed);
  std::vector<VerifyReport> reports;
  reports.reserve(configs.size());
  bool all = true;
  for (const auto& sp : configs) {
    const int cap = lmax > 0 ? lmax : min_ktype(sp) + 6;
    reports.push_back(verify_brackets(sp, cap));
    all = all && reports.back().all_passed;
  }
  if (report == "json") {
    if (reports.size() == 1 && points <= 0) {
      emit_json(report_to_json(reports.front()));
    } else {
      Json j;
      j["seed"] = seed;
      Json runs = Json::array();
      for (const auto& r : reports) runs.push_back(report_to_json(r));
      j["runs"] = std::move(runs);
      j["all_passed"] = all;
      emit_json(j);
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      print_text_report(reports[i]);
    }
    if (reports.size() > 1) {
      std::cout << "overall: all_passed=" << (all ? "true" : "false") << "\n";
    }
  }
  return all ? 0 : 1;
}

// ---- classify-sl2 ----------------------------------------------------------

int run_classify(const std::string& nu_text, const std::string& sign_text) {
  int sign = 0;
  if (sign_text == "+" || sign_text == "+1" || sign_text == "plus") sign = 1;
  if (sign_text == "-" || sign_text == "-1" || sign_text == "minus") sign = -1;
  if (sign == 0) throw ParseError("--sign must be + or -");
  const SL2Class c = classify_sl2(parse_gaussian(nu_text), sign);
  std::cout << sl2_class_to_json(c).dump() << "\n";
  return 0;
}

// ---- export ----------------------------------------------------------------

int run_export(const SeriesParams& sp, int lmax, const std::string& out_path) {
  if (lmax < 0) throw IndexOutOfRange("--lmax must be >= 0");
  Json j;
  j["series"] = series_to_json(sp);
  j["l_max"] = lmax;
  Json ktypes = Json::array();
  for (int l = 0; l <= lmax; ++l) ktypes.push_back(ktype_to_json(ktype_info(sp, l)));
  j["ktypes"] = std::move(ktypes);
  Json blocks = Json::array();
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -2; m <= 2; ++m) {
      if (l + m < 0 || l + m > lmax) continue;
      if (multiplicity(sp, l) == 0 || multiplicity(sp, l + m) == 0) continue;
      blocks.push_back(gamma_to_json(gamma_matrix(sp, l, m)));
    }
  }
  j["gamma_blocks"] = std::move(blocks);
  if (out_path.empty()) {
    emit_json(j);
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot open " + out_path + " for writing");
  file << j.dump(2) << "\n";
  if (!file.good()) throw Error("failed writing " + out_path);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace
}  // namespace gksl3

int main(int argc, char** argv) {
  using namespace gksl3;
  CLI::App app{
      "Exact tables, transition matrices and identity verification for the "
      "K-finite structure of the standard SL(3,R) representation series"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand(
      "coeffs", "Dump tensor-embedding coefficient tables A and B as CSV");
  int coeffs_l = 0;
  std::optional<int> coeffs_m;
  std::string coeffs_table = "both";
  coeffs->add_option("--l", coeffs_l, "Representation label of V_l")->required();
  coeffs->add_option("--m", coeffs_m, "Level shift in [-2,2]; omitted: all");
  coeffs->add_option("--table", coeffs_table, "Which table: a, b or both")
      ->check(CLI::IsMember({"a", "b", "both"}));

  auto* gamma = app.add_subcommand(
      "gamma", "Transition matrix between the K-type blocks at levels l and l+m");
  SeriesFlags gamma_series;
  int gamma_l = 0, gamma_m = 0;
  std::string gamma_format = "json";
  add_series_flags(gamma, gamma_series);
  gamma->add_option("--l", gamma_l, "K-type level l")->required();
  gamma->add_option("--m", gamma_m, "Level shift in [-2,2]")->required();
  gamma->add_option("--format", gamma_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* ktypes = app.add_subcommand(
      "ktypes", "K-type multiplicities and canonical blocks up to a level");
  SeriesFlags ktypes_series;
  int ktypes_lmax = 0;
  std::string ktypes_format = "csv";
  add_series_flags(ktypes, ktypes_series);
  ktypes->add_option("--lmax", ktypes_lmax, "Largest level to list")->required();
  ktypes->add_option("--format", ktypes_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand(
      "verify", "Check the commutator identities on a truncated module");
  SeriesFlags verify_series;
  int verify_lmax = 0;
  int verify_points = 0;
  std::uint64_t verify_seed = 0;
  std::string verify_report = "text";
  add_series_flags(verify, verify_series);
  verify->add_option("--lmax", verify_lmax,
                     "Level cap; omitted: minimal K-type + 6");
  verify->add_option("--random-points", verify_points,
                     "Verify at this many seeded parameter points");
  auto* seed_opt = verify->add_option("--seed", verify_seed,
                                      "Seed for --random-points");
  verify->add_option("--report", verify_report, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* classify = app.add_subcommand(
      "classify-sl2", "Reducibility type of an SL(2,R) principal series");
  std::string classify_nu, classify_sign;
  classify->add_option("--nu", classify_nu, "Induction parameter, exact")->required();
  classify->add_option("--sign", classify_sign, "Sign character at -1: + or -")
      ->required();

  auto* exporter = app.add_subcommand(
      "export", "Bundle K-types and all transition matrices as JSON");
  SeriesFlags export_series;
  int export_lmax = 0;
  std::string export_out;
  add_series_flags(exporter, export_series);
  exporter->add_option("--lmax", export_lmax, "Largest level to include")->required();
  exporter->add_option("--out", export_out, "Output file; omitted: stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(coeffs_l, coeffs_m, coeffs_table);
    if (gamma->parsed()) {
      return run_gamma(make_series(gamma_series), gamma_l, gamma_m, gamma_format);
    }
    if (ktypes->parsed()) {
      return run_ktypes(make_series(ktypes_series), ktypes_lmax, ktypes_format);
    }
    if (verify->parsed()) {
      return run_verify(make_series(verify_series), verify_lmax, verify_points,
                        verify_seed, seed_opt->count() > 0, verify_report);
    }
    if (classify->parsed()) return run_classify(classify_nu, classify_sign);
    if (exporter->parsed()) return run_export(make_series(export_series), export_lmax,
                                              export_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
