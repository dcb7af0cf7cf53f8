// Command-line front end: verify single identities, run acceptance
// suites, fit correction polynomials and poke the combinatorial tools.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ctlab/bench.hpp"
#include "ctlab/gamma.hpp"

using namespace ctlab;

namespace {

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
  return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

void emit(const std::vector<VerifyReport>& reports, const std::string& format) {
  if (format == "csv") {
    std::cout << VerifyReport::csv_header() << "\n";
    for (const auto& r : reports) std::cout << r.to_csv() << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_json() << "\n";
  }
}

int run_pfaffian_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  nlohmann::json j;
  in >> j;
  if (!j.contains("entries") || !j["entries"].is_array()) {
    std::cerr << "expected {\"entries\": [[...], ...]} with rational strings\n";
    return 2;
  }
  const auto& rows = j["entries"];
  const int n = static_cast<int>(rows.size());
  SkewMatrix<Rational> a(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Rational v = rational_from_string(rows[i][k].get<std::string>());
      if (i < k) a.set(i + 1, k + 1, v);
      else if (i > k && a.at(i + 1, k + 1) != v) {
        std::cerr << "matrix is not skew-symmetric\n";
        return 2;
      }
    }
  Rational elim = pfaffian_elimination(a);
  nlohmann::json out;
  out["size"] = n;
  out["pf_elimination"] = to_string(elim);
  bool agree = true;
  if (n <= 12) {
    Rational def = pfaffian_definition(a);
    out["pf_definition"] = to_string(def);
    agree = (def == elim);
    out["agree"] = agree;
  }
  if (format == "csv")
    std::cout << "pf," << to_string(elim) << "," << (agree ? "1" : "0") << "\n";
  else
    std::cout << out.dump() << "\n";
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-term identity workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "check one identity instance");
  std::string id;
  KernelParams params;
  std::string u_str, v_str, avec_str;
  VerifySettings settings;
  cmd_verify->add_option("id", id, "identity id, e.g. morris or complex-morris")
      ->required();
  cmd_verify->add_option("--n", params.n);
  cmd_verify->add_option("--a", params.a);
  cmd_verify->add_option("--b", params.b);
  cmd_verify->add_option("--k", params.k);
  cmd_verify->add_option("--m", params.m);
  cmd_verify->add_option("--avec", avec_str, "per-variable exponents, e.g. 1,1,2");
  cmd_verify->add_option("--u", u_str);
  cmd_verify->add_option("--v", v_str);
  cmd_verify->add_option("--trunc", settings.trunc);
  cmd_verify->add_option("--prec", settings.prec);
  cmd_verify->add_option("--tol", settings.tol);
  bool verify_unbounded = false;
  cmd_verify->add_flag("--unbounded", verify_unbounded,
                       "allow truncated checks beyond desk scale (bc-complex, n >= 5)");

  // ---- suite ----
  auto* cmd_suite = app.add_subcommand("suite", "run an acceptance suite");
  std::string suite_name = "all";
  cmd_suite->add_option(
      "name", suite_name,
      "suite name or 'all': dyson, morris, tau-rewrite, log-dyson, "
      "log-morris, am-log, g2, bc, pfaffian, signatures, certificate, "
      "complex-morris, complex-g2, d4, structure, fit-pn");

  // ---- fit-pn ----
  auto* cmd_fit = app.add_subcommand("fit-pn", "fit a correction polynomial");
  std::string family = "A";
  int fit_n = 5;
  std::string samples_str = "1/2,1/4,1/3";
  long fit_trunc = 24;
  cmd_fit->add_option("--family", family)->check(CLI::IsMember({"A", "BC"}));
  cmd_fit->add_option("--n", fit_n);
  cmd_fit->add_option("--samples", samples_str, "comma-separated rational u values");
  cmd_fit->add_option("--trunc", fit_trunc);
  bool unbounded = false;
  cmd_fit->add_flag("--unbounded", unbounded, "allow fits beyond desk scale (n = 7)");

  // ---- pfaffian ----
  auto* cmd_pf = app.add_subcommand("pfaffian", "pfaffian of a skew matrix file");
  std::string pf_file;
  cmd_pf->add_option("--file", pf_file)->required();

  // ---- certificate ----
  auto* cmd_cert =
      app.add_subcommand("certificate", "verify the telescoping certificate");

  // ---- d4 ----
  auto* cmd_d4 = app.add_subcommand("d4", "constrained D4 multisum");
  long d4_u = 2;
  cmd_d4->add_option("--u", d4_u)->required();

  // ---- amlog-ratio ----
  auto* cmd_ratio = app.add_subcommand(
      "amlog-ratio", "measured constant for the n >= 5 log identity");
  KernelParams ratio_params;
  ratio_params.n = 5;
  cmd_ratio->add_option("--n", ratio_params.n);
  cmd_ratio->add_option("--a", ratio_params.a);
  cmd_ratio->add_option("--k", ratio_params.k);

  // ---- fr-complex ----
  auto* cmd_fr = app.add_subcommand(
      "fr-complex", "residuals of the conjectural complex recursion");
  KernelParams fr_params;
  std::string fr_u = "1/2";
  long fr_trunc = 60;
  cmd_fr->add_option("--n", fr_params.n);
  cmd_fr->add_option("--a", fr_params.a);
  cmd_fr->add_option("--b", fr_params.b);
  cmd_fr->add_option("--u", fr_u);
  cmd_fr->add_option("--trunc", fr_trunc);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_verify) {
      if (!u_str.empty()) params.u = rational_from_string(u_str);
      if (!v_str.empty()) params.v = rational_from_string(v_str);
      if (!avec_str.empty()) params.avec = parse_long_list(avec_str);
      if (id == "bc-complex" && params.u && !is_integer(*params.u) &&
          !verify_unbounded && (params.n >= 5 || settings.trunc > 32)) {
        std::cerr << "bc-complex at non-integer u is beyond desk scale for "
                     "n >= 5 or truncation > 32; lower --trunc or pass "
                     "--unbounded\n";
        return 2;
      }
      VerifyReport rep = verify(id, params, settings);
      emit({rep}, format);
      return rep.ok() ? 0 : 1;
    }
    if (*cmd_suite) {
      bool all_pass = true;
      std::vector<std::string> names =
          suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
      for (const std::string& nm : names) {
        SuiteResult r = run_suite(nm);
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " ("
                  << r.reports.size() << " checks, " << r.ms << " ms)\n";
        emit(r.reports, format);
      }
      return all_pass ? 0 : 1;
    }
    if (*cmd_fit) {
      FitResult fit = fit_pn(family == "A" ? PnFamily::A : PnFamily::BC, fit_n,
                             parse_rational_list(samples_str), fit_trunc, 256,
                             unbounded);
      nlohmann::json j;
      j["family"] = family;
      j["n"] = fit.n;
      j["s"] = fit.s_values;
      j["y"] = fit.y_values;
      j["tails"] = fit.tails;
      j["coeffs"] = fit.coeffs;
      if (fit.table_available) {
        j["table_coeffs"] = fit.table_coeffs;
        j["coeff_error"] = fit.coeff_error;
      }
      j["heldout_residual"] = fit.heldout_residual;
      std::cout << j.dump() << "\n";
      return (!fit.table_available || fit.coeff_error <= 1e-3) ? 0 : 1;
    }
    if (*cmd_pf) return run_pfaffian_file(pf_file, format);
    if (*cmd_cert) {
      CertificateReport rep = verify_certificate();
      nlohmann::json j;
      j["verified"] = rep.verified;
      j["degree"] = rep.degree;
      j["difference_terms"] = rep.difference.term_count();
      std::cout << j.dump() << "\n";
      return rep.verified ? 0 : 1;
    }
    if (*cmd_d4) {
      Rational v = d4_multisum(d4_u);
      nlohmann::json j;
      j["u"] = d4_u;
      j["value"] = to_string(v);
      if (d4_u % 2 == 0) {
        KernelParams p;
        p.n = 4;
        p.u = Rational(d4_u);
        Rational rhs = rhs_complex_exact("bc-complex", p);
        j["rhs"] = to_string(rhs);
        j["match"] = (v == rhs);
        std::cout << j.dump() << "\n";
        return v == rhs ? 0 : 1;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*cmd_ratio) {
      // measured c_{nk} candidate: CT / prod binom(a + Ki/2, (m+1)K - 1);
      // no closed form is asserted beyond n = 3
      CtResult<Rational> lhs = ct<Rational>(KernelFamily::AmLog, ratio_params);
      const long K = 2 * ratio_params.k + 1;
      const long m = (ratio_params.n - 1) / 2;
      Rational denom = 1;
      for (long i = 0; i < ratio_params.n; ++i)
        denom *= binomial_general(ratio_params.a + rat(K * i, 2), (m + 1) * K - 1);
      nlohmann::json j;
      j["n"] = ratio_params.n;
      j["k"] = ratio_params.k;
      j["a"] = ratio_params.a;
      j["ct"] = to_string(lhs.value);
      j["binom_product"] = to_string(denom);
      if (!is_zero(denom)) j["ratio"] = to_string(lhs.value / denom);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*cmd_fr) {
      FrComplexReport rep = fr_complex_residuals(
          fr_params.n, fr_params.a, fr_params.b, rational_from_string(fr_u),
          fr_trunc);
      nlohmann::json j;
      j["residuals"] = rep.residual;
      j["max_tail"] = rep.max_tail;
      std::cout << j.dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
