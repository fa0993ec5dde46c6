#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stokesline/expansion_json.hpp"
#include "stokesline/expansions.hpp"
#include "stokesline/gamma_poly.hpp"
#include "stokesline/oracle.hpp"

using namespace stokesline;
using expansions::ExpansionResult;
using expansions::StokesSign;
using coeffs::BesselOrder;
using coeffs::KummerParams;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct MRange {
  int lo = 1;
  int hi = 7;
};

MRange parse_m_range(const std::string& s) {
  MRange r;
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    r.lo = 1;
    r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, pos));
    r.hi = std::stoi(s.substr(pos + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("bad M range '" + s + "'");
  return r;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void warn_large_m(int m_hi) {
  if (m_hi > 8) {
    std::cerr << "warning: M > 8 uses g_{2k} beyond the validated list "
                 "(k <= 4); coefficients are generated symbolically\n";
  }
}

// paper-style complex: re(+|-)imi, e.g. 2.461573958(-12)-1.851725849i(-13)
std::string complex_paper(const BigComplex& z, long digits) {
  std::string re = z.re.to_paper(digits);
  BigReal aim = abs(z.im, z.im.prec());
  std::string im = aim.to_paper(digits);
  auto par = im.find('(');
  im.insert(par, "i");
  return re + (z.im.sgn() < 0 ? "-" : "+") + im;
}

std::string complex_sci(const BigComplex& z, long digits) {
  return z.re.to_sci(digits) + " " + z.im.to_sci(digits);
}

Precision eval_precision(long digits, long bits_override) {
  if (bits_override > 0) return Precision(bits_override);
  return Precision::for_digits(digits + 15);
}

// ---- table ---------------------------------------------------------------

int run_table(const std::string& which, const std::string& nu_str,
              const std::string& x_list, const std::string& m_str, long digits,
              long bits, const std::string& format) {
  if (digits < 6) throw UsageError("table: digits must be >= 6");
  MRange mr = parse_m_range(m_str);
  warn_large_m(mr.hi);

  std::string nu_s = nu_str;
  std::vector<std::string> xs = split_commas(x_list);
  bool k_side = false;
  if (which == "table1") {
    nu_s = "0.25";
    xs = {"10", "15.4", "20"};
    mr = {1, 7};
  } else if (which == "table2") {
    nu_s = "0.25";
    xs = {"25"};
    mr = {1, 7};
    k_side = true;
  } else if (which != "custom") {
    throw UsageError("table: --which must be table1, table2 or custom");
  }
  if (xs.empty()) throw UsageError("table: no x values given");

  Precision p = eval_precision(digits, bits);
  oracle::OracleConfig cfg(digits + 5);
  BesselOrder nu(BigReal::from_decimal(nu_s, p));

  auto fmt_cell = [&](const BigComplex& v) {
    if (format == "paper") {
      return k_side ? complex_paper(v, digits) : v.re.to_paper(digits);
    }
    return k_side ? complex_sci(v, digits) : v.re.to_sci(digits);
  };

  // grid[m][col]
  std::vector<std::vector<BigComplex>> grid;
  for (int m = mr.lo; m <= mr.hi; ++m) {
    std::vector<BigComplex> row;
    for (const auto& xsv : xs) {
      BigReal x = BigReal::from_decimal(xsv, p);
      ExpansionResult r = k_side ? expansions::k_stokes(nu, x, m, StokesSign::plus, p)
                                 : expansions::i_stokes(nu, x, m, p);
      row.push_back(r.subdominant);
    }
    grid.push_back(std::move(row));
  }
  std::vector<BigComplex> oracle_row;
  for (const auto& xsv : xs) {
    BigReal x = BigReal::from_decimal(xsv, p);
    if (k_side) {
      oracle_row.push_back(oracle::g_remainder(nu, x, StokesSign::plus, cfg));
    } else {
      oracle_row.push_back(BigComplex::real(oracle::f_remainder(nu, x, cfg), p));
    }
  }

  const char* fn = k_side ? "S_K" : "S_I";
  const char* orc = k_side ? "G" : "F";
  if (format == "json") {
    nlohmann::json j;
    j["nu"] = nu_s;
    j["M_range"] = {mr.lo, mr.hi};
    j["x"] = xs;
    j["series"] = fn;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      nlohmann::json row;
      row["M"] = mr.lo + static_cast<int>(i);
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : grid[i]) vals.push_back(expansions::to_json(v, digits));
      row["values"] = std::move(vals);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    nlohmann::json ov = nlohmann::json::array();
    for (const auto& v : oracle_row) ov.push_back(expansions::to_json(v, digits));
    j[orc] = std::move(ov);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "M";
  for (const auto& xsv : xs) std::cout << "\t" << fn << "(M;" << xsv << ")";
  std::cout << "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::cout << (mr.lo + static_cast<int>(i));
    for (const auto& v : grid[i]) std::cout << "\t" << fmt_cell(v);
    std::cout << "\n";
  }
  std::cout << orc;
  for (const auto& v : oracle_row) std::cout << "\t" << fmt_cell(v);
  std::cout << "\n";
  return 0;
}

// ---- coeffs --------------------------------------------------------------

int run_coeffs(bool ghat, int kmax, const std::string& nu_str, const std::string& a_str,
               const std::string& b_str, const std::string& x_str, int M, long digits,
               long bits, bool as_json) {
  if (ghat) {
    if (kmax < 0) throw UsageError("coeffs: --kmax must be >= 0");
    auto g = exactpoly::g_polynomials(static_cast<std::size_t>(kmax));
    if (as_json) {
      nlohmann::json j;
      for (int k = 0; k <= kmax; k += 2) {
        auto gh = exactpoly::scale_ghat(static_cast<std::size_t>(k),
                                        g[static_cast<std::size_t>(k)]);
        nlohmann::json coeffs_j = nlohmann::json::array();
        for (const auto& q : gh.coefficients()) coeffs_j.push_back(exactpoly::to_string(q));
        j["ghat_" + std::to_string(k)] = std::move(coeffs_j);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (int k = 0; k <= kmax; k += 2) {
        auto gh = exactpoly::scale_ghat(static_cast<std::size_t>(k),
                                        g[static_cast<std::size_t>(k)]);
        std::cout << "ghat_" << k << "\t" << exactpoly::to_string(gh) << "\n";
      }
    }
    return 0;
  }

  if (x_str.empty()) throw UsageError("coeffs: --x required for numeric tables");
  if (M < 1) throw UsageError("coeffs: --M must be >= 1");
  warn_large_m(M);
  Precision p = eval_precision(digits, bits);
  BigReal x = BigReal::from_decimal(x_str, p);

  BesselOrder nu(BigReal(0, p));
  KummerParams params(BigReal(0, p), BigReal(0, p));
  BigReal x_scale(p);
  std::string header;
  if (!a_str.empty() || !b_str.empty()) {
    if (a_str.empty() || b_str.empty()) throw UsageError("coeffs: need both --a and --b");
    params = KummerParams(BigReal::from_decimal(a_str, p), BigReal::from_decimal(b_str, p));
    BigReal half = div(BigReal(1, p), BigReal(2, p), p);
    nu = BesselOrder(sub(params.a, half, p)); // a_k column uses nu = a - 1/2
    x_scale = x;
    header = "# a=" + a_str + " b=" + b_str;
  } else {
    nu = BesselOrder(BigReal::from_decimal(nu_str, p));
    params = KummerParams::for_bessel(nu, p);
    x_scale = add(x, x, p);
    header = "# nu=" + nu_str;
  }
  auto trunc = coeffs::optimal_truncation(x_scale, params.two_a_minus_b(p));
  auto set = coeffs::make_coefficient_set(nu, params, trunc, M, p);

  std::cout << header << " alpha=" << trunc.alpha.to_sci(digits) << " M=" << M
            << " precision_bits=" << p.bits() << "\n";
  std::cout << "j\ta_j\tA_j\tB_j\n";
  for (int j = 0; j < M; ++j) {
    std::cout << j << "\t" << set.a_k[static_cast<std::size_t>(j)].to_sci(digits) << "\t"
              << set.A_j[static_cast<std::size_t>(j)].to_sci(digits) << "\t"
              << set.B_j[static_cast<std::size_t>(j)].to_sci(digits) << "\n";
  }
  return 0;
}

// ---- eval ----------------------------------------------------------------

int run_eval(const std::string& fn, const std::string& nu_str, const std::string& a_str,
             const std::string& b_str, const std::string& x_str, int M, int sign_int,
             long digits, long bits, bool as_json) {
  if (x_str.empty()) throw UsageError("eval: --x required");
  if (M < 1) throw UsageError("eval: --M must be >= 1");
  warn_large_m(M);
  Precision p = eval_precision(digits, bits);
  BigReal x = BigReal::from_decimal(x_str, p);
  StokesSign sign = sign_int >= 0 ? StokesSign::plus : StokesSign::minus;

  ExpansionResult r;
  if (fn == "I" || fn == "Ipoincare" || fn == "K" || fn == "Knaive") {
    BesselOrder nu(BigReal::from_decimal(nu_str, p));
    if (fn == "I") r = expansions::i_stokes(nu, x, M, p);
    else if (fn == "Ipoincare") r = expansions::i_poincare(nu, x, M, p);
    else if (fn == "K") r = expansions::k_stokes(nu, x, M, sign, p);
    else r = expansions::k_naive_stokes(nu, x, M, p);
  } else if (fn == "U" || fn == "F1") {
    if (a_str.empty() || b_str.empty()) throw UsageError("eval: need --a and --b");
    KummerParams params(BigReal::from_decimal(a_str, p), BigReal::from_decimal(b_str, p));
    r = fn == "U" ? expansions::u_stokes(params, x, M, sign, p)
                  : expansions::kummer_stokes(params, x, M, p);
  } else {
    throw UsageError("eval: --fn must be one of I, Ipoincare, K, Knaive, U, F1");
  }

  if (as_json) {
    std::cout << expansions::to_json(r, digits, p).dump(2) << "\n";
  } else {
    std::cout << "m_o\t" << r.trunc.m_o << "\nalpha\t" << r.trunc.alpha.to_sci(digits)
              << "\ndominant\t" << complex_sci(r.dominant, digits) << "\nsubdominant\t"
              << complex_sci(r.subdominant, digits) << "\ntotal\t"
              << complex_sci(r.total(p), digits) << "\n";
    if (r.brace) std::cout << "stokes_multiplier\t" << complex_sci(*r.brace, digits) << "\n";
  }
  return 0;
}

// ---- oracle --------------------------------------------------------------

int run_oracle(const std::string& fn, const std::string& nu_str, const std::string& a_str,
               const std::string& b_str, const std::string& x_str, int sign_int,
               long digits) {
  if (x_str.empty()) throw UsageError("oracle: --x required");
  oracle::OracleConfig cfg(digits < 10 ? 10 : digits);
  Precision p = cfg.working_precision();
  BigReal x = BigReal::from_decimal(x_str, p);
  StokesSign sign = sign_int >= 0 ? StokesSign::plus : StokesSign::minus;

  if (fn == "I" || fn == "K" || fn == "F") {
    BesselOrder nu(BigReal::from_decimal(nu_str, p));
    BigReal v = fn == "I"   ? oracle::bessel_i_series(nu, x, cfg)
                : fn == "K" ? oracle::bessel_k_real(nu, x, cfg)
                            : oracle::f_remainder(nu, x, cfg);
    std::cout << v.to_paper(digits) << "\n";
  } else if (fn == "Kline" || fn == "G") {
    BesselOrder nu(BigReal::from_decimal(nu_str, p));
    BigComplex v = fn == "Kline" ? oracle::k_on_stokes_line(nu, x, sign, cfg)
                                 : oracle::g_remainder(nu, x, sign, cfg);
    std::cout << complex_paper(v, digits) << "\n";
  } else if (fn == "M" || fn == "U") {
    if (a_str.empty() || b_str.empty()) throw UsageError("oracle: need --a and --b");
    BigReal a = BigReal::from_decimal(a_str, p);
    BigReal b = BigReal::from_decimal(b_str, p);
    BigComplex v;
    if (fn == "M") {
      v = oracle::kummer_m_series(a, b, BigComplex(neg(x, p), BigReal(0, p)), cfg);
    } else {
      v = oracle::u_on_stokes_line(a, b, x, sign, cfg);
    }
    std::cout << complex_paper(v, digits) << "\n";
  } else {
    throw UsageError("oracle: --fn must be one of I, K, Kline, F, G, M, U");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponentially improved Stokes-line expansions of the modified "
               "Bessel and Kummer functions"};
  app.require_subcommand(1);

  std::string nu_str = "0.25", a_str, b_str, x_str, which = "custom";
  std::string m_str = "1..7", format = "paper", fn;
  long digits = 10, bits = 0;
  int M = 1, sign_int = +1, kmax = 8;
  bool as_json = false, ghat = false;

  auto add_sign = [&](CLI::App* c) {
    c->add_option("--sign", sign_int, "Stokes line selector: +1 or -1")
        ->check(CLI::IsMember({1, -1}));
  };

  auto* table = app.add_subcommand("table", "Regenerate the S_I / S_K tables");
  table->add_option("--which", which, "table1, table2 or custom");
  table->add_option("--nu", nu_str, "Bessel order (custom tables)");
  table->add_option("--x", x_str, "comma-separated x values (custom tables)");
  table->add_option("--m,--m-range", m_str, "M range, e.g. 1..7 or 4");
  table->add_option("--digits", digits, "significant digits");
  table->add_option("--bits", bits, "working precision override");
  table->add_option("--format", format, "tsv, json or paper")
      ->check(CLI::IsMember({"tsv", "json", "paper"}));

  auto* co = app.add_subcommand("coeffs", "Coefficient tables and exact ghat polynomials");
  co->add_flag("--ghat", ghat, "dump ghat_{2k} polynomials as exact rationals");
  co->add_option("--kmax", kmax, "largest g index (with --ghat)");
  co->add_option("--nu", nu_str, "Bessel order");
  co->add_option("--a", a_str, "Kummer a");
  co->add_option("--b", b_str, "Kummer b");
  co->add_option("--x", x_str, "argument (fixes alpha)");
  co->add_option("--M", M, "number of coefficients");
  co->add_option("--digits", digits, "significant digits");
  co->add_option("--bits", bits, "working precision override");
  co->add_flag("--json", as_json, "JSON output");

  auto* ev = app.add_subcommand("eval", "Evaluate one expansion with term breakdown");
  ev->add_option("--fn", fn, "I, Ipoincare, K, Knaive, U or F1")->required();
  ev->add_option("--nu", nu_str, "Bessel order");
  ev->add_option("--a", a_str, "Kummer a");
  ev->add_option("--b", b_str, "Kummer b");
  ev->add_option("--x", x_str, "argument");
  ev->add_option("--M", M, "truncation index of the subdominant series");
  add_sign(ev);
  ev->add_option("--digits", digits, "significant digits");
  ev->add_option("--bits", bits, "working precision override");
  ev->add_flag("--json", as_json, "JSON ExpansionResult");

  auto* orc = app.add_subcommand("oracle", "High-precision reference values");
  orc->add_option("--fn", fn, "I, K, Kline, F, G, M or U")->required();
  orc->add_option("--nu", nu_str, "Bessel order");
  orc->add_option("--a", a_str, "Kummer a");
  orc->add_option("--b", b_str, "Kummer b");
  orc->add_option("--x", x_str, "argument");
  add_sign(orc);
  orc->add_option("--digits", digits, "significant digits");

  try {
    app.parse(argc, argv);
    if (table->parsed()) {
      return run_table(which, nu_str, x_str, m_str, digits, bits, format);
    }
    if (co->parsed()) {
      return run_coeffs(ghat, kmax, nu_str, a_str, b_str, x_str, M, digits, bits, as_json);
    }
    if (ev->parsed()) {
      return run_eval(fn, nu_str, a_str, b_str, x_str, M, sign_int, digits, bits, as_json);
    }
    if (orc->parsed()) {
      return run_oracle(fn, nu_str, a_str, b_str, x_str, sign_int, digits);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
