#include "periodhecke/cli.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactlinalg.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/format.hpp"
#include "periodhecke/heckeop.hpp"
#include "periodhecke/heckesum.hpp"
#include "periodhecke/periodpoly.hpp"
#include "periodhecke/qoracle.hpp"
#include "periodhecke/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>

namespace periodhecke {

namespace {

enum class Format { json, text, latex };

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"text", Format::text}, {"latex", Format::latex}};

void emit_polynomial(std::ostream& out, const BoundedPolynomial& p, Format f) {
  switch (f) {
    case Format::json: out << polynomial_json(p).dump() << '\n'; break;
    case Format::text: out << polynomial_text(p) << '\n'; break;
    case Format::latex: out << polynomial_latex(p) << '\n'; break;
  }
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgumentError("bad " + what + " '" + s + "'");
}

// "eta:1^8,2^8", "Einf:k", "E0:k", "E:k", "M2"
QSeries parse_form(const std::string& form, long prec) {
  if (form == "M2") return weight2_form(prec);
  const auto colon = form.find(':');
  if (colon == std::string::npos) throw InvalidArgumentError("unrecognized form '" + form + "'");
  const std::string kind = form.substr(0, colon);
  const std::string rest = form.substr(colon + 1);
  if (kind == "eta") {
    std::vector<EtaFactor> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = std::min(rest.find(',', pos), rest.size());
      const std::string item = rest.substr(pos, comma - pos);
      const std::size_t caret = item.find('^');
      if (caret == std::string::npos) throw InvalidArgumentError("eta factor '" + item + "' needs the form d^r");
      parts.push_back({parse_long(item.substr(0, caret), "eta scale"), parse_long(item.substr(caret + 1), "eta exponent")});
      pos = comma + 1;
    }
    return eta_quotient(parts, prec);
  }
  const int k = static_cast<int>(parse_long(rest, "weight"));
  if (kind == "E") return eisenstein_level1(k, prec);
  if (kind == "Einf") return eisenstein_gamma02(k, Cusp::infinity, prec);
  if (kind == "E0") return eisenstein_gamma02(k, Cusp::zero, prec);
  throw InvalidArgumentError("unrecognized form '" + form + "'");
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  Json j;
  j["error"] = std::string(code);
  j["message"] = message;
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact period polynomials and Hecke matrices on Gamma_0(N)", "periodhecke"};
  app.require_subcommand(1);

  struct {
    long level = 2;
    int w = 0;
    int n = 0;
    long m = 1;
    int k = 0;
    long prec = 0;
    int which = 1;
    std::string sign = "auto";
    std::string form;
    std::string suite;
    bool poly = false;
    bool from_periods = false;
    bool raw = false;
    bool corrected = false;
    bool list = false;
    bool show_matrix = false;
    Pairing pairing = Pairing::standard;
    SuiteOptions options;
    Format format = Format::json;
  } p;
  std::function<void()> action;
  int status = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", p.format, "json, text or latex")->transform(CLI::CheckedTransformer(kFormats));
  };
  auto add_nwm = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--level", p.level, "level N")->required();
    sub->add_option("--w", p.w, "weight parameter w (weight w+2)")->required();
    if (with_n) sub->add_option("--n", p.n, "index n");
  };
  auto emit_coeffs = [&](const std::vector<Rational>& c) {
    switch (p.format) {
      case Format::json: out << rationals_json(c).dump() << '\n'; break;
      case Format::text: out << coefficients_text(c) << '\n'; break;
      case Format::latex: out << coefficients_latex(c) << '\n'; break;
    }
  };

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_k (and B^0_k(x) with --poly)");
  bern->add_option("--k", p.k, "index k >= 0")->required();
  bern->add_flag("--poly", p.poly, "also print the polynomial B^0_k");
  bern->callback([&] {
    action = [&] {
      Json j;
      j["k"] = p.k;
      j["value"] = to_string(bernoulli_number(p.k));
      if (p.poly) j["poly0"] = polynomial_json(bernoulli_poly0(p.k));
      out << j.dump() << '\n';
    };
  });

  auto* period = app.add_subcommand("period-poly", "r^-(R_n) for even n, r^+(R_n) for odd n");
  add_nwm(period, false);
  period->add_option("--n", p.n, "index n")->required();
  period->add_option("--sign", p.sign, "plus, minus or auto")->check(CLI::IsMember({"plus", "minus", "auto"}));
  period->add_flag("--from-periods", p.from_periods, "assemble from the individual periods r_m");
  add_format(period);
  period->callback([&] {
    action = [&] {
      const PeriodContext ctx = PeriodContext::make(p.level, p.w, p.n);
      const bool even = p.n % 2 == 0;
      PeriodSign s = even ? PeriodSign::minus : PeriodSign::plus;
      if (p.sign == "plus") s = PeriodSign::plus;
      if (p.sign == "minus") s = PeriodSign::minus;
      if ((s == PeriodSign::minus) != even) {
        throw UnsupportedError(ErrorCode::unsupported_parity,
                               std::string("closed form for r^") + (s == PeriodSign::minus ? "- needs even n" : "+ needs odd n"));
      }
      const BoundedPolynomial poly = p.from_periods ? assemble_from_periods(ctx, s)
                                                    : (even ? s_poly(ctx) : r_plus_odd(ctx));
      emit_polynomial(out, poly, p.format);
    };
  });

  auto* hsum = app.add_subcommand("hecke-sum", "S^m_{N,w,n} (--raw) or r^-(R^m) including the N|m term (--corrected, default)");
  add_nwm(hsum, true);
  hsum->add_option("--m", p.m, "Hecke index m")->required();
  auto* raw_flag = hsum->add_flag("--raw", p.raw, "S^m without the Moebius term");
  auto* corr_flag = hsum->add_flag("--corrected", p.corrected, "S^m plus the Moebius term");
  raw_flag->excludes(corr_flag);
  hsum->add_flag("--list-matrices", p.list, "list the sign-restricted matrices of determinant m instead");
  add_format(hsum);
  hsum->callback([&] {
    action = [&] {
      if (p.list) {
        Json arr = Json::array();
        for (const IntMat2& g : enumerate_h_neg(p.level, p.m)) arr.push_back({g.a, g.b, g.c, g.d});
        out << arr.dump() << '\n';
        return;
      }
      const PeriodContext ctx = PeriodContext::make(p.level, p.w, p.n);
      emit_polynomial(out, p.raw ? s_poly_m(ctx, p.m) : r_minus_hecke(ctx, p.m), p.format);
    };
  });

  auto* hmat = app.add_subcommand("hecke-matrix", "T_m = S1^-1 S2 on S_{w+2}(Gamma_0(N))");
  add_nwm(hmat, false);
  hmat->add_option("--m", p.m, "Hecke index m")->required();
  hmat->add_option("--pairing", p.pairing, "standard or transposed")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Pairing>{{"standard", Pairing::standard}, {"transposed", Pairing::transposed}}));
  add_format(hmat);
  hmat->callback([&] {
    action = [&] {
      const HeckeComputation hc = compute_hecke(p.level, p.w, p.m, p.pairing);
      switch (p.format) {
        case Format::json: {
          Json j;
          j["level"] = hc.level;
          j["w"] = hc.w;
          j["m"] = hc.m;
          j["basis_indices"] = hc.basis_indices;
          j["S1"] = matrix_json(hc.s1);
          j["S2"] = matrix_json(hc.s2);
          j["T"] = matrix_json(hc.t);
          j["charpoly"] = rationals_json(hc.charpoly);
          out << j.dump() << '\n';
          break;
        }
        case Format::text:
          out << "T_" << p.m << " =\n" << matrix_text(hc.t) << "charpoly: " << coefficients_text(hc.charpoly) << '\n';
          break;
        case Format::latex:
          out << "T_{" << p.m << "} = " << matrix_latex(hc.t) << '\n' << coefficients_latex(hc.charpoly) << '\n';
          break;
      }
    };
  });

  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial of T_m (ascending coefficients)");
  add_nwm(cp, false);
  cp->add_option("--m", p.m, "Hecke index m")->required();
  add_format(cp);
  cp->callback([&] { action = [&] { emit_coeffs(hecke_charpoly(p.level, p.w, p.m)); }; });

  auto* hankel = app.add_subcommand("hankel", "Bernoulli Hankel determinant next to its product formula");
  hankel->add_option("--which", p.which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  hankel->add_option("--n", p.n, "matrix size")->required();
  hankel->add_flag("--matrix", p.show_matrix, "include the matrix");
  hankel->callback([&] {
    action = [&] {
      const HankelIdentity h = hankel_bernoulli(p.which, p.n);
      Json j;
      j["which"] = p.which;
      j["n"] = p.n;
      j["det"] = to_string(h.determinant);
      j["closed_form"] = to_string(h.closed_form);
      j["equal"] = h.determinant == h.closed_form;
      if (p.show_matrix) j["matrix"] = matrix_json(bernoulli_hankel_matrix(p.which, p.n));
      out << j.dump() << '\n';
    };
  });

  auto* qexp = app.add_subcommand("qexp", "q-expansion of an eta quotient or an Eisenstein series");
  qexp->add_option("--form", p.form, "eta:d^r,..., E:k, Einf:k, E0:k or M2")->required();
  qexp->add_option("--prec", p.prec, "last coefficient index (default 20)");
  add_format(qexp);
  qexp->callback([&] {
    action = [&] {
      const QSeries f = parse_form(p.form, p.prec == 0 ? 20 : p.prec);
      if (p.format == Format::json) {
        out << qseries_json(f).dump() << '\n';
        return;
      }
      out << (p.format == Format::text ? qseries_text(f) : qseries_latex(f)) << '\n';
    };
  });

  auto* oracle = app.add_subcommand("oracle-matrix", "T_m on S_k(Gamma_0(2)) computed from q-expansions");
  oracle->add_option("--weight", p.k, "weight k")->required();
  oracle->add_option("--m", p.m, "Hecke index m")->required();
  oracle->add_option("--prec", p.prec, "input precision (default: automatic)");
  add_format(oracle);
  oracle->callback([&] {
    action = [&] {
      const Matrix t = hecke_matrix_oracle(p.k, p.m, p.prec);
      const auto c = charpoly(t);
      switch (p.format) {
        case Format::json: {
          Json j;
          j["weight"] = p.k;
          j["m"] = p.m;
          j["T"] = matrix_json(t);
          j["charpoly"] = rationals_json(c);
          out << j.dump() << '\n';
          break;
        }
        case Format::text: out << matrix_text(t) << "charpoly: " << coefficients_text(c) << '\n'; break;
        case Format::latex: out << matrix_latex(t) << '\n' << coefficients_latex(c) << '\n'; break;
      }
    };
  });

  auto* verify = app.add_subcommand("verify", "run a named self-check suite; exit 1 on any mismatch");
  std::vector<std::string> allowed = suite_names();
  allowed.emplace_back("all");
  verify->add_option("--suite", p.suite, "suite name or 'all'")->required()->check(CLI::IsMember(allowed));
  verify->add_option("--max-weight", p.options.max_weight, "largest weight for theorem14 (default 40)");
  verify->add_option("--samples", p.options.samples, "sample count for symmetry (default 200)");
  verify->add_option("--seed", p.options.seed, "seed for symmetry sampling");
  verify->add_flag("--json", [&](std::int64_t) { p.format = Format::json; }, "JSON report instead of text");
  verify->callback([&] {
    action = [&] {
      const std::vector<std::string> names = p.suite == "all" ? suite_names() : std::vector<std::string>{p.suite};
      Json all = Json::array();
      for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, p.options);
        if (!rep.passed()) status = 1;
        if (p.format == Format::json) all.push_back(report_json(rep));
        else out << report_text(rep);
      }
      if (p.format == Format::json) out << all.dump() << '\n';
    };
  });
  verify->preparse_callback([&](std::size_t) { p.format = Format::text; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "InvalidArgument", e.what());
    err << app.help();
    return 1;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 1;
  }
  return status;
}

}  // namespace periodhecke
