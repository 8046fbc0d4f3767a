#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "umbra/cli.hpp"
#include "umbra/closedforms.hpp"
#include "umbra/specfun.hpp"
#include "umbra/umbral.hpp"

namespace umbra::cli {

namespace {

std::string format_value(complex z) {
  std::ostringstream os;
  os << std::setprecision(16) << z.real();
  if (z.imag() != 0.0) os << std::showpos << z.imag() << 'i';
  return os.str();
}

double arg_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("not a number: '" + s + "'");
  return v;
}

int arg_int(const std::string& s) {
  const double v = arg_number(s);
  if (v != static_cast<int>(v)) throw UsageError("expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

std::vector<complex> arg_list(const std::string& s) {
  std::vector<complex> out;
  if (s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.emplace_back(arg_number(item));
  return out;
}

struct EvalResult {
  complex value;
  std::string achieved;
};

std::string tail_note(const SeriesTail& t) {
  std::ostringstream os;
  os << "series, " << t.terms_used << " terms, last term " << std::setprecision(3) << t.last_term_magnitude;
  return os.str();
}

struct EvalFn {
  std::string usage;
  std::size_t min_args;
  std::size_t max_args;
  std::function<EvalResult(const std::vector<std::string>&, const std::string&)> fn;
};

const std::map<std::string, EvalFn>& eval_table() {
  namespace sf = specfun;
  namespace cf = closedforms;
  static const std::map<std::string, EvalFn> table = {
      {"gamma", {"gamma <re> [im]", 1, 2, [](const auto& a, const auto&) {
         const complex z(arg_number(a[0]), a.size() > 1 ? arg_number(a[1]) : 0.0);
         return EvalResult{sf::gamma(z), "relative 1e-13 (Lanczos)"};
       }}},
      {"beta", {"beta <a> <b>", 2, 2, [](const auto& a, const auto&) {
         return EvalResult{sf::beta(arg_number(a[0]), arg_number(a[1])), "relative 1e-13 (log-Gamma)"};
       }}},
      {"bessel_j", {"bessel_j <nu> <x>", 2, 2, [](const auto& a, const auto&) {
         SeriesTail t;
         const double v = sf::bessel_j(arg_number(a[0]), arg_number(a[1]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"bessel_i", {"bessel_i <mu> <x>", 2, 2, [](const auto& a, const auto&) {
         SeriesTail t;
         const double v = sf::bessel_i(arg_number(a[0]), arg_number(a[1]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"struve_h", {"struve_h <nu> <x>", 2, 2, [](const auto& a, const auto&) {
         SeriesTail t;
         const double v = sf::struve_h(arg_number(a[0]), arg_number(a[1]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"b_nu", {"b_nu <nu> <x_re> [x_im]  (--method series|closed)", 2, 3, [](const auto& a, const auto& m) {
         const complex x(arg_number(a[1]), a.size() > 2 ? arg_number(a[2]) : 0.0);
         if (m == "closed")
           return EvalResult{sf::b_nu(arg_number(a[0]), x, sf::BnuMethod::bessel_closed_form),
                             "closed form via I series"};
         if (!m.empty() && m != "series") throw UsageError("b_nu method is series or closed");
         SeriesTail t;
         const complex v = sf::b_nu(arg_number(a[0]), x, sf::BnuMethod::series, kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"hermite_higher", {"hermite_higher <n> <m> <u> <v>", 4, 4, [](const auto& a, const auto&) {
         return EvalResult{sf::hermite_higher(arg_int(a[0]), arg_int(a[1]), arg_number(a[2]), arg_number(a[3])),
                           "finite sum"};
       }}},
      {"hermite_hybrid", {"hermite_hybrid <n> <m> <x> <y>", 4, 4, [](const auto& a, const auto&) {
         return EvalResult{sf::hermite_hybrid(arg_int(a[0]), arg_int(a[1]), arg_number(a[2]), arg_number(a[3])),
                           "finite sum"};
       }}},
      {"truncated_e", {"truncated_e <n> <m> <x> <y>", 4, 4, [](const auto& a, const auto&) {
         return EvalResult{sf::truncated_e(arg_int(a[0]), arg_int(a[1]), arg_number(a[2]), arg_number(a[3])),
                           "finite sum"};
       }}},
      {"pseudo_trig", {"pseudo_trig <k> <m> <x>", 3, 3, [](const auto& a, const auto&) {
         SeriesTail t;
         const double v = sf::pseudo_trig(arg_int(a[0]), arg_int(a[1]), arg_number(a[2]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"hermite_tricomi", {"hermite_tricomi <n> <m> <x> <y>", 4, 4, [](const auto& a, const auto&) {
         SeriesTail t;
         const complex v = sf::hermite_tricomi(arg_int(a[0]), arg_int(a[1]), arg_number(a[2]),
                                               arg_number(a[3]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"hyper_pfq", {"hyper_pfq <a1,a2,..|-> <b1,b2,..|-> <y>", 3, 3, [](const auto& a, const auto&) {
         SeriesTail t;
         const auto av = arg_list(a[0]);
         const auto bv = arg_list(a[1]);
         const complex v = sf::hyper_pfq(av, bv, arg_number(a[2]), kDefaultSeries, &t);
         return EvalResult{v, tail_note(t)};
       }}},
      {"fresnel_bessel", {"fresnel_bessel <nu> <alpha> <beta>", 3, 3, [](const auto& a, const auto&) {
         return EvalResult{cf::fresnel_bessel(arg_number(a[0]), arg_number(a[1]), arg_number(a[2])),
                           "closed form, b_nu series to 1e-16"};
       }}},
      {"struve_halfline", {"struve_halfline <nu> <b>", 2, 2, [](const auto& a, const auto&) {
         return EvalResult{cf::struve_halfline_integral(arg_number(a[0]), arg_number(a[1])),
                           "closed form (rounding)"};
       }}},
      {"struve_moment", {"struve_moment <nu>", 1, 1, [](const auto& a, const auto&) {
         return EvalResult{cf::struve_moment_integral(arg_number(a[0])), "closed form (rounding)"};
       }}},
      {"generating_function", {"generating_function <x> <t> <m>  (--method direct|tricomi)", 3, 3,
         [](const auto& a, const auto& m) {
           if (!m.empty() && m != "direct" && m != "tricomi")
             throw UsageError("generating_function method is direct or tricomi");
           const auto meth = m == "tricomi" ? cf::GenMethod::tricomi : cf::GenMethod::direct;
           return EvalResult{cf::bessel_generating_function(arg_number(a[0]), arg_number(a[1]),
                                                            arg_int(a[2]), meth),
                             "series to 1e-16"};
         }}},
      {"bessel_gauss", {"bessel_gauss <n> <x>", 2, 2, [](const auto& a, const auto&) {
         return EvalResult{cf::bessel_gauss_dilation(arg_int(a[0]), arg_number(a[1])), "series to 1e-16"};
       }}},
      {"lorentz_gauss", {"lorentz_gauss <x>  (--method hypergeometric|series|multiplier|paper-literal)", 1, 1,
         [](const auto& a, const auto& m) {
           using M = cf::LorentzMethod;
           M meth = M::hypergeometric;
           if (m == "series") meth = M::series;
           else if (m == "multiplier") meth = M::multiplier;
           else if (m == "paper-literal") meth = M::paper_literal;
           else if (!m.empty() && m != "hypergeometric") throw UsageError("unknown lorentz_gauss method");
           return EvalResult{cf::lorentz_gauss_integral(arg_number(a[0]), meth), "series to 1e-16"};
         }}},
      {"mellin_exp", {"mellin_exp <nu>", 1, 1, [](const auto& a, const auto&) {
         return EvalResult{umbral::mellin_master(umbral::UmbralSeries::exponential(), arg_number(a[0])),
                           "closed form (rounding)"};
       }}},
      {"mellin_rational", {"mellin_rational <nu>", 1, 1, [](const auto& a, const auto&) {
         return EvalResult{umbral::mellin_master(umbral::UmbralSeries::rational(), arg_number(a[0])),
                           "closed form (rounding)"};
       }}},
  };
  return table;
}

int cmd_list(const std::string& format, std::ostream& out) {
  const auto& cat = closedforms::catalog();
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : cat) {
      nlohmann::ordered_json dom = nlohmann::ordered_json::array();
      for (const auto& r : d.domain) dom.push_back(r.describe());
      if (!d.constraint.empty()) dom.push_back(d.constraint);
      arr.push_back({{"id", d.id},
                     {"equation", d.equation},
                     {"summary", d.summary},
                     {"parameter_domain", dom},
                     {"lhs_kind", closedforms::to_string(d.lhs)},
                     {"rhs_kind", closedforms::to_string(d.rhs)},
                     {"default_tolerance", d.default_tol},
                     {"default_grid", d.default_grid},
                     {"variants", d.variants}});
    }
    out << arr.dump(2) << '\n';
    return 0;
  }
  if (format != "text") throw UsageError("list format is text or json");
  for (const auto& d : cat) {
    out << d.id << "  (" << d.equation << ")\n    " << d.summary << "\n    domain:";
    for (const auto& r : d.domain) out << ' ' << r.describe() << ';';
    if (!d.constraint.empty()) out << ' ' << d.constraint << ';';
    out << "\n    default tol " << d.default_tol << ", grid " << d.default_grid;
    if (!d.variants.empty()) {
      out << ", variants";
      for (const auto& v : d.variants) out << ' ' << v;
    }
    out << '\n';
  }
  return 0;
}

int cmd_eval(const std::string& fn, const std::vector<std::string>& args, const std::string& method,
             std::ostream& out) {
  const auto& table = eval_table();
  const auto it = table.find(fn);
  if (it == table.end()) {
    std::string names;
    for (const auto& [k, v] : table) names += " " + k;
    throw UsageError("unknown function '" + fn + "'; known:" + names);
  }
  const auto& e = it->second;
  if (args.size() < e.min_args || args.size() > e.max_args) throw UsageError("usage: eval " + e.usage);
  const EvalResult r = e.fn(args, method);
  out << format_value(r.value) << "\n# achieved: " << r.achieved << '\n';
  return 0;
}

struct VerifyArgs {
  std::string target;
  std::vector<std::string> grids;
  double tol = 0.0;
  std::string out_path;
  std::string format;
  std::string variant;
  std::string config;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> cfg;
  if (!a.config.empty()) cfg = load_config(a.config);
  auto cfg_get = [&](const std::string& k) -> std::string {
    const auto it = cfg.find(k);
    return it == cfg.end() ? std::string() : it->second;
  };

  std::vector<const IdentityDescriptor*> ids;
  if (a.target == "all") {
    for (const auto& d : closedforms::catalog()) ids.push_back(&d);
  } else {
    const auto* d = closedforms::find_identity(a.target);
    if (d == nullptr) throw UsageError("unknown identity '" + a.target + "' (see `list`)");
    ids.push_back(d);
  }

  GridSpec over;
  for (const auto& g : a.grids) over.merge(GridSpec::parse(g));

  std::string format = a.format.empty() ? cfg_get("format") : a.format;
  if (format.empty()) format = "jsonl";
  if (format != "jsonl" && format != "csv") throw UsageError("format is jsonl or csv");
  const std::string out_path = a.out_path.empty() ? cfg_get("out") : a.out_path;

  std::vector<VerificationRecord> all;
  std::ostream& summary = out_path.empty() ? err : out;
  bool ok = true;
  for (const auto* d : ids) {
    GridSpec grid = GridSpec::parse(d->default_grid);
    if (auto g = cfg_get("grid." + d->id); !g.empty()) grid.merge(GridSpec::parse(g));
    if (ids.size() == 1) {
      grid.merge(over);
    } else {
      for (const auto& ax : over.axes)
        if (grid.has(ax.name)) grid.merge(GridSpec{{ax}});
    }
    VerifyOptions vo;
    vo.tol = a.tol;
    if (vo.tol == 0.0) {
      if (auto t = cfg_get("tol." + d->id); !t.empty()) vo.tol = arg_number(t);
    }
    std::string variant = a.variant.empty() ? cfg_get("variant." + d->id) : a.variant;
    if (ids.size() > 1 && !variant.empty() &&
        std::find(d->variants.begin(), d->variants.end(), variant) == d->variants.end())
      variant.clear();
    vo.variant = variant;
    vo.exec = a.serial ? oracle::Execution::serial : oracle::Execution::parallel;
    auto recs = verify_identity(*d, grid, vo);
    int passed = 0;
    for (const auto& r : recs) passed += r.pass ? 1 : 0;
    ok = ok && passed == static_cast<int>(recs.size());
    summary << d->id << ": " << passed << "/" << recs.size() << " pass\n";
    for (const auto& r : recs)
      if (!r.pass) summary << "  FAIL " << r.status << ": " << r.reason << '\n';
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }

  if (out_path.empty()) {
    write_records(out, all, format);
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    write_records(f, all, format);
    out << "wrote " << all.size() << " records to " << out_path << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Umbral closed forms of definite integrals, checked against quadrature"};
  app.require_subcommand(1);

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List cataloged identities");
  list->add_option("--format", list_format, "text or json");

  std::string fn, method;
  std::vector<std::string> fn_args;
  auto* ev = app.add_subcommand("eval", "Evaluate a function or closed form");
  ev->add_option("function", fn, "Function id")->required();
  ev->add_option("args", fn_args, "Arguments");
  ev->add_option("--method", method, "Evaluation method where several exist");
  ev->allow_extras(false);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Compare closed forms with the quadrature oracle");
  ver->add_option("identity", va.target, "Identity id or 'all'")->required();
  ver->add_option("--grid", va.grids, "k=v1,v2 or k=min:max:n (repeatable, ';' separates axes)");
  ver->add_option("--tol", va.tol, "Comparison tolerance (default: per identity)");
  ver->add_option("--out", va.out_path, "Report file (default: stdout)");
  ver->add_option("--format", va.format, "jsonl or csv");
  ver->add_option("--variant", va.variant, "Identity variant");
  ver->add_option("--config", va.config, "Key-value config file");
  ver->add_flag("--serial", va.serial, "Run grid points serially");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(list_format, out);
    if (*ev) return cmd_eval(fn, fn_args, method, out);
    if (*ver) return cmd_verify(va, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace umbra::cli
