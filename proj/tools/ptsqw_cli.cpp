#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptsqw/oracle.hpp"
#include "ptsqw/pwell.hpp"
#include "ptsqw/xwell.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::string path = "-";
  std::string format = "csv";
  std::string command_echo;
  ptsqw::num::PrecisionPolicy policy;

  void write(const Table& t) const {
    std::ostringstream os;
    if (format == "csv") {
      os << "# ptsqw " << kVersion << "\n";
      os << "# command: " << command_echo << "\n";
      os << "# digits=" << policy.digits << " scan_points=" << policy.scan_points
         << " root_tol=" << fmt(policy.root_tol) << " residual_tol=" << fmt(policy.residual_tol)
         << " max_digits=" << policy.max_digits << "\n";
      for (size_t i = 0; i < t.columns.size(); ++i)
        os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
      for (const auto& row : t.rows)
        for (size_t i = 0; i < row.size(); ++i) {
          std::string cell = row[i];
          if (cell.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : cell) {
              if (c == '"') quoted += '"';
              quoted += c;
            }
            quoted += '"';
            cell = quoted;
          }
          os << cell << (i + 1 < row.size() ? "," : "\n");
        }
    } else {
      nlohmann::ordered_json j;
      j["meta"] = {{"tool", "ptsqw"},
                   {"version", kVersion},
                   {"command", command_echo},
                   {"digits", policy.digits},
                   {"scan_points", policy.scan_points},
                   {"root_tol", policy.root_tol},
                   {"residual_tol", policy.residual_tol},
                   {"max_digits", policy.max_digits}};
      j["columns"] = t.columns;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) j["rows"].push_back(row);
      os << j.dump(2) << "\n";
    }
    if (path == "-") {
      std::cout << os.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw ptsqw::Error("cannot open output file: " + path);
      f << os.str();
    }
  }
};

std::vector<double> parse_z_values(const std::string& expr) {
  auto parse_call = [&](const std::string& name) -> std::optional<std::vector<double>> {
    if (expr.rfind(name + "(", 0) != 0 || expr.back() != ')') return std::nullopt;
    std::string inner = expr.substr(name.size() + 1, expr.size() - name.size() - 2);
    std::vector<double> args;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    if (args.size() != 3) throw ptsqw::DomainError(name + " expects (lo,hi,n)");
    int n = static_cast<int>(args[2]);
    if (n < 2 || !(args[0] < args[1]) || (name == "logspace" && !(args[0] > 0)))
      throw ptsqw::DomainError("bad " + name + " arguments");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
      double f = static_cast<double>(i) / (n - 1);
      out[i] = name == "logspace" ? args[0] * std::pow(args[1] / args[0], f)
                                  : args[0] + (args[1] - args[0]) * f;
    }
    return out;
  };
  if (auto v = parse_call("logspace")) return *v;
  if (auto v = parse_call("linspace")) return *v;
  std::vector<double> out;
  std::stringstream ss(expr);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if (out.empty()) throw ptsqw::DomainError("no Z values parsed from: " + expr);
  return out;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-state solver for PT-symmetric square-well models"};
  app.require_subcommand(1);

  Output out;
  out.command_echo = join_args(argc, argv);
  if (const char* env = std::getenv("PTSQW_DIGITS")) out.policy.digits = std::atoi(env);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out.path, "output path ('-' for stdout)");
    sub->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", out.policy.digits, "working decimal digits");
    sub->add_option("--scan-points", out.policy.scan_points, "grid points per unit interval");
    sub->add_option("--root-tol", out.policy.root_tol, "root abscissa tolerance");
    sub->add_option("--residual-tol", out.policy.residual_tol, "max |f| at a reported root");
    sub->add_option("--max-digits", out.policy.max_digits, "adaptive precision ceiling");
  };

  double T = 1.0, Z = 1.0, lo = 0.0, hi = 0.0, z_lo = 0.0, z_hi = 0.0;
  int levels = 10, n_level = 0, samples = 512, index = 0;
  std::string z_expr;

  auto* xs = app.add_subcommand("xwell-spectrum", "coordinate-model levels N=0..levels-1");
  xs->add_option("--T", T, "well height scale")->required();
  xs->add_option("--levels", levels, "number of levels");
  add_common(xs);

  auto* ps = app.add_subcommand("pwell-spectrum", "momentum-model spectrum at depth Z");
  ps->add_option("--Z", Z, "kinetic well depth")->required();
  add_common(ps);

  auto* sw = app.add_subcommand("pwell-sweep", "level counts over a Z range");
  sw->add_option("--Z", z_expr, "logspace(lo,hi,n), linspace(lo,hi,n) or comma list")->required();
  add_common(sw);

  auto* wf = app.add_subcommand("wavefunction", "sampled wave function (xwell via --T, pwell via --Z)");
  auto* wf_T = wf->add_option("--T", T, "xwell model");
  auto* wf_Z = wf->add_option("--Z", Z, "pwell model");
  wf->add_option("--n-level", n_level, "xwell level index N");
  wf->add_option("--index", index, "pwell root index");
  wf->add_option("--min", lo, "abscissa lower bound");
  wf->add_option("--max", hi, "abscissa upper bound");
  wf->add_option("--samples", samples, "sample count");
  add_common(wf);

  auto* sp = app.add_subcommand("secular-plot", "secular-function curve (xwell via --T, pwell via --Z)");
  auto* sp_T = sp->add_option("--T", T, "xwell model");
  auto* sp_Z = sp->add_option("--Z", Z, "pwell model");
  sp->add_option("--n-level", n_level, "xwell level index N");
  sp->add_option("--samples", samples, "sample count");
  add_common(sp);

  auto* db = app.add_subcommand("doublet", "bisect a level-count +2 jump in (z-lo, z-hi)");
  db->add_option("--z-lo", z_lo, "interval start")->required();
  db->add_option("--z-hi", z_hi, "interval end")->required();
  add_common(db);

  // accept the bare key=value spelling as well: "T=1" -> "--T" "1"
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto eq = a.find('=');
    if (!a.empty() && a[0] != '-' && eq != std::string::npos && i > 1) {
      args.push_back("--" + a.substr(0, eq));
      args.push_back(a.substr(eq + 1));
    } else {
      args.push_back(a);
    }
  }

  try {
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    out.policy.validate();
    Table t;
    if (xs->parsed()) {
      t.columns = {"N", "parity", "omega", "k", "E", "G"};
      for (const auto& lv : ptsqw::xwell::spectrum(T, levels - 1, out.policy))
        t.rows.push_back({std::to_string(lv.N), lv.parity == ptsqw::xwell::Parity::plus ? "plus" : "minus",
                          fmt(lv.omega), fmt(lv.k), fmt(lv.E), fmt(lv.G)});
    } else if (ps->parsed()) {
      t.columns = {"idx", "alpha", "E", "residual", "digits"};
      auto spec = ptsqw::pwell::find_spectrum(Z, out.policy);
      int i = 0;
      for (const auto& r : spec.roots)
        t.rows.push_back({std::to_string(i++), fmt(r.alpha), fmt(r.E), fmt(r.residual),
                          std::to_string(spec.digits_used)});
    } else if (sw->parsed()) {
      t.columns = {"Z", "N", "delta", "events"};
      for (const auto& rec : ptsqw::pwell::sweep(parse_z_values(z_expr), out.policy)) {
        std::string ev;
        for (const auto& e : rec.events) {
          if (!ev.empty()) ev += ';';
          ev += ptsqw::pwell::to_string(e.kind) + "@alpha=" + fmt(e.alpha);
        }
        t.rows.push_back({fmt(rec.Z), std::to_string(rec.n_levels), std::to_string(rec.delta), ev});
      }
    } else if (wf->parsed()) {
      if (wf_T->count() == wf_Z->count())
        throw ptsqw::DomainError("wavefunction: give exactly one of --T or --Z");
      if (samples < 2) throw ptsqw::DomainError("samples must be >= 2");
      if (wf_T->count()) {
        if (!(hi > lo)) { lo = -9.42477796076937972; hi = 9.42477796076937972; }
        t.columns = {"x", "re_psi", "im_psi"};
        auto w = ptsqw::xwell::make_wavefunction(ptsqw::xwell::solve_level(n_level, T, out.policy));
        for (int i = 0; i < samples; ++i) {
          double x = lo + (hi - lo) * i / (samples - 1);
          auto v = w(x);
          t.rows.push_back({fmt(x), fmt(v.real()), fmt(v.imag())});
        }
      } else {
        if (!(hi > lo)) { lo = -8.0; hi = 8.0; }
        auto spec = ptsqw::pwell::find_spectrum(Z, out.policy);
        if (index < 0 || index >= static_cast<int>(spec.roots.size()))
          throw ptsqw::DomainError("wavefunction: root index out of range (spectrum has " +
                                   std::to_string(spec.roots.size()) + " roots)");
        auto par = ptsqw::pwell::params(spec.roots[index].E, Z);
        auto cf = ptsqw::pwell::coefficients(spec.roots[index].E, Z);
        t.columns = {"p", "psi"};
        for (int i = 0; i < samples; ++i) {
          double p = lo + (hi - lo) * i / (samples - 1);
          t.rows.push_back({fmt(p), fmt(ptsqw::pwell::psi(p, par, cf))});
        }
      }
    } else if (sp->parsed()) {
      if (sp_T->count() == sp_Z->count())
        throw ptsqw::DomainError("secular-plot: give exactly one of --T or --Z");
      if (samples < 2) throw ptsqw::DomainError("samples must be >= 2");
      if (sp_Z->count()) {
        t.columns = {"alpha", "secular_value"};
        const double amax = ptsqw::pwell::threshold_alpha(Z);
        for (int i = 0; i < samples; ++i) {
          double a = amax * (i + 0.5) / samples;
          t.rows.push_back({fmt(a), fmt(ptsqw::pwell::secular_value(8 * a * a * a, Z))});
        }
      } else {
        t.columns = {"omega", "residual"};
        for (int i = 0; i < samples; ++i) {
          double w = (i + 0.5) / samples;
          t.rows.push_back({fmt(w), fmt(ptsqw::xwell::secular_residual(w, n_level, T))});
        }
      }
    } else if (db->parsed()) {
      auto birth = ptsqw::pwell::locate_doublet_birth(z_lo, z_hi, out.policy);
      t.columns = {"Z_star", "alpha_star", "E_star"};
      t.rows.push_back({fmt(birth.Z_star), fmt(birth.alpha_star), fmt(birth.E_star)});
    }
    out.write(t);
  } catch (const ptsqw::DomainError& e) {
    std::cerr << "ptsqw: invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const ptsqw::Error& e) {
    std::cerr << "ptsqw: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "ptsqw: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
