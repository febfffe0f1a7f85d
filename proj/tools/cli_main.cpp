#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracspin/checks.hpp"
#include "diracspin/report.hpp"
#include "diracspin/zbw.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<double> parse_list(const std::string& s, std::size_t want,
                               const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ds::ConfigError(std::string("bad number in ") + what + ": " + tok);
    }
  }
  if (out.size() != want) {
    std::ostringstream os;
    os << what << " needs " << want << " comma-separated values";
    throw ds::ConfigError(os.str());
  }
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ds::ConfigError("cannot open output file: " + path);
  f << text;
}

ordered_json mat_json(const ds::Mat4& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

std::string mat_text(const ds::Mat4& m) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << "  ";
    for (int j = 0; j < 4; ++j) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "(%+.6g%+.6gi) ", m(i, j).real(),
                    m(i, j).imag());
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

ds::Mat4 fn_value(const ds::MatFn& f, const ds::Momentum& q) {
  if (f.is_zero()) return ds::Mat4::zero();
  return f.value(q);
}

ordered_json diffop_json(const ds::DiffOp& o, const ds::Momentum& q) {
  ordered_json j;
  j["order"] = o.order;
  j["A"] = mat_json(fn_value(o.A, q));
  if (o.has_B()) {
    ordered_json b = ordered_json::array();
    for (int k = 0; k < 3; ++k) b.push_back(mat_json(fn_value(o.B[k], q)));
    j["B"] = b;
  }
  if (o.has_C()) {
    ordered_json c = ordered_json::array();
    for (int r = 0; r < 3; ++r) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < 3; ++k) row.push_back(mat_json(fn_value(o.C[r][k], q)));
      c.push_back(row);
    }
    j["C"] = c;
  }
  return j;
}

void diffop_text(std::ostream& os, const ds::DiffOp& o, const ds::Momentum& q) {
  os << "A (multiplication part):\n" << mat_text(fn_value(o.A, q));
  if (o.has_B())
    for (int k = 0; k < 3; ++k)
      os << "B[" << k + 1 << "] (coefficient of d/dp" << k + 1 << "):\n"
         << mat_text(fn_value(o.B[k], q));
  if (o.has_C())
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        os << "C[" << r + 1 << "][" << k + 1 << "]:\n"
           << mat_text(fn_value(o.C[r][k], q));
}

int cmd_check(const ds::SampleConfig& cfg, const std::string& filter,
              double tol, const std::string& format, const std::string& out) {
  ds::SuiteReport rep = ds::run_suite(cfg, filter, tol);
  if (rep.checks.empty())
    throw ds::ConfigError("no registered check matches filter: " + filter);
  std::string text;
  if (format == "json")
    text = ds::report_json(rep);
  else if (format == "markdown")
    text = ds::report_markdown(rep);
  else
    throw ds::ConfigError("check supports formats: json, markdown");
  write_out(out, text);
  return rep.all_pass() ? 0 : 1;
}

int cmd_eval(const std::string& name, const std::string& pstr, double mass,
             const std::string& format, const std::string& out) {
  const std::vector<double> p = parse_list(pstr, 3, "--p");
  if (mass <= 0.0) throw ds::ConfigError("mass must be positive");
  const ds::Momentum q{{p[0], p[1], p[2]}, mass};
  ds::NamedOperator named = ds::lookup_operator(name, mass);

  std::vector<std::pair<std::string, ds::DiffOp>> parts;
  if (const auto* v = std::get_if<ds::VecOp>(&named.op)) {
    for (int i = 0; i < 3; ++i)
      parts.emplace_back(name + "[" + std::to_string(i + 1) + "]", (*v)[i]);
  } else if (const auto* d = std::get_if<ds::DiffOp>(&named.op)) {
    parts.emplace_back(name, *d);
  } else {
    parts.emplace_back(name, ds::DiffOp::mul(std::get<ds::MatFn>(named.op)));
  }

  std::string text;
  if (format == "json") {
    ordered_json j;
    j["operator"] = name;
    j["p"] = {p[0], p[1], p[2]};
    j["mass"] = mass;
    j["components"] = ordered_json::array();
    for (const auto& [label, op] : parts) {
      ordered_json c = diffop_json(op, q);
      c["label"] = label;
      j["components"].push_back(c);
    }
    text = j.dump(2) + "\n";
  } else if (format == "markdown") {
    std::ostringstream os;
    os << "operator " << name << " at p = (" << p[0] << ", " << p[1] << ", "
       << p[2] << "), m = " << mass << "\n";
    for (const auto& [label, op] : parts) {
      os << "\n" << label << " (order " << op.order << ")\n";
      diffop_text(os, op, q);
    }
    text = os.str();
  } else {
    throw ds::ConfigError("eval supports formats: json, markdown");
  }
  write_out(out, text);
  return 0;
}

int cmd_zbw(const ds::ZbwConfig& cfg, const std::string& out) {
  ds::TimeSeries ts = ds::run_zbw(cfg);
  write_out(out, ds::timeseries_csv(ts));
  return 0;
}

int cmd_boost(const std::string& pstr, const std::string& wstr, double mass,
              bool inv, const std::string& out) {
  const std::vector<double> p = parse_list(pstr, 3, "--p");
  const std::vector<double> w = parse_list(wstr, 4, "--w");
  if (mass <= 0.0) throw ds::ConfigError("mass must be positive");
  std::array<double, 3> pv{p[0], p[1], p[2]};
  if (inv) for (double& c : pv) c = -c;
  const ds::BoostMatrix l = ds::boost_matrix(mass, pv);
  const std::array<double, 4> r = l.apply({w[0], w[1], w[2], w[3]});
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", r[0], r[1], r[2],
                r[3]);
  write_out(out, buf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic spin/position operator verification"};
  app.require_subcommand(1);

  double mass = 1.0, tol = 1e-10;
  std::uint64_t seed = 42;
  int samples = 200;
  std::string out, format = "json", filter;

  auto add_common = [&](CLI::App* c, bool with_sampling) {
    c->add_option("--mass", mass, "particle mass (natural units)");
    c->add_option("--out", out, "write output to a file instead of stdout");
    if (with_sampling) {
      c->add_option("--seed", seed, "sampling seed");
      c->add_option("--samples", samples, "number of random momenta");
      c->add_option("--tol", tol, "default check tolerance");
    }
  };

  CLI::App* check = app.add_subcommand("check", "run the identity check suite");
  add_common(check, true);
  check->add_option("--filter", filter, "glob over check ids (e.g. 'SU2_*')");
  check->add_option("--format", format, "json or markdown");

  CLI::App* eval = app.add_subcommand("eval", "print operator coefficients at a momentum");
  std::string op_name, pstr = "0,0,0";
  add_common(eval, false);
  eval->add_option("--operator", op_name, "operator name (e.g. S_FW, Q_PRYCE_E)")
      ->required();
  eval->add_option("--p", pstr, "momentum as x,y,z");
  eval->add_option("--format", format, "json or markdown");

  CLI::App* zbw = app.add_subcommand("zbw", "run the 1D wavepacket simulation (CSV)");
  ds::ZbwConfig zcfg;
  zbw->add_option("--mass", zcfg.mass, "particle mass");
  zbw->add_option("--p-min", zcfg.p_min, "grid lower edge");
  zbw->add_option("--p-max", zcfg.p_max, "grid upper edge");
  zbw->add_option("--n", zcfg.n, "grid points");
  zbw->add_option("--p-center", zcfg.p_center, "packet center momentum");
  zbw->add_option("--sigma-p", zcfg.sigma_p, "packet momentum width");
  zbw->add_option("--eta", zcfg.eta, "negative-energy amplitude fraction");
  zbw->add_option("--t-max", zcfg.t_max, "final time");
  zbw->add_option("--n-steps", zcfg.n_steps, "number of output steps");
  zbw->add_option("--out", out, "write CSV to a file instead of stdout");

  CLI::App* boost = app.add_subcommand("boost", "apply the standard boost L(p) to a four-vector");
  std::string wstr;
  bool inv = false;
  add_common(boost, false);
  boost->add_option("--p", pstr, "boost momentum as x,y,z")->required();
  boost->add_option("--w", wstr, "four-vector as w0,w1,w2,w3")->required();
  boost->add_flag("--inverse", inv, "apply L(-p) instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      ds::SampleConfig cfg;
      cfg.mass = mass;
      cfg.seed = seed;
      cfg.count = samples;
      return cmd_check(cfg, filter, tol, format, out);
    }
    if (eval->parsed()) return cmd_eval(op_name, pstr, mass, format, out);
    if (zbw->parsed()) return cmd_zbw(zcfg, out);
    return cmd_boost(pstr, wstr, mass, inv, out);
  } catch (const ds::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ds::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
