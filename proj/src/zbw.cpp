#include "diracspin/zbw.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "diracspin/errors.hpp"

namespace ds {

namespace {

using Spinor = std::array<Cx, 4>;

Spinor mat_apply(const Mat4& m, const Spinor& v) {
  Spinor r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
  return r;
}

double norm2(const Spinor& v) {
  double s = 0.0;
  for (const Cx& c : v) s += std::norm(c);
  return s;
}

Cx dot(const Spinor& x, const Spinor& y) {
  Cx s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// H(p) = p alpha^3 + m beta for momentum along the 3-axis
Mat4 hmat(double p, double m) {
  const GammaSet& g = gammas();
  return p * g.alpha[2] + m * g.beta;
}

Mat4 fw_matrix(double p, double m) {
  const double e = std::sqrt(p * p + m * m);
  const GammaSet& g = gammas();
  const Mat4 num = (e + m) * g.id + g.beta * (p * g.alpha[2]);
  return (1.0 / std::sqrt(2.0 * e * (e + m))) * num;
}

}  // namespace

WavePacket init_packet(const ZbwConfig& cfg) {
  if (cfg.mass <= 0.0) throw ConfigError("mass must be positive");
  if (cfg.n < 16) throw ConfigError("grid must have at least 16 points");
  if (cfg.p_max <= cfg.p_min) throw ConfigError("empty momentum window");
  if (cfg.sigma_p <= 0.0) throw ConfigError("sigma_p must be positive");
  if (cfg.eta < 0.0 || cfg.eta > 1.0) throw ConfigError("eta must be in [0, 1]");
  if (cfg.t_max <= 0.0 || cfg.n_steps < 1)
    throw ConfigError("time window must be positive");
  // keep the packet well away from the open boundary of the grid
  if (cfg.p_center - 8.0 * cfg.sigma_p < cfg.p_min ||
      cfg.p_center + 8.0 * cfg.sigma_p > cfg.p_max)
    throw ConfigError("grid too narrow: need 8 sigma_p of clearance");

  WavePacket pk;
  pk.p_min = cfg.p_min;
  pk.dp = (cfg.p_max - cfg.p_min) / (cfg.n - 1);
  pk.m = cfg.mass;
  pk.values.resize(cfg.n);

  // reference spinor with a nonzero projection on both energy branches
  // everywhere on the axis
  const Spinor ref{Cx(1 / std::sqrt(2.0)), Cx(0.0), Cx(1 / std::sqrt(2.0)),
                   Cx(0.0)};
  const double cp = std::sqrt(1.0 - cfg.eta);
  const double cm = std::sqrt(cfg.eta);

  for (int j = 0; j < cfg.n; ++j) {
    const double p = pk.p_at(j);
    const double e = std::sqrt(p * p + cfg.mass * cfg.mass);
    const Mat4 h = hmat(p, cfg.mass);
    Mat4 lp = Mat4::identity();
    Mat4 lm = Mat4::identity();
    for (int i = 0; i < 16; ++i) {
      lp.a[i] = 0.5 * (lp.a[i] + h.a[i] / e);
      lm.a[i] = 0.5 * (lm.a[i] - h.a[i] / e);
    }
    Spinor up = mat_apply(lp, ref);
    Spinor um = mat_apply(lm, ref);
    const double np = std::sqrt(norm2(up));
    const double nm = std::sqrt(norm2(um));
    const double g = std::exp(-(p - cfg.p_center) * (p - cfg.p_center) /
                              (4.0 * cfg.sigma_p * cfg.sigma_p));
    for (int i = 0; i < 4; ++i)
      pk.values[j][i] = g * (cp * up[i] / np + cm * um[i] / nm);
  }

  double peak = 0.0;
  for (const Spinor& v : pk.values) peak = std::max(peak, std::sqrt(norm2(v)));
  const double edge = std::max(std::sqrt(norm2(pk.values.front())),
                               std::sqrt(norm2(pk.values.back())));
  if (peak <= 0.0 || edge >= 1e-12 * peak)
    throw ConfigError("grid too narrow: packet reaches the boundary");

  const double n = std::sqrt(packet_norm2(pk));
  for (Spinor& v : pk.values)
    for (Cx& c : v) c /= n;
  return pk;
}

WavePacket evolve(const WavePacket& pk, double t, Exec exec) {
  WavePacket out = pk;
  out.t = pk.t + t;
  const int n = pk.n();
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
  for (int j = 0; j < n; ++j) {
    const double p = pk.p_at(j);
    const double e = std::sqrt(p * p + pk.m * pk.m);
    // exp(-iHt) = cos(Et) I - i sin(Et) H/E, exact since H^2 = E^2
    const Mat4 h = hmat(p, pk.m);
    Mat4 u;
    const Cx c = std::cos(e * t);
    const Cx s = Cx(0.0, -std::sin(e * t) / e);
    for (int i = 0; i < 16; ++i) u.a[i] = s * h.a[i];
    for (int i = 0; i < 4; ++i) u(i, i) += c;
    out.values[j] = mat_apply(u, pk.values[j]);
  }
  return out;
}

double packet_norm2(const WavePacket& pk) {
  double s = 0.0;
  for (const Spinor& v : pk.values) s += norm2(v);
  return s * pk.dp;
}

double expect_energy(const WavePacket& pk) {
  double s = 0.0;
  for (int j = 0; j < pk.n(); ++j) {
    const Mat4 h = hmat(pk.p_at(j), pk.m);
    s += dot(pk.values[j], mat_apply(h, pk.values[j])).real();
  }
  return s * pk.dp;
}

double expect_position(const WavePacket& pk, PositionRep rep, Exec exec) {
  const int n = pk.n();
  std::vector<Spinor> phi;
  const std::vector<Spinor>* f = &pk.values;
  if (rep == PositionRep::FW) {
    phi.resize(n);
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
    for (int j = 0; j < n; ++j)
      phi[j] = mat_apply(fw_matrix(pk.p_at(j), pk.m), pk.values[j]);
    f = &phi;
  }
  // <x> = Re sum psi^dag (i d/dp psi) dp, 4th-order central differences;
  // the packet vanishes near the boundary so out-of-range points read 0
  std::vector<double> part(n, 0.0);
#pragma omp parallel for if (exec == Exec::Parallel) schedule(static)
  for (int j = 0; j < n; ++j) {
    Spinor d{};
    auto at = [&](int k) -> Spinor {
      if (k < 0 || k >= n) return Spinor{};
      return (*f)[k];
    };
    const Spinor a = at(j - 2), b = at(j - 1), c = at(j + 1), e = at(j + 2);
    for (int i = 0; i < 4; ++i)
      d[i] = (a[i] - 8.0 * b[i] + 8.0 * c[i] - e[i]) / (12.0 * pk.dp);
    part[j] = (Cx(0.0, 1.0) * dot((*f)[j], d)).real();
  }
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += part[j];
  return s * pk.dp;
}

TimeSeries run_zbw(const ZbwConfig& cfg, Exec exec) {
  const WavePacket init = init_packet(cfg);
  TimeSeries ts;
  ts.rows.reserve(cfg.n_steps + 1);
  for (int k = 0; k <= cfg.n_steps; ++k) {
    const double t = cfg.t_max * k / cfg.n_steps;
    // propagate from t = 0 each time: the propagator is exact, so no
    // error accumulates across rows
    const WavePacket pk = evolve(init, t, exec);
    TimeSeriesRow row;
    row.t = t;
    row.x_dirac = expect_position(pk, PositionRep::Dirac, exec);
    row.x_fw = expect_position(pk, PositionRep::FW, exec);
    row.norm = std::sqrt(packet_norm2(pk));
    row.energy = expect_energy(pk);
    ts.rows.push_back(row);
  }
  return ts;
}

std::string timeseries_csv(const TimeSeries& ts) {
  std::ostringstream out;
  out << "t,x_dirac,x_fw,norm,energy\n";
  char buf[160];
  for (const TimeSeriesRow& r : ts.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t,
                  r.x_dirac, r.x_fw, r.norm, r.energy);
    out << buf;
  }
  return out.str();
}

LinearFit linear_fit(const std::vector<double>& t,
                     const std::vector<double>& x) {
  if (t.size() != x.size() || t.size() < 2)
    throw ConfigError("linear_fit needs two equal-length series");
  const double n = static_cast<double>(t.size());
  double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sx += x[i];
    stt += t[i] * t[i];
    stx += t[i] * x[i];
  }
  const double det = n * stt - st * st;
  if (det == 0.0) throw ConfigError("degenerate time grid");
  LinearFit fit;
  fit.b = (n * stx - st * sx) / det;
  fit.a = (sx - fit.b * st) / n;
  for (std::size_t i = 0; i < t.size(); ++i)
    fit.max_abs_residual =
        std::max(fit.max_abs_residual, std::abs(x[i] - fit.a - fit.b * t[i]));
  return fit;
}

double dominant_frequency(const std::vector<double>& t,
                          const std::vector<double>& x) {
  const LinearFit fit = linear_fit(t, x);
  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - fit.a - fit.b * t[i];
  const double span = t.back() - t.front();
  double best = 0.0, best_w = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    Cx acc = 0.0;
    const double w = 2.0 * M_PI * static_cast<double>(k) / span;
    for (std::size_t i = 0; i < n; ++i)
      acc += y[i] * std::exp(Cx(0.0, -w * (t[i] - t.front())));
    const double mag = std::abs(acc);
    if (mag > best) {
      best = mag;
      best_w = w;
    }
  }
  return best_w;
}

}  // namespace ds
