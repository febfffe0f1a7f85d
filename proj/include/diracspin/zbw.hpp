#pragma once

#include <string>
#include <vector>

#include "diracspin/dirac.hpp"

namespace ds {

/// One-dimensional reduction: momentum along the 3-axis, x = i d/dp3.
struct ZbwConfig {
  double mass = 1.0;
  double p_min = -6.0;
  double p_max = 6.0;
  int n = 1024;
  double p_center = 0.0;
  double sigma_p = 0.2;
  /// amplitude fraction on the negative-energy subspace, in [0, 1]
  double eta = 0.5;
  double t_max = 50.0;
  int n_steps = 2000;
};

struct WavePacket {
  std::vector<std::array<Cx, 4>> values;  // psi(p_j)
  double p_min = 0.0;
  double dp = 0.0;
  double m = 1.0;
  double t = 0.0;

  int n() const { return static_cast<int>(values.size()); }
  double p_at(int j) const { return p_min + j * dp; }
};

struct TimeSeriesRow {
  double t, x_dirac, x_fw, norm, energy;
};

struct TimeSeries {
  std::vector<TimeSeriesRow> rows;
};

enum class PositionRep { Dirac, FW };

/// psi(p) = g(p) (sqrt(1-eta) u+(p) + sqrt(eta) u-(p)), normalized; u+-(p)
/// are the energy projections of a fixed reference spinor.  Throws
/// ConfigError if the packet has non-negligible boundary amplitude.
WavePacket init_packet(const ZbwConfig& cfg);

/// Pointwise exact propagator exp(-iHt) = cos(Et) I - i sin(Et) H/E.
WavePacket evolve(const WavePacket& pk, double t, Exec exec = Exec::Parallel);

double packet_norm2(const WavePacket& pk);
double expect_energy(const WavePacket& pk);

/// <x> via 4th-order central differences; the FW branch transforms
/// phi = U_FW psi pointwise first (x_FW = U_FW^-1 x U_FW).
double expect_position(const WavePacket& pk, PositionRep rep,
                       Exec exec = Exec::Parallel);

TimeSeries run_zbw(const ZbwConfig& cfg, Exec exec = Exec::Parallel);

/// header `t,x_dirac,x_fw,norm,energy`, 17 significant digits
std::string timeseries_csv(const TimeSeries& ts);

/// Least-squares line a + b t; max_abs_residual is the detrended amplitude.
struct LinearFit {
  double a = 0.0;
  double b = 0.0;
  double max_abs_residual = 0.0;
};

LinearFit linear_fit(const std::vector<double>& t, const std::vector<double>& x);

/// Dominant angular frequency of the linearly detrended series by discrete
/// Fourier transform; resolution (bin width) is 2 pi / (t span).
double dominant_frequency(const std::vector<double>& t,
                          const std::vector<double>& x);

}  // namespace ds
