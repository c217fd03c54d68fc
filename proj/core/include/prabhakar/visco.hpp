#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "prabhakar/normalization.hpp"

namespace prabhakar {

/// Viscosity eta > 0 and order alpha in (0, 1) of the Scott-Blair law
/// sigma = eta D^alpha epsilon, plus the normalization of the CF/ABC operators.
struct MaterialParams {
  double eta = 1.0;
  double alpha = 0.5;
  NormalizationFn norm;

  void validate() const;
};

enum class RelaxationModel { ScottBlair, CfMaxwell, AbcFractionalMaxwell };

const char* to_string(RelaxationModel model);

struct RelaxationCurve {
  RelaxationModel model = RelaxationModel::ScottBlair;
  MaterialParams params;
  std::vector<double> times;
  std::vector<double> values;
};

/// eta t^-alpha / Gamma(1 - alpha), t > 0.
double relaxation_scott_blair(const MaterialParams& p, double t);
/// eta M / (1 - alpha) exp(-alpha t / (1 - alpha)), t >= 0.
double relaxation_cf(const MaterialParams& p, double t);
/// eta B / (1 - alpha) E_alpha(-alpha t^alpha / (1 - alpha)), t >= 0.
double relaxation_abc(const MaterialParams& p, double t);

double relaxation(RelaxationModel model, const MaterialParams& p, double t);

/// Laplace transforms of the three moduli (Re s > 0).
std::complex<double> relaxation_transform(RelaxationModel model, const MaterialParams& p,
                                          std::complex<double> s);

/// Samples one modulus on a strictly increasing positive grid.
RelaxationCurve relaxation_curve(RelaxationModel model, const MaterialParams& p,
                                 const std::vector<double>& times);

struct Figure1Row {
  double t = 0.0;
  double scott_blair = 0.0;
  double cf_over_m = 0.0;
  double abc_over_b = 0.0;
};

/// G_SB, G_CF / M and G_ABC / B on the grid.
std::vector<Figure1Row> figure1_dataset(double alpha, double eta, const std::vector<double>& times);

/// count points spaced evenly in log10 on [lo, hi].
std::vector<double> log_grid(double lo = 1e-2, double hi = 1e2, std::size_t count = 400);

}  // namespace prabhakar
