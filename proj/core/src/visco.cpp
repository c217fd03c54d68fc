#include "prabhakar/visco.hpp"

#include <cmath>
#include <string>

#include "prabhakar/errors.hpp"
#include "prabhakar/special_functions.hpp"

namespace prabhakar {
namespace {

void check_grid(const std::vector<double>& times) {
  if (times.empty()) throw DomainError("time grid is empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || !std::isfinite(times[i])) {
      throw DomainError("time grid must be finite and > 0");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw DomainError("time grid must be strictly increasing");
    }
  }
}

}  // namespace

void MaterialParams::validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("viscosity eta must be > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("material order alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

const char* to_string(RelaxationModel model) {
  switch (model) {
    case RelaxationModel::ScottBlair:
      return "scott-blair";
    case RelaxationModel::CfMaxwell:
      return "cf";
    case RelaxationModel::AbcFractionalMaxwell:
      return "abc";
  }
  return "unknown";
}

double relaxation_scott_blair(const MaterialParams& p, double t) {
  p.validate();
  if (!(t > 0.0)) throw DomainError("Scott-Blair modulus is singular at t = 0; need t > 0");
  return p.eta * std::pow(t, -p.alpha) / gamma_fn(1.0 - p.alpha);
}

double relaxation_cf(const MaterialParams& p, double t) {
  p.validate();
  if (!(t >= 0.0)) throw DomainError("relaxation modulus needs t >= 0");
  return p.eta * p.norm(p.alpha) / (1.0 - p.alpha) * std::exp(-p.alpha * t / (1.0 - p.alpha));
}

double relaxation_abc(const MaterialParams& p, double t) {
  p.validate();
  if (!(t >= 0.0)) throw DomainError("relaxation modulus needs t >= 0");
  const double z = -p.alpha * std::pow(t, p.alpha) / (1.0 - p.alpha);
  return p.eta * p.norm(p.alpha) / (1.0 - p.alpha) * mittag_leffler(p.alpha, z);
}

double relaxation(RelaxationModel model, const MaterialParams& p, double t) {
  switch (model) {
    case RelaxationModel::ScottBlair:
      return relaxation_scott_blair(p, t);
    case RelaxationModel::CfMaxwell:
      return relaxation_cf(p, t);
    case RelaxationModel::AbcFractionalMaxwell:
      return relaxation_abc(p, t);
  }
  throw DomainError("unknown relaxation model");
}

std::complex<double> relaxation_transform(RelaxationModel model, const MaterialParams& p,
                                          std::complex<double> s) {
  p.validate();
  const double a = p.alpha;
  const double rate = a / (1.0 - a);
  switch (model) {
    case RelaxationModel::ScottBlair:
      return p.eta * std::pow(s, a - 1.0);
    case RelaxationModel::CfMaxwell:
      return p.eta * p.norm(a) / (1.0 - a) / (s + rate);
    case RelaxationModel::AbcFractionalMaxwell:
      return p.eta * p.norm(a) / (1.0 - a) * std::pow(s, a - 1.0) / (std::pow(s, a) + rate);
  }
  throw DomainError("unknown relaxation model");
}

RelaxationCurve relaxation_curve(RelaxationModel model, const MaterialParams& p,
                                 const std::vector<double>& times) {
  check_grid(times);
  RelaxationCurve curve{model, p, times, {}};
  curve.values.reserve(times.size());
  for (double t : times) curve.values.push_back(relaxation(model, p, t));
  return curve;
}

std::vector<Figure1Row> figure1_dataset(double alpha, double eta,
                                        const std::vector<double>& times) {
  check_grid(times);
  const MaterialParams p{eta, alpha, NormalizationFn::constant_one()};
  p.validate();
  std::vector<Figure1Row> rows;
  rows.reserve(times.size());
  for (double t : times) {
    // with M = B = 1 the normalized moduli are the moduli themselves
    rows.push_back({t, relaxation_scott_blair(p, t), relaxation_cf(p, t), relaxation_abc(p, t)});
  }
  return rows;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("log grid needs 0 < lo < hi");
  if (count < 2) throw DomainError("log grid needs at least two points");
  std::vector<double> grid(count);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace prabhakar
