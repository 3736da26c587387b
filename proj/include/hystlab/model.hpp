#pragma once

#include <vector>

#include "hystlab/interp.hpp"

namespace hystlab {

// Stribeck curve g(v) = Fc + (Fs - Fc) exp(-|v/vs|^beta).
struct StribeckParams {
  double Fc;    // Coulomb friction level
  double Fs;    // stiction level
  double vs;    // Stribeck velocity
  double beta;  // exponent

  StribeckParams(double Fc, double Fs, double vs, double beta);
  double operator()(double v) const;
};

// Macrodamping term g: continuous and strictly positive on the whole
// velocity axis. Custom tables are interpolated with a shape-preserving
// cubic and clamped outside the table, so positivity is decided by the
// node values (midpoints are checked as well).
class MacroDamping {
 public:
  enum class Kind { Constant, Stribeck, Custom };

  static MacroDamping constant(double level);
  static MacroDamping stribeck(const StribeckParams& s);
  static MacroDamping custom(std::vector<double> v, std::vector<double> g);

  double operator()(double v) const;
  double at_zero() const { return g0_; }
  Kind kind() const { return kind_; }
  double constant_level() const { return level_; }
  const StribeckParams& stribeck_params() const;
  const MonotoneCubic& table() const { return table_; }

 private:
  MacroDamping() = default;

  Kind kind_ = Kind::Constant;
  double level_ = 1.0;
  StribeckParams stribeck_{1.0, 1.0, 1.0, 1.0};
  MonotoneCubic table_;
  double g0_ = 1.0;
};

// Velocity-dependent output term f, continuous with f(0) = 0.
// Custom tables must carry an exact (0, 0) node.
class VelocityMap {
 public:
  enum class Kind { Zero, Custom };

  static VelocityMap zero();
  static VelocityMap custom(std::vector<double> v, std::vector<double> f);

  double operator()(double v) const;
  Kind kind() const { return kind_; }
  const MonotoneCubic& table() const { return table_; }

 private:
  Kind kind_ = Kind::Zero;
  MonotoneCubic table_;
};

struct ModelParams {
  double sigma0;   // stiffness, > 0
  double sigma1;   // micro-damping, >= 0 (0 is the Dahl case)
  MacroDamping g;
  VelocityMap f;
  double x0;       // initial internal state

  ModelParams(double sigma0, double sigma1, MacroDamping g, VelocityMap f, double x0);
};

struct DahlParams {
  double rho;  // stiffness-like rate, > 0
  double Fc;   // force scale, > 0
  double w0;   // initial state in [-1, 1]

  DahlParams(double rho, double Fc, double w0);
};

double eval_g(const MacroDamping& g, double nu);

// State derivative of the rescaled dynamics; g sees the rescaled velocity udot/gamma.
double lugre_rhs(const ModelParams& p, double gamma, double z, double udot);

// Output force sigma0*z + (sigma1/gamma)*zdot + f(udot/gamma).
double lugre_output(const ModelParams& p, double gamma, double z, double zdot, double udot);

// Equivalent first-order form: sigma0 = rho*Fc, constant g = Fc, sigma1 = 0,
// f = 0, x0 = Fc*w0/sigma0. The output sigma0*x reproduces Fc*w.
ModelParams dahl_to_lugre(const DahlParams& d);

}  // namespace hystlab
