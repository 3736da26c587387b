#include "hystlab/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hystlab/errors.hpp"

namespace hystlab {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ValidationError(std::string(name) + " must be positive");
}

}  // namespace

StribeckParams::StribeckParams(double Fc_, double Fs_, double vs_, double beta_)
    : Fc(Fc_), Fs(Fs_), vs(vs_), beta(beta_) {
  require_positive(Fc, "Fc");
  require_positive(Fs, "Fs");
  require_positive(vs, "vs");
  require_positive(beta, "beta");
}

double StribeckParams::operator()(double v) const {
  return Fc + (Fs - Fc) * std::exp(-std::pow(std::abs(v / vs), beta));
}

MacroDamping MacroDamping::constant(double level) {
  require_positive(level, "g level");
  MacroDamping g;
  g.kind_ = Kind::Constant;
  g.level_ = level;
  g.g0_ = level;
  return g;
}

MacroDamping MacroDamping::stribeck(const StribeckParams& s) {
  MacroDamping g;
  g.kind_ = Kind::Stribeck;
  g.stribeck_ = s;
  g.g0_ = s(0.0);  // equals Fs
  return g;
}

MacroDamping MacroDamping::custom(std::vector<double> v, std::vector<double> gv) {
  MacroDamping g;
  g.kind_ = Kind::Custom;
  g.table_ = MonotoneCubic(std::move(v), std::move(gv));
  const auto& xs = g.table_.xs();
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!(g.table_.value(xs[i]) > 0.0))
      throw ValidationError("custom g must be positive at every table node");
    if (i + 1 < xs.size() && !(g.table_.value(0.5 * (xs[i] + xs[i + 1])) > 0.0))
      throw ValidationError("custom g must be positive at table midpoints");
  }
  g.g0_ = g.table_.value(0.0);
  return g;
}

const StribeckParams& MacroDamping::stribeck_params() const {
  if (kind_ != Kind::Stribeck) throw ValidationError("g is not a Stribeck curve");
  return stribeck_;
}

double MacroDamping::operator()(double v) const {
  switch (kind_) {
    case Kind::Constant: return level_;
    case Kind::Stribeck: return stribeck_(v);
    case Kind::Custom: return table_.value(v);
  }
  return level_;
}

VelocityMap VelocityMap::zero() { return VelocityMap(); }

VelocityMap VelocityMap::custom(std::vector<double> v, std::vector<double> f) {
  VelocityMap m;
  m.kind_ = Kind::Custom;
  m.table_ = MonotoneCubic(std::move(v), std::move(f));
  bool has_zero_node = false;
  const auto& xs = m.table_.xs();
  const auto& ys = m.table_.ys();
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == 0.0 && ys[i] == 0.0) has_zero_node = true;
  if (!has_zero_node)
    throw ValidationError("custom f needs an exact (0, 0) node so that f(0) = 0");
  return m;
}

double VelocityMap::operator()(double v) const {
  return kind_ == Kind::Zero ? 0.0 : table_.value(v);
}

ModelParams::ModelParams(double sigma0_, double sigma1_, MacroDamping g_, VelocityMap f_,
                         double x0_)
    : sigma0(sigma0_), sigma1(sigma1_), g(std::move(g_)), f(std::move(f_)), x0(x0_) {
  require_positive(sigma0, "sigma0");
  if (sigma1 < 0.0 || !std::isfinite(sigma1))
    throw ValidationError("sigma1 must be >= 0");
  if (!std::isfinite(x0)) throw ValidationError("x0 must be finite");
}

DahlParams::DahlParams(double rho_, double Fc_, double w0_) : rho(rho_), Fc(Fc_), w0(w0_) {
  require_positive(rho, "rho");
  require_positive(Fc, "Fc");
  if (!(w0 >= -1.0 && w0 <= 1.0))
    throw ValidationError("w0 must lie in [-1, 1]");
}

double eval_g(const MacroDamping& g, double nu) { return g(nu); }

double lugre_rhs(const ModelParams& p, double gamma, double z, double udot) {
  return -p.sigma0 * std::abs(udot) / p.g(udot / gamma) * z + udot;
}

double lugre_output(const ModelParams& p, double gamma, double z, double zdot, double udot) {
  return p.sigma0 * z + p.sigma1 / gamma * zdot + p.f(udot / gamma);
}

ModelParams dahl_to_lugre(const DahlParams& d) {
  const double sigma0 = d.rho * d.Fc;
  return ModelParams(sigma0, 0.0, MacroDamping::constant(d.Fc), VelocityMap::zero(),
                     d.Fc * d.w0 / sigma0);
}

}  // namespace hystlab
