#include "invcurve/numeric/numeric.hpp"

#include <cmath>
#include <string>

#include "invcurve/error.hpp"

namespace invcurve {

FloatField::FloatField(const VectorField& s) {
  if (s.dimension() != 2) throw Error(ErrorKind::InvalidArgument, "numeric integration is planar");
  if (!s.diff_params().empty()) throw Error(ErrorKind::InvalidArgument, "differential parameters cannot be integrated");
  for (std::size_t i = 0; i < 2; ++i) {
    num_[i] = compile(s.components()[i].numerator());
    den_[i] = compile(s.components()[i].denominator());
  }
}

FloatField::Compiled FloatField::compile(const MultiPoly& p) {
  Compiled out;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw Error(ErrorKind::InvalidArgument, "symbolic coefficient " + c.to_string());
    out.push_back({c.to_double(), e[0], e[1]});
  }
  return out;
}

double FloatField::eval(const Compiled& c, const State2& p) {
  double sum = 0.0;
  for (const auto& t : c) sum += t.coefficient * std::pow(p[0], t.ex) * std::pow(p[1], t.ey);
  return sum;
}

State2 FloatField::operator()(const State2& p) const {
  State2 out{};
  for (std::size_t i = 0; i < 2; ++i) {
    double den = eval(den_[i], p);
    if (den == 0.0) throw Error(ErrorKind::PoleEncountered, "denominator vanishes");
    out[i] = eval(num_[i], p) / den;
  }
  return out;
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Completed: return "COMPLETED";
    case StopReason::Pole: return "POLE";
    case StopReason::NonFinite: return "NON_FINITE";
  }
  return "?";
}

namespace {

bool finite(const State2& p) { return std::isfinite(p[0]) && std::isfinite(p[1]); }

State2 axpy(const State2& p, double h, const State2& k) { return {p[0] + h * k[0], p[1] + h * k[1]}; }

}  // namespace

Trajectory integrate_rk4(const FloatField& s, const State2& start, double t_end, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  if (!finite(start)) throw Error(ErrorKind::NonFiniteState, "non-finite start");
  if (!finite(s(start))) throw Error(ErrorKind::NonFiniteState, "non-finite derivative at the start");
  Trajectory traj;
  traj.step = step;
  traj.times.push_back(0.0);
  traj.states.push_back(start);
  auto steps = static_cast<std::size_t>(std::llround(t_end / step));
  State2 p = start;
  for (std::size_t n = 1; n <= steps; ++n) {
    State2 next;
    try {
      State2 k1 = s(p);
      State2 k2 = s(axpy(p, step / 2, k1));
      State2 k3 = s(axpy(p, step / 2, k2));
      State2 k4 = s(axpy(p, step, k3));
      for (std::size_t i = 0; i < 2; ++i) next[i] = p[i] + step / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleEncountered) throw;
      traj.stop = StopReason::Pole;
      return traj;
    }
    if (!finite(next)) {
      traj.stop = StopReason::NonFinite;
      return traj;
    }
    p = next;
    traj.times.push_back(static_cast<double>(n) * step);
    traj.states.push_back(p);
  }
  return traj;
}

Trajectory integrate_rk4(const VectorField& s, const State2& start, double t_end, double step) {
  return integrate_rk4(FloatField(s), start, t_end, step);
}

double first_integral_drift(const Trajectory& traj, double b, double d) {
  if (traj.states.empty()) return 0.0;
  const State2& p0 = traj.states.front();
  auto sign = [](double v) { return (v > 0) - (v < 0); };
  int sx = sign(p0[0]), sy = sign(p0[1]);
  if (sx == 0 || sy == 0) throw Error(ErrorKind::SignChange, "trajectory starts on an axis");
  auto f = [&](const State2& p) { return p[1] - p[0] + b * std::log(std::abs(p[1])) - d * std::log(std::abs(p[0])); };
  double f0 = f(p0);
  double drift = 0.0;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const State2& p = traj.states[i];
    if (sign(p[0]) != sx || sign(p[1]) != sy) {
      throw Error(ErrorKind::SignChange, "sign change at t = " + std::to_string(traj.times[i]));
    }
    drift = std::max(drift, std::abs(f(p) - f0));
  }
  return drift;
}

}  // namespace invcurve
