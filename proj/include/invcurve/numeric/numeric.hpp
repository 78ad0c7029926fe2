#pragma once

#include <array>
#include <vector>

#include "invcurve/vectorfield/vectorfield.hpp"

namespace invcurve {

using State2 = std::array<double, 2>;

// A planar field with rational coefficients lowered to doubles.
class FloatField {
 public:
  explicit FloatField(const VectorField& s);

  // throws PoleEncountered where a denominator vanishes
  State2 operator()(const State2& p) const;

 private:
  struct Term {
    double coefficient;
    unsigned ex;
    unsigned ey;
  };
  using Compiled = std::vector<Term>;
  static Compiled compile(const MultiPoly& p);
  static double eval(const Compiled& c, const State2& p);

  std::array<Compiled, 2> num_;
  std::array<Compiled, 2> den_;
};

enum class StopReason { Completed, Pole, NonFinite };
const char* stop_reason_name(StopReason r);

struct Trajectory {
  std::vector<double> times;
  std::vector<State2> states;
  double step = 0.0;
  StopReason stop = StopReason::Completed;
};

// classical fixed-step RK4 from t = 0; stops early on a pole or overflow
Trajectory integrate_rk4(const FloatField& s, const State2& start, double t_end, double step);
Trajectory integrate_rk4(const VectorField& s, const State2& start, double t_end, double step);

// max |f(p_t) - f(p_0)| for f = y - x + b log|y| - d log|x|
double first_integral_drift(const Trajectory& traj, double b, double d);

}  // namespace invcurve
