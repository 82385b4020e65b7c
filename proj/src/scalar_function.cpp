#include "araki/scalar_function.hpp"

#include <cmath>
#include <sstream>

#include "araki/errors.hpp"

namespace araki {

ScalarFunction ScalarFunction::power(double exponent) {
  return ScalarFunction(Power{exponent});
}

ScalarFunction ScalarFunction::exponential() { return ScalarFunction(Exp{}); }

ScalarFunction ScalarFunction::logarithm() { return ScalarFunction(Log{}); }

ScalarFunction ScalarFunction::constant(double value) {
  return ScalarFunction(Constant{value});
}

ScalarFunction ScalarFunction::step_combination(std::vector<StepTerm> terms) {
  for (const auto& t : terms)
    if (!(t.weight >= 0.0))
      throw DomainError("step_combination: weights must be >= 0");
  return ScalarFunction(Steps{std::move(terms)});
}

ScalarFunction ScalarFunction::indicator(double threshold) {
  return step_combination({StepTerm{threshold, 1.0}});
}

ScalarFunction ScalarFunction::shifted_power(double exponent, double scale) {
  if (!(scale > 0.0)) throw DomainError("shifted_power: scale must be > 0");
  return ScalarFunction(ShiftedPower{exponent, scale});
}

ScalarFunction ScalarFunction::tabulated(std::vector<TablePoint> points,
                                         double match_tol) {
  if (points.empty()) throw DomainError("tabulated: empty table");
  return ScalarFunction(Table{std::move(points), match_tol});
}

namespace {

// 0^0 := 1, matching the matrix convention A^0 = I on the kernel.
double pow_with_zero_convention(double x, double t) {
  if (t == 0.0) return 1.0;
  return std::pow(x, t);
}

const ScalarFunction::TablePoint* find_point(
    const std::vector<ScalarFunction::TablePoint>& points, double x,
    double match_tol) {
  const ScalarFunction::TablePoint* best = nullptr;
  double best_dist = 0.0;
  for (const auto& p : points) {
    const double d = std::abs(p.x - x);
    if (d <= match_tol * std::max(1.0, std::abs(x)) &&
        (best == nullptr || d < best_dist)) {
      best = &p;
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

double ScalarFunction::operator()(double x) const {
  if (!in_domain(x))
    throw DomainError(describe() + ": argument " + std::to_string(x) +
                      " outside domain");
  struct Eval {
    double x;
    double operator()(const Power& p) const {
      return pow_with_zero_convention(x, p.exponent);
    }
    double operator()(const Exp&) const { return std::exp(x); }
    double operator()(const Log&) const { return std::log(x); }
    double operator()(const Constant& c) const { return c.value; }
    double operator()(const Steps& s) const {
      double acc = 0.0;
      for (const auto& t : s.terms)
        if (x >= t.threshold) acc += t.weight;
      return acc;
    }
    double operator()(const ShiftedPower& p) const {
      return 1.0 - pow_with_zero_convention(x / p.scale, p.exponent);
    }
    double operator()(const Table& t) const {
      return find_point(t.points, x, t.match_tol)->value;
    }
  };
  return std::visit(Eval{x}, impl_);
}

bool ScalarFunction::in_domain(double x) const {
  struct InDomain {
    double x;
    bool operator()(const Power& p) const {
      return p.exponent >= 0.0 ? x >= 0.0 : x > 0.0;
    }
    bool operator()(const Exp&) const { return true; }
    bool operator()(const Log&) const { return x > 0.0; }
    bool operator()(const Constant&) const { return true; }
    bool operator()(const Steps&) const { return true; }
    bool operator()(const ShiftedPower& p) const {
      return p.exponent >= 0.0 ? x >= 0.0 : x > 0.0;
    }
    bool operator()(const Table& t) const {
      return find_point(t.points, x, t.match_tol) != nullptr;
    }
  };
  return std::isfinite(x) && std::visit(InDomain{x}, impl_);
}

std::string ScalarFunction::describe() const {
  struct Describe {
    std::string operator()(const Power& p) const {
      std::ostringstream os;
      os << "power(" << p.exponent << ")";
      return os.str();
    }
    std::string operator()(const Exp&) const { return "exp"; }
    std::string operator()(const Log&) const { return "log"; }
    std::string operator()(const Constant& c) const {
      std::ostringstream os;
      os << "constant(" << c.value << ")";
      return os.str();
    }
    std::string operator()(const Steps& s) const {
      std::ostringstream os;
      os << "steps[" << s.terms.size() << "]";
      return os.str();
    }
    std::string operator()(const ShiftedPower& p) const {
      std::ostringstream os;
      os << "shifted_power(" << p.exponent << "," << p.scale << ")";
      return os.str();
    }
    std::string operator()(const Table& t) const {
      std::ostringstream os;
      os << "tabulated[" << t.points.size() << "]";
      return os.str();
    }
  };
  return std::visit(Describe{}, impl_);
}

RealVector evaluate_on_spectrum(const ScalarFunction& f, const RealVector& spectrum) {
  RealVector out(spectrum.size());
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) out[i] = f(spectrum[i]);
  return out;
}

bool is_nonneg_nondecreasing(const RealVector& spectrum, const RealVector& values,
                             double slack) {
  if (spectrum.size() != values.size())
    throw ShapeMismatch("validator: spectrum/value length mismatch");
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (!(values[i] >= -slack)) return false;
  // spectrum is non-increasing, so consecutive pairs decide monotone consistency
  for (Eigen::Index i = 0; i + 1 < spectrum.size(); ++i) {
    if (!(values[i] >= values[i + 1] - slack)) return false;
    if (spectrum[i] == spectrum[i + 1] &&
        !(values[i + 1] >= values[i] - slack))
      return false;  // equal points must carry equal values
  }
  return true;
}

bool is_power_weighted_nonincreasing(const RealVector& spectrum,
                                     const RealVector& g_values, double s,
                                     double slack) {
  if (spectrum.size() != g_values.size())
    throw ShapeMismatch("validator: spectrum/value length mismatch");
  RealVector weighted(spectrum.size());
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double xs = (s == 0.0) ? 1.0 : std::pow(spectrum[i], s);
    weighted[i] = xs * g_values[i];
  }
  for (Eigen::Index i = 0; i < weighted.size(); ++i)
    if (!(weighted[i] >= -slack)) return false;
  for (Eigen::Index i = 0; i + 1 < spectrum.size(); ++i) {
    if (!(weighted[i] <= weighted[i + 1] + slack)) return false;
    if (spectrum[i] == spectrum[i + 1] &&
        !(weighted[i + 1] <= weighted[i] + slack))
      return false;
  }
  return true;
}

}  // namespace araki
