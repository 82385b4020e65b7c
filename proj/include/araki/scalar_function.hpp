#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "araki/types.hpp"

namespace araki {

// A real scalar function applied to Hermitian matrices through the
// spectral mapping. Each kind carries its own natural domain; evaluating
// outside it throws DomainError.
class ScalarFunction {
 public:
  struct StepTerm {
    double threshold = 0.0;
    double weight = 0.0;  // >= 0, so step combinations are nonnegative and nondecreasing
  };
  struct TablePoint {
    double x = 0.0;
    double value = 0.0;
  };

  // x^t; domain [0, inf) for t >= 0, (0, inf) for t < 0. 0^0 := 1.
  static ScalarFunction power(double exponent);
  static ScalarFunction exponential();
  static ScalarFunction logarithm();  // domain (0, inf)
  static ScalarFunction constant(double value);
  // sum_k w_k * 1[x >= threshold_k]
  static ScalarFunction step_combination(std::vector<StepTerm> terms);
  // indicator 1[x >= threshold], the single-step special case
  static ScalarFunction indicator(double threshold);
  // 1 - (x / scale)^t with scale > 0; domain (0, inf) for t < 0
  static ScalarFunction shifted_power(double exponent, double scale);
  // values tabulated on a fixed spectrum; defined only at the listed
  // abscissae (matched within match_tol * max(1, |x|))
  static ScalarFunction tabulated(std::vector<TablePoint> points,
                                  double match_tol = 1e-9);

  double operator()(double x) const;
  bool in_domain(double x) const;
  std::string describe() const;

 private:
  struct Power {
    double exponent;
  };
  struct Exp {};
  struct Log {};
  struct Constant {
    double value;
  };
  struct Steps {
    std::vector<StepTerm> terms;
  };
  struct ShiftedPower {
    double exponent;
    double scale;
  };
  struct Table {
    std::vector<TablePoint> points;
    double match_tol;
  };
  using Impl = std::variant<Power, Exp, Log, Constant, Steps, ShiftedPower, Table>;

  explicit ScalarFunction(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

// f evaluated at each point of a spectrum (sorted non-increasing);
// throws DomainError if any point falls outside the domain of f.
RealVector evaluate_on_spectrum(const ScalarFunction& f, const RealVector& spectrum);

// Hypothesis validators. Both work on spectrum/value pairs with the
// spectrum sorted non-increasing; any monotone-consistent assignment on
// the spectrum extends to a monotone function on an interval, which is
// all the trace quantities can see.
bool is_nonneg_nondecreasing(const RealVector& spectrum, const RealVector& values,
                             double slack = 1e-12);
// true when x -> x^s * g(x) is nonnegative and nonincreasing across the spectrum
bool is_power_weighted_nonincreasing(const RealVector& spectrum,
                                     const RealVector& g_values, double s,
                                     double slack = 1e-12);

}  // namespace araki
