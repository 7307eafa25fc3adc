#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fastesc/extreal.hpp"

namespace fastesc {

using Complex = std::complex<double>;

enum class Family { half_exp, scaled_exp, pure_exp, baker_product };

// A member of one of the built-in transcendental families. All of them have
// nonnegative Taylor coefficients, so the maximum modulus on |z| = r is
// attained on the positive real axis: M(r) = f(r).
//
//   half_exp       f(z) = c z e^z         (default c = 1/2)
//   scaled_exp     f(z) = lambda e^z
//   pure_exp       f(z) = e^z
//   baker_product  f(z) = C z^2 prod_k (1 + z/a_k), a_k > 0 increasing
struct FunctionSpec {
    Family family = Family::half_exp;
    double coefficient = 0.5;    // half_exp c
    double lambda = 0.25;        // scaled_exp
    double prefactor = 0.5;      // baker C
    std::vector<double> zeros;   // baker a_k

    static FunctionSpec half_exp(double c = 0.5);
    static FunctionSpec scaled_exp(double lambda = 0.25);
    static FunctionSpec pure_exp();
    static FunctionSpec baker(double C, std::vector<double> a);

    // Parse "half_exp", "pure_exp", "scaled_exp", "baker_product" with
    // default parameters.
    static FunctionSpec by_name(const std::string& name);

    bool fixes_origin() const {
        return family == Family::half_exp || family == Family::baker_product;
    }
    std::string name() const;
    void validate() const;  // throws std::invalid_argument on bad parameters
};

// Log-polar point: |w| as a signed log plus an argument in (-pi, pi].
// `approx` is set once an evaluation step can no longer be trusted to full
// precision (dominant-term expansion, or argument reduction past 2^53) and
// is inherited by everything downstream.
struct LogPolar {
    LogReal log_modulus;
    double argument = 0.0;
    bool approx = false;
};

// Plain complex evaluation. Throws std::range_error when |f(z)| would
// overflow a double; the caller is expected to move to eval_log.
Complex eval(const FunctionSpec& f, Complex z);

// Log-polar evaluation, total. Uses the exact family formulas while e^lm is
// representable and the dominant-term expansion beyond, flagging the result.
LogPolar eval_log(const FunctionSpec& f, const LogPolar& z);

// phi(t) = log M(e^t): the log-log profile of the maximum modulus. Exact in
// double range, dominant-term in level-index form beyond. Strictly
// increasing and convex.
LogReal log_max_modulus(const FunctionSpec& f, const LogReal& t);

// log|f(0)|: the floor of M^{-1}'s domain (-inf for families fixing 0).
LogReal log_abs_f0(const FunctionSpec& f);

LogPolar to_log_polar(Complex z);

}  // namespace fastesc
