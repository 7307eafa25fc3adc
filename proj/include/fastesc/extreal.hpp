#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace fastesc {

// Level-index scalar for magnitudes that grow as towers of exponentials.
// value = exp^level(mantissa) with mantissa in [0,1):
//   level 0 covers [0,1), level 1 covers [1,e), level 2 covers [e,e^e), ...
// The representation is canonical, so ordering is lexicographic on
// (level, mantissa) and agrees with the real ordering.
class ExtReal {
public:
    ExtReal() = default;

    // Canonical form of a finite x >= 0. Throws std::domain_error otherwise.
    static ExtReal from_real(double x);

    // Trusted constructor from already-canonical parts.
    static ExtReal from_parts(int level, double mantissa);

    int level() const { return level_; }
    double mantissa() const { return mantissa_; }
    bool is_zero() const { return level_ == 0 && mantissa_ == 0.0; }

    auto operator<=>(const ExtReal&) const = default;

private:
    int level_ = 0;
    double mantissa_ = 0.0;
};

// exp(value(a)), canonical. In level-index form this is a level increment.
ExtReal exp_ext(const ExtReal& a);

// log(value(a)); requires value(a) >= 1 (level >= 1). Values below 1 have a
// signed logarithm and must go through log_mag instead.
ExtReal log_ext(const ExtReal& a);

// value(a)^c via exp(c * log value(a)), with the scalar multiply performed at
// the first level whose value fits floating range.
ExtReal pow_ext(const ExtReal& a, double c);

// Three-way compare as an int (-1, 0, 1).
int cmp(const ExtReal& a, const ExtReal& b);

// value(a) as a double; +inf once the tower exceeds floating range.
double to_double(const ExtReal& a);

// value(t) + b for moderate |b|. Exact while the value fits a double; beyond
// that b is below the representable mantissa precision and is dropped.
ExtReal add_moderate(const ExtReal& t, double b);

// a * value(t) for a > 0. Exact in double range; beyond that the factor
// becomes a shift of log(value), applied at the first level in range.
ExtReal scale_pos(const ExtReal& t, double a);

// Text form "E(level,mantissa)" with 17 significant digits.
std::string to_string(const ExtReal& a);
ExtReal ext_from_string(const std::string& s);

// Signed scalar with level-index spillover for huge positive values. Used for
// logarithmic quantities (log-moduli, log-radii): these may be negative, and
// only the positive side ever leaves floating range. Values with magnitude
// <= kPromote are held as plain doubles; larger (necessarily positive)
// values are held as ExtReal. +-inf are legal doubles here (log 0 = -inf).
class LogReal {
public:
    static constexpr double kPromote = 1e300;

    LogReal() = default;
    LogReal(double v);  // NOLINT: implicit on purpose, used in formulas
    static LogReal from_ext(const ExtReal& e);

    bool is_big() const { return is_big_; }
    const ExtReal& big() const { return big_; }

    // Value as a double; +inf when past double range.
    double to_double() const;

    // The value as a magnitude; requires value >= 0.
    ExtReal as_ext() const;

    bool operator==(const LogReal& o) const;
    bool operator<(const LogReal& o) const;
    bool operator<=(const LogReal& o) const { return !(o < *this); }
    bool operator>(const LogReal& o) const { return o < *this; }
    bool operator>=(const LogReal& o) const { return !(*this < o); }

private:
    double d_ = 0.0;
    ExtReal big_;
    bool is_big_ = false;
};

// e^t as a magnitude, for any t.
ExtReal exp_mag(const LogReal& t);

// Signed log(value(a)), total for value >= 0: negative for values in (0,1)
// and -inf at 0. This is the escape hatch promised by log_ext's contract.
LogReal log_mag(const ExtReal& a);

std::string to_string(const LogReal& v);

}  // namespace fastesc
