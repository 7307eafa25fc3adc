#include "fastesc/extreal.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fastesc {

namespace {
// exp(x) overflows double just past this point.
constexpr double kExpOverflow = 709.78;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

ExtReal ExtReal::from_real(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("ExtReal::from_real: requires finite x >= 0");
    int level = 0;
    double v = x;
    while (v >= 1.0) {
        v = std::log(v);
        ++level;
    }
    return from_parts(level, v);
}

ExtReal ExtReal::from_parts(int level, double mantissa) {
    ExtReal r;
    r.level_ = level;
    r.mantissa_ = mantissa;
    return r;
}

ExtReal exp_ext(const ExtReal& a) {
    // exp maps [0,1) to [1,e), and exp^L(m) to exp^{L+1}(m): a level increment
    // either way.
    return ExtReal::from_parts(a.level() + 1, a.mantissa());
}

ExtReal log_ext(const ExtReal& a) {
    if (a.level() == 0)
        throw std::domain_error("log_ext: requires value >= 1 (use log_mag for the signed path)");
    return ExtReal::from_parts(a.level() - 1, a.mantissa());
}

int cmp(const ExtReal& a, const ExtReal& b) {
    if (a.level() != b.level()) return a.level() < b.level() ? -1 : 1;
    if (a.mantissa() != b.mantissa()) return a.mantissa() < b.mantissa() ? -1 : 1;
    return 0;
}

double to_double(const ExtReal& a) {
    double v = a.mantissa();
    for (int i = 0; i < a.level(); ++i) {
        if (v > kExpOverflow) return kInf;
        v = std::exp(v);
    }
    return v;
}

ExtReal add_moderate(const ExtReal& t, double b) {
    double v = to_double(t);
    if (std::isfinite(v)) {
        double w = v + b;
        if (w < 0.0) w = 0.0;
        return ExtReal::from_real(w);
    }
    // |b| is below one ulp of the mantissa at this scale.
    return t;
}

ExtReal scale_pos(const ExtReal& t, double a) {
    if (!(a > 0.0)) throw std::domain_error("scale_pos: factor must be positive");
    double v = to_double(t);
    if (std::isfinite(v)) {
        double w = a * v;
        if (std::isfinite(w)) return ExtReal::from_real(w);
    }
    if (t.is_zero()) return t;
    return exp_ext(add_moderate(log_ext(t), std::log(a)));
}

ExtReal pow_ext(const ExtReal& a, double c) {
    if (!std::isfinite(c)) throw std::domain_error("pow_ext: exponent must be finite");
    if (a.is_zero()) {
        if (c <= 0.0) throw std::domain_error("pow_ext: 0^c undefined for c <= 0");
        return a;
    }
    if (a.level() == 0) {
        // value in (0,1): signed log path in plain doubles.
        double w = c * std::log(a.mantissa());
        return exp_mag(LogReal(w));
    }
    ExtReal u = log_ext(a);
    double uv = to_double(u);
    if (std::isfinite(uv)) {
        double w = c * uv;
        if (std::isfinite(w)) return exp_mag(LogReal(w));
    }
    // log(value) is itself out of double range; scale it structurally.
    if (c > 0.0) return exp_ext(scale_pos(u, c));
    if (c == 0.0) return ExtReal::from_real(1.0);
    return ExtReal::from_real(0.0);  // exp of a hugely negative exponent
}

std::string to_string(const ExtReal& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "E(%d,%.17g)", a.level(), a.mantissa());
    return buf;
}

ExtReal ext_from_string(const std::string& s) {
    int level = 0;
    double m = 0.0;
    if (std::sscanf(s.c_str(), "E(%d,%lg)", &level, &m) != 2 || level < 0 || m < 0.0 || m >= 1.0)
        throw std::domain_error("ext_from_string: malformed ExtReal literal: " + s);
    return ExtReal::from_parts(level, m);
}

LogReal::LogReal(double v) {
    if (std::isnan(v)) throw std::domain_error("LogReal: NaN");
    if (v > kPromote) {
        if (std::isinf(v)) {
            d_ = v;  // +inf stays a double and sorts above everything
        } else {
            big_ = ExtReal::from_real(v);
            is_big_ = true;
        }
    } else {
        d_ = v;
    }
}

LogReal LogReal::from_ext(const ExtReal& e) {
    double v = to_double(e);
    if (v <= kPromote) return LogReal(v);
    LogReal r;
    r.big_ = e;
    r.is_big_ = true;
    return r;
}

double LogReal::to_double() const { return is_big_ ? fastesc::to_double(big_) : d_; }

ExtReal LogReal::as_ext() const {
    if (is_big_) return big_;
    if (d_ < 0.0) throw std::domain_error("LogReal::as_ext: negative value");
    return ExtReal::from_real(d_);
}

bool LogReal::operator==(const LogReal& o) const {
    if (is_big_ != o.is_big_) return false;
    return is_big_ ? big_ == o.big_ : d_ == o.d_;
}

bool LogReal::operator<(const LogReal& o) const {
    if (!is_big_ && !o.is_big_) return d_ < o.d_;
    if (is_big_ && o.is_big_) return cmp(big_, o.big_) < 0;
    // One side is big (> kPromote, finite); the other is a double.
    if (is_big_) return o.d_ == kInf;  // big < +inf only
    return d_ != kInf;                 // double < big unless it is +inf
}

ExtReal exp_mag(const LogReal& t) {
    if (t.is_big()) return exp_ext(t.big());
    double v = t.to_double();
    if (v > kExpOverflow) return exp_ext(ExtReal::from_real(v));
    return ExtReal::from_real(std::exp(v));
}

LogReal log_mag(const ExtReal& a) {
    if (a.level() >= 1) return LogReal::from_ext(ExtReal::from_parts(a.level() - 1, a.mantissa()));
    if (a.mantissa() == 0.0) return LogReal(-kInf);
    return LogReal(std::log(a.mantissa()));
}

std::string to_string(const LogReal& v) {
    if (v.is_big()) return to_string(v.big());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.to_double());
    return buf;
}

}  // namespace fastesc
