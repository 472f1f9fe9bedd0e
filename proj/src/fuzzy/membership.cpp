#include "vanet/fuzzy/membership.hpp"

#include <cmath>
#include <limits>
#include <charconv>

namespace vanet::fuzzy {

namespace {

void require_finite(std::initializer_list<double> values, const char* shape) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw FisError(std::string(shape) + ": thresholds must be finite");
        }
    }
}

}  // namespace

const char* to_string(MfShape shape) noexcept {
    switch (shape) {
        case MfShape::RampUp: return "ramp";
        case MfShape::Triangle: return "triangle";
        case MfShape::Trapezoid: return "trapezoid";
    }
    return "?";
}

MembershipFunction MembershipFunction::ramp_up(double th1, double th2) {
    require_finite({th1, th2}, "ramp");
    if (!(th1 < th2)) throw FisError("ramp: requires TH1 < TH2");
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {MfShape::RampUp, {th1, th2, inf, inf}, {th1, th2, 0.0, 0.0}};
}

MembershipFunction MembershipFunction::triangle(double a, double b, double c) {
    require_finite({a, b, c}, "triangle");
    if (!(a <= b && b <= c && a < c)) throw FisError("triangle: requires a <= b <= c and a < c");
    return {MfShape::Triangle, {a, b, b, c}, {a, b, c, 0.0}};
}

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
    require_finite({a, b, c, d}, "trapezoid");
    if (!(a <= b && b <= c && c <= d && a < d)) {
        throw FisError("trapezoid: requires a <= b <= c <= d and a < d");
    }
    return {MfShape::Trapezoid, {a, b, c, d}, {a, b, c, d}};
}

double MembershipFunction::operator()(double x) const noexcept {
    const auto [a, b, c, d] = p_;
    if (x < a || x > d) return 0.0;
    if (x < b) return (x - a) / (b - a);
    if (x <= c) return 1.0;
    if (x < d) return (d - x) / (d - c);
    return 0.0;
}

std::size_t MembershipFunction::threshold_count() const noexcept {
    switch (shape_) {
        case MfShape::RampUp: return 2;
        case MfShape::Triangle: return 3;
        case MfShape::Trapezoid: return 4;
    }
    return 0;
}

double MembershipFunction::peak() const noexcept {
    if (shape_ == MfShape::RampUp) return p_[1];
    return 0.5 * (p_[1] + p_[2]);
}

std::string describe(const MembershipFunction& mf) {
    std::string out = to_string(mf.shape());
    char buf[32];
    for (std::size_t i = 0; i < mf.threshold_count(); ++i) {
        const auto res = std::to_chars(buf, buf + sizeof buf, mf.threshold(i));
        out += ' ';
        out.append(buf, res.ptr);
    }
    return out;
}

}  // namespace vanet::fuzzy
