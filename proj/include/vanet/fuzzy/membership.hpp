#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace vanet::fuzzy {

/// Raised for malformed fuzzy definitions (thresholds, labels, rules).
class FisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MfShape { RampUp, Triangle, Trapezoid };

const char* to_string(MfShape shape) noexcept;

/// Piecewise-linear membership function.
///
/// RampUp(th1, th2) saturates at 1 above th2. Triangle(a, b, c) is stored as the
/// degenerate trapezoid (a, b, b, c). A term whose left feet coincide (a == b) is a
/// left shoulder and evaluates to 1 at a; likewise c == d is a right shoulder.
/// Thresholds are validated on construction so evaluation never fails.
class MembershipFunction {
public:
    static MembershipFunction ramp_up(double th1, double th2);
    static MembershipFunction triangle(double a, double b, double c);
    static MembershipFunction trapezoid(double a, double b, double c, double d);

    double operator()(double x) const noexcept;

    MfShape shape() const noexcept { return shape_; }

    /// Thresholds as declared: 2 for RampUp, 3 for Triangle, 4 for Trapezoid.
    std::size_t threshold_count() const noexcept;
    double threshold(std::size_t i) const { return declared_.at(i); }

    /// Closed interval where the function is nonzero (RampUp extends to +inf).
    double support_lo() const noexcept { return p_[0]; }
    double support_hi() const noexcept { return p_[3]; }

    /// Interval where the function equals 1, and its midpoint.
    double core_lo() const noexcept { return p_[1]; }
    double core_hi() const noexcept { return p_[2]; }
    double peak() const noexcept;

    bool operator==(const MembershipFunction&) const = default;

private:
    MembershipFunction(MfShape shape, std::array<double, 4> points, std::array<double, 4> declared)
        : shape_(shape), p_(points), declared_(declared) {}

    MfShape shape_;
    std::array<double, 4> p_;         // normalized trapezoid feet
    std::array<double, 4> declared_;  // thresholds as given
};

std::string describe(const MembershipFunction& mf);

}  // namespace vanet::fuzzy
