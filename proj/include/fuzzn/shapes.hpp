#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzn/degree.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/numeric.hpp"

namespace fuzzn {

// Declared input range of a shape; evaluation outside it is a DomainError.
struct InputRange {
    double min = 0.0;
    double max = 0.0;
    std::string unit;
};

enum class StepSense { below_is_member, above_is_member };

// Crisp threshold shape. below_is_member maps v < threshold to 1; the
// opposite sense maps v >= threshold to 1, so the two senses partition the
// input axis between them.
struct StepShape {
    double threshold = 0.0;
    StepSense sense = StepSense::below_is_member;
};

struct LinearAnchor {
    double input = 0.0;
    double degree = 0.0;
};

// Piecewise-linear shape: exact at anchors, linear between consecutive
// anchors, constant extension of the endpoint degrees outside the anchor
// span.
struct PiecewiseLinearShape {
    std::vector<LinearAnchor> anchors;
};

class ShapeSpec {
public:
    ShapeSpec() : shape_(StepShape{}) {}

    static ShapeSpec step(double threshold, StepSense sense,
                          std::optional<InputRange> range = std::nullopt) {
        if (!std::isfinite(threshold)) throw InvalidShape("step threshold must be finite");
        ShapeSpec s;
        s.shape_ = StepShape{threshold, sense};
        s.range_ = std::move(range);
        return s;
    }

    static ShapeSpec piecewise(std::vector<LinearAnchor> anchors,
                               std::optional<InputRange> range = std::nullopt) {
        if (anchors.empty()) throw InvalidShape("piecewise shape needs at least one anchor");
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            if (!std::isfinite(anchors[i].input)) {
                throw InvalidShape("piecewise anchor input must be finite");
            }
            if (!is_degree(anchors[i].degree)) {
                throw InvalidShape("piecewise anchor degree out of range [0,1]: " +
                                   render_number(anchors[i].degree));
            }
            if (i > 0 && !(anchors[i - 1].input < anchors[i].input)) {
                throw InvalidShape("piecewise anchors must be strictly increasing in input");
            }
        }
        ShapeSpec s;
        s.shape_ = PiecewiseLinearShape{std::move(anchors)};
        s.range_ = std::move(range);
        return s;
    }

    bool is_step() const { return std::holds_alternative<StepShape>(shape_); }
    bool is_piecewise() const { return std::holds_alternative<PiecewiseLinearShape>(shape_); }
    const StepShape& as_step() const { return std::get<StepShape>(shape_); }
    const PiecewiseLinearShape& as_piecewise() const {
        return std::get<PiecewiseLinearShape>(shape_);
    }

    const std::optional<InputRange>& range() const { return range_; }
    const std::string& input_unit() const {
        static const std::string empty;
        return range_ ? range_->unit : empty;
    }

private:
    std::variant<StepShape, PiecewiseLinearShape> shape_;
    std::optional<InputRange> range_;
};

inline Degree eval_shape(const ShapeSpec& s, double v) {
    if (!std::isfinite(v)) throw DomainError("shape input must be finite");
    if (s.range() && (v < s.range()->min || v > s.range()->max)) {
        throw DomainError("input " + render_number(v) + " outside declared range [" +
                          render_number(s.range()->min) + ", " + render_number(s.range()->max) +
                          "]");
    }
    if (s.is_step()) {
        const auto& st = s.as_step();
        bool member = st.sense == StepSense::below_is_member ? v < st.threshold
                                                             : v >= st.threshold;
        return Degree(member ? 1.0 : 0.0);
    }
    const auto& anchors = s.as_piecewise().anchors;
    if (v <= anchors.front().input) return Degree(anchors.front().degree);
    if (v >= anchors.back().input) return Degree(anchors.back().degree);
    std::size_t hi = 1;
    while (anchors[hi].input < v) ++hi;
    if (anchors[hi].input == v) return Degree(anchors[hi].degree);
    const auto& a = anchors[hi - 1];
    const auto& b = anchors[hi];
    double t = (v - a.input) / (b.input - a.input);
    double d = a.degree + t * (b.degree - a.degree);
    if (!is_degree(d)) {
        throw ShapeError("shape evaluated outside [0,1]: " + render_number(d));
    }
    return Degree(d);
}

// Interval type-2 shape: lower and upper primary envelopes plus a triangular
// secondary profile over [lower(x), upper(x)] whose apex sits at
// lower + apex*(upper - lower) with degree 1 and which is 0 at both interval
// endpoints. primary_grid points (both endpoints included) discretize the
// primary interval when the shape is materialized into a finite set.
class IntervalType2Spec {
public:
    IntervalType2Spec() = default;

    IntervalType2Spec(ShapeSpec lower, ShapeSpec upper, double apex, int primary_grid = 101)
        : lower_(std::move(lower)), upper_(std::move(upper)), apex_(apex),
          primary_grid_(primary_grid) {
        if (!is_degree(apex)) {
            throw InvalidShape("interval type-2 apex out of range [0,1]: " + render_number(apex));
        }
        // Two points minimum, so both interval endpoints appear in the grid.
        if (primary_grid < 2) {
            throw InvalidShape("primary grid must have at least 2 points");
        }
    }

    const ShapeSpec& lower() const { return lower_; }
    const ShapeSpec& upper() const { return upper_; }
    double apex() const { return apex_; }
    int primary_grid() const { return primary_grid_; }

    std::pair<double, double> primary_bounds(double v) const {
        double lo = eval_shape(lower_, v).value();
        double hi = eval_shape(upper_, v).value();
        if (lo > hi) {
            throw InvalidShape("lower envelope exceeds upper envelope at input " +
                               render_number(v));
        }
        return {lo, hi};
    }

    // The discretized primary degrees at input v: primary_grid evenly spaced
    // points across [lower(v), upper(v)], collapsing to a single point when
    // the interval is degenerate.
    std::vector<double> primary_points(double v) const {
        auto [lo, hi] = primary_bounds(v);
        if (lo == hi) return {lo};
        return linear_grid(lo, hi, primary_grid_);
    }

private:
    ShapeSpec lower_;
    ShapeSpec upper_;
    double apex_ = 0.5;
    int primary_grid_ = 101;
};

// Secondary degree of `primary` at input v: the triangular profile value.
// A degenerate interval (lower == upper) concentrates the profile on that
// single primary.
inline Degree eval_interval_type2(const IntervalType2Spec& s, double v, Degree primary) {
    auto [lo, hi] = s.primary_bounds(v);
    double p = primary.value();
    if (lo == hi) return Degree(p == lo ? 1.0 : 0.0);
    if (p < lo || p > hi) return Degree(0.0);
    double a = lo + s.apex() * (hi - lo);
    if (p == a) return Degree(1.0);
    if (p < a) return Degree((p - lo) / (a - lo));
    return Degree((hi - p) / (hi - a));
}

// ---------------------------------------------------------------------------
// The calibrated "young" exemplar family: a crisp cut-off at 40 years, a
// graded curve through (27, 0.9), and an interval type-2 band whose primary
// interval at 27 is [0.57, 0.98].

// Apex parameter of the exemplar's secondary profile, frozen from the
// calibration: with the interval [0.57, 0.98] at age 27, the falling side of
// the triangle passes through (primary 0.88, secondary 0.83) when the apex
// sits at 0.57 + kYoungSecondaryApex * 0.41, i.e. apex = u - (u-p)/s solved
// for (p, s) = (0.88, 0.83).
inline constexpr double kYoungSecondaryApex = 0.7061416397296503;

// Step size 0.01 across [0.57, 0.98] at age 27, so the calibrated pair
// (0.88, 0.83) lands on the discretization.
inline constexpr int kYoungPrimaryGrid = 42;

struct YoungExemplars {
    ShapeSpec crisp;
    ShapeSpec type1;
    IntervalType2Spec type2;
};

inline YoungExemplars young_exemplars() {
    InputRange ages{0.0, 100.0, "years"};
    YoungExemplars y;
    y.crisp = ShapeSpec::step(40.0, StepSense::below_is_member, ages);
    y.type1 = ShapeSpec::piecewise({{0.0, 1.0}, {20.0, 1.0}, {27.0, 0.9}, {45.0, 0.0}}, ages);
    auto lower = ShapeSpec::piecewise(
        {{0.0, 1.0}, {10.0, 1.0}, {27.0, 0.57}, {35.0, 0.2}, {45.0, 0.0}}, ages);
    auto upper = ShapeSpec::piecewise(
        {{0.0, 1.0}, {20.0, 1.0}, {27.0, 0.98}, {40.0, 0.5}, {55.0, 0.0}}, ages);
    y.type2 = IntervalType2Spec(std::move(lower), std::move(upper), kYoungSecondaryApex,
                                kYoungPrimaryGrid);
    return y;
}

// ---------------------------------------------------------------------------
// Plot-data sampling.

struct ShapeSample {
    double input = 0.0;
    Degree degree;
};

struct IntervalSample {
    double input = 0.0;
    Degree primary;
    Degree secondary;
};

inline void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw ArgumentError("sample grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw ArgumentError("sample grid must be strictly increasing");
        }
    }
}

inline std::vector<ShapeSample> sample_shape(const ShapeSpec& s, const std::vector<double>& grid) {
    check_grid(grid);
    std::vector<ShapeSample> rows;
    rows.reserve(grid.size());
    for (double v : grid) rows.push_back({v, eval_shape(s, v)});
    return rows;
}

// One row per (input, discretized primary) pair carrying the secondary
// degree.
inline std::vector<IntervalSample> sample_shape(const IntervalType2Spec& s,
                                                const std::vector<double>& grid) {
    check_grid(grid);
    std::vector<IntervalSample> rows;
    for (double v : grid) {
        for (double p : s.primary_points(v)) {
            Degree primary(p);
            rows.push_back({v, primary, eval_interval_type2(s, v, primary)});
        }
    }
    return rows;
}

}  // namespace fuzzn
