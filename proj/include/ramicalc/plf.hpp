#ifndef RAMICALC_PLF_HPP
#define RAMICALC_PLF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramicalc/rational.hpp"

namespace ramicalc {

struct Breakpoint {
    Rational x;
    Rational y;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on a half-line [x0, oo), x0 >= 0.
///
/// Stored as breakpoints (x0, y0) < (x1, y1) < ... plus the slope on the
/// final ray. The constructor canonicalizes: a breakpoint is kept only if
/// the slopes on its two sides differ, so equality of values is equality
/// of functions. Functions built from the ramification data all live on
/// [0, oo); inverses live on [f(0), oo).
class PLFunction {
public:
    PLFunction(std::vector<Breakpoint> points, Rational terminal_slope);

    static PLFunction identity(const Rational& start = Rational(0));
    static PLFunction affine(const Rational& start, const Rational& value, const Rational& slope);

    const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
    const Rational& terminal_slope() const noexcept { return terminal_slope_; }
    const Rational& domain_start() const noexcept { return points_.front().x; }
    const Rational& initial_value() const noexcept { return points_.front().y; }

    /// Throws DomainError below the domain start.
    Rational operator()(const Rational& x) const;

    /// Slope of segment i; segment n-1 is the terminal ray.
    Rational segment_slope(std::size_t i) const;
    std::vector<Rational> slopes() const;

    /// One-sided slopes at x. slope_left is undefined at the domain start.
    Rational slope_right(const Rational& x) const;
    Rational slope_left(const Rational& x) const;

    friend bool operator==(const PLFunction&, const PLFunction&) = default;

private:
    std::size_t segment_index(const Rational& x) const;

    std::vector<Breakpoint> points_;
    Rational terminal_slope_;
};

inline Rational eval(const PLFunction& f, const Rational& x)
{
    return f(x);
}

/// Inverse of a strictly increasing function, defined on [f(x0), oo).
PLFunction invert(const PLFunction& f);

/// (f o g)(x) = f(g(x)); g must map its domain into the domain of f.
PLFunction compose(const PLFunction& f, const PLFunction& g);

/// x -> e * f(x / e). Slopes are unchanged, breakpoints scale by e.
PLFunction scale_conj(const PLFunction& f, std::int64_t e);

struct AffineTerm {
    std::int64_t a;  // coefficient of x
    std::int64_t b;  // constant floor
};

/// x -> N^-1 * sum_i max(a_i x, b_i) on [0, oo).
PLFunction max_affine_mean(std::int64_t n, std::span<const AffineTerm> terms);

struct SlopeJump {
    Rational x;
    Rational left_slope;
    Rational right_slope;

    friend bool operator==(const SlopeJump&, const SlopeJump&) = default;
};

std::vector<SlopeJump> derivative_jumps(const PLFunction& f);

struct Certification {
    bool convex = false;
    bool strictly_increasing = false;
};

Certification certify(const PLFunction& f);

/// Least x0 >= max(domain starts) with f = g on [x0, oo), or nullopt when
/// the two functions differ on every terminal ray.
std::optional<Rational> agree_from(const PLFunction& f, const PLFunction& g);

}  // namespace ramicalc

#endif
