#include "ramicalc/plf.hpp"

#include <algorithm>
#include <set>

#include "ramicalc/error.hpp"

namespace ramicalc {

namespace {

Rational chord_slope(const Breakpoint& a, const Breakpoint& b)
{
    return (b.y - a.y) / (b.x - a.x);
}

// Drops every breakpoint after the first whose two adjacent slopes agree.
std::vector<Breakpoint> canonical_points(const std::vector<Breakpoint>& pts, const Rational& terminal)
{
    std::vector<Breakpoint> out;
    out.reserve(pts.size());
    out.push_back(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Rational left = chord_slope(out.back(), pts[i]);
        const Rational right = i + 1 < pts.size() ? chord_slope(pts[i], pts[i + 1]) : terminal;
        if (left != right) {
            out.push_back(pts[i]);
        }
    }
    return out;
}

}  // namespace

PLFunction::PLFunction(std::vector<Breakpoint> points, Rational terminal_slope)
    : terminal_slope_(std::move(terminal_slope))
{
    if (points.empty()) {
        throw DomainError("piecewise-linear function needs at least one breakpoint");
    }
    if (points.front().x.sign() < 0) {
        throw DomainError("domain start " + points.front().x.str() + " is negative");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].x <= points[i - 1].x) {
            throw DomainError("breakpoint abscissae must be strictly increasing");
        }
    }
    points_ = canonical_points(points, terminal_slope_);
}

PLFunction PLFunction::identity(const Rational& start)
{
    return PLFunction({{start, start}}, Rational(1));
}

PLFunction PLFunction::affine(const Rational& start, const Rational& value, const Rational& slope)
{
    return PLFunction({{start, value}}, slope);
}

std::size_t PLFunction::segment_index(const Rational& x) const
{
    if (x < domain_start()) {
        throw DomainError("abscissa " + x.str() + " lies below the domain start " + domain_start().str());
    }
    const auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                     [](const Rational& v, const Breakpoint& b) { return v < b.x; });
    return static_cast<std::size_t>(it - points_.begin()) - 1;
}

Rational PLFunction::operator()(const Rational& x) const
{
    const std::size_t i = segment_index(x);
    return points_[i].y + segment_slope(i) * (x - points_[i].x);
}

Rational PLFunction::segment_slope(std::size_t i) const
{
    if (i + 1 >= points_.size()) {
        return terminal_slope_;
    }
    return chord_slope(points_[i], points_[i + 1]);
}

std::vector<Rational> PLFunction::slopes() const
{
    std::vector<Rational> out;
    out.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        out.push_back(segment_slope(i));
    }
    return out;
}

Rational PLFunction::slope_right(const Rational& x) const
{
    return segment_slope(segment_index(x));
}

Rational PLFunction::slope_left(const Rational& x) const
{
    if (x <= domain_start()) {
        throw DomainError("no left slope at or before the domain start");
    }
    const std::size_t i = segment_index(x);
    if (points_[i].x == x) {
        return segment_slope(i - 1);
    }
    return segment_slope(i);
}

PLFunction invert(const PLFunction& f)
{
    const auto& pts = f.breakpoints();
    for (const Rational& s : f.slopes()) {
        if (s.sign() <= 0) {
            throw NotInvertibleError("function has a segment of slope " + s.str());
        }
    }
    if (f.initial_value().sign() < 0) {
        throw NotInvertibleError("inverse would start at negative abscissa " + f.initial_value().str());
    }
    std::vector<Breakpoint> swapped;
    swapped.reserve(pts.size());
    for (const auto& b : pts) {
        swapped.push_back({b.y, b.x});
    }
    return PLFunction(std::move(swapped), Rational(1) / f.terminal_slope());
}

PLFunction compose(const PLFunction& f, const PLFunction& g)
{
    const auto& gp = g.breakpoints();
    if (g.terminal_slope().sign() < 0) {
        throw DomainError("inner function is unbounded below");
    }
    for (const auto& b : gp) {
        if (b.y < f.domain_start()) {
            throw DomainError("inner value " + b.y.str() + " at " + b.x.str()
                              + " lies below the outer domain start " + f.domain_start().str());
        }
    }

    // Abscissae of g, plus every point where g crosses a breakpoint of f.
    std::set<Rational> xs;
    for (const auto& b : gp) {
        xs.insert(b.x);
    }
    for (std::size_t i = 0; i < gp.size(); ++i) {
        const Rational slope = g.segment_slope(i);
        if (slope.is_zero()) {
            continue;
        }
        const bool last = i + 1 == gp.size();
        for (const auto& u : f.breakpoints()) {
            const Rational x = gp[i].x + (u.x - gp[i].y) / slope;
            if (x > gp[i].x && (last || x < gp[i + 1].x)) {
                xs.insert(x);
            }
        }
    }

    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) {
        pts.push_back({x, f(g(x))});
    }
    const Rational& gs = g.terminal_slope();
    Rational terminal = gs.is_zero() ? Rational(0) : f.terminal_slope() * gs;
    return PLFunction(std::move(pts), std::move(terminal));
}

PLFunction scale_conj(const PLFunction& f, std::int64_t e)
{
    if (e <= 0) {
        throw DomainError("scale factor must be a positive integer, got " + std::to_string(e));
    }
    const Rational factor(e);
    std::vector<Breakpoint> pts;
    pts.reserve(f.breakpoints().size());
    for (const auto& b : f.breakpoints()) {
        pts.push_back({b.x * factor, b.y * factor});
    }
    return PLFunction(std::move(pts), f.terminal_slope());
}

PLFunction max_affine_mean(std::int64_t n, std::span<const AffineTerm> terms)
{
    if (n <= 0) {
        throw DomainError("normalizer must be positive");
    }
    if (terms.empty()) {
        throw DomainError("max-affine mean of an empty term list");
    }
    std::set<Rational> xs{Rational(0)};
    std::int64_t total_a = 0;
    for (const auto& t : terms) {
        if (t.a < 0 || t.b < 0) {
            throw DomainError("max-affine terms must be nonnegative");
        }
        total_a += t.a;
        if (t.a > 0 && t.b > 0) {
            xs.insert(Rational(t.b, t.a));
        }
    }
    const Rational inv_n(Rational(1) / Rational(n));
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) {
        Rational sum(0);
        for (const auto& t : terms) {
            sum += std::max(Rational(t.a) * x, Rational(t.b));
        }
        pts.push_back({x, sum * inv_n});
    }
    return PLFunction(std::move(pts), Rational(total_a) * inv_n);
}

std::vector<SlopeJump> derivative_jumps(const PLFunction& f)
{
    std::vector<SlopeJump> out;
    const auto& pts = f.breakpoints();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        out.push_back({pts[i].x, f.segment_slope(i - 1), f.segment_slope(i)});
    }
    return out;
}

Certification certify(const PLFunction& f)
{
    const auto s = f.slopes();
    Certification c;
    c.convex = std::is_sorted(s.begin(), s.end());
    c.strictly_increasing = std::all_of(s.begin(), s.end(), [](const Rational& v) { return v.sign() > 0; });
    return c;
}

std::optional<Rational> agree_from(const PLFunction& f, const PLFunction& g)
{
    const Rational start = std::max(f.domain_start(), g.domain_start());
    std::set<Rational> xs{start};
    for (const auto* h : {&f, &g}) {
        for (const auto& b : h->breakpoints()) {
            if (b.x > start) {
                xs.insert(b.x);
            }
        }
    }
    const Rational& last = *xs.rbegin();
    if (f.terminal_slope() != g.terminal_slope() || f(last) != g(last)) {
        return std::nullopt;
    }
    // Both functions are affine between consecutive abscissae, so they agree
    // on such an interval iff they agree at both of its ends.
    auto it = xs.rbegin();
    Rational from = *it;
    for (++it; it != xs.rend(); ++it) {
        if (f(*it) != g(*it)) {
            break;
        }
        from = *it;
    }
    return from;
}

}  // namespace ramicalc
