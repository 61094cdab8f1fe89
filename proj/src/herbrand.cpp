#include "ramicalc/herbrand.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ramicalc/error.hpp"

namespace ramicalc {

PLFunction herbrand_function(const PLFunction& phi, const PLFunction& sigma)
{
    if (sigma.initial_value() < phi.initial_value()) {
        throw DomainError("sigma(0) = " + sigma.initial_value().str() + " lies below phi(0) = "
                          + phi.initial_value().str());
    }
    return compose(invert(phi), sigma);
}

HerbrandBundle::HerbrandBundle(EndoClassProfile profile, GaloisDecomposition decomposition)
    : profile_(std::move(profile)),
      decomposition_(std::move(decomposition)),
      phi_(structure_function(profile_)),
      sigma_(sigma_function(decomposition_)),
      psi_(herbrand_function(phi_, sigma_))
{
    if (!psi_(Rational(0)).is_zero()) {
        throw ValidationError("psi(0) = 0", "sigma(0) = " + sigma_.initial_value().str() + " but phi(0) = "
                                                + phi_.initial_value().str());
    }
    const auto from = agree_from(psi_, PLFunction::identity());
    if (!from || *from > profile_.m()) {
        throw ValidationError("psi(x) = x for x >= m",
                              "psi departs from the identity beyond m = " + profile_.m().str());
    }
    std::set<Rational> d;
    for (const auto* f : {&psi_, &sigma_}) {
        for (const auto& j : derivative_jumps(*f)) {
            d.insert(j.x);
        }
    }
    exceptional_.assign(d.begin(), d.end());
}

std::vector<Rational> HerbrandBundle::silent_sigma_jumps() const
{
    std::set<Rational> psi_jumps;
    for (const auto& j : derivative_jumps(psi_)) {
        psi_jumps.insert(j.x);
    }
    std::vector<Rational> out;
    for (const auto& j : derivative_jumps(sigma_)) {
        if (!psi_jumps.contains(j.x)) {
            out.push_back(j.x);
        }
    }
    return out;
}

Rational transfer_radius(const PLFunction& psi, const Rational& eps)
{
    if (eps.sign() <= 0) {
        throw DomainError("ramification radius must be positive");
    }
    return psi(eps);
}

TransferReport ball_transfer_check(const UltrametricTable& delta_table, const UltrametricTable& a_table,
                                   const std::map<std::string, PLFunction>& psi_per_label)
{
    if (delta_table.size() != a_table.size()) {
        throw DomainError("tables have different sizes");
    }
    std::vector<std::size_t> a_index;
    std::vector<const PLFunction*> psis;
    for (const auto& label : delta_table.labels()) {
        const auto j = a_table.index_of(label);
        const auto it = psi_per_label.find(label);
        if (!j || it == psi_per_label.end()) {
            throw DomainError("label " + label + " missing from the A table or the psi map");
        }
        a_index.push_back(*j);
        psis.push_back(&it->second);
    }

    std::set<Rational> anchors;
    for (const auto* psi : psis) {
        for (const auto& j : derivative_jumps(*psi)) {
            anchors.insert(j.x);
        }
    }
    for (const auto& row : delta_table.matrix()) {
        anchors.insert(row.begin(), row.end());
    }
    anchors.erase(Rational(0));
    std::set<Rational> grid(anchors);
    if (anchors.empty()) {
        grid.insert(Rational(1));
    } else {
        grid.insert(*anchors.begin() / Rational(2));
        grid.insert(*anchors.rbegin() + Rational(1));
        for (auto it = anchors.begin(); std::next(it) != anchors.end(); ++it) {
            grid.insert((*it + *std::next(it)) / Rational(2));
        }
    }

    TransferReport report;
    const std::size_t n = delta_table.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) {
                continue;
            }
            const Rational& delta = delta_table(x, y);
            const Rational& a = a_table(a_index[x], a_index[y]);
            for (const auto& eps : grid) {
                const Rational radius = (*psis[x])(eps);
                if ((a < radius) != (delta < eps)) {
                    report.violations.push_back({delta_table.labels()[x], delta_table.labels()[y], eps, true});
                }
                if ((a <= radius) != (delta <= eps)) {
                    report.violations.push_back({delta_table.labels()[x], delta_table.labels()[y], eps, false});
                }
            }
        }
    }
    return report;
}

bool psi_inverse_agreement(const PLFunction& psi1, const PLFunction& psi2, const Rational& a)
{
    const auto from = agree_from(invert(psi1), invert(psi2));
    return from && *from <= a;
}

PLFunction tame_lift_herbrand(const PLFunction& psi, std::int64_t e)
{
    return scale_conj(psi, e);
}

namespace {

struct Point {
    Rational x;
    Rational y;
};

Rational chord(const Point& a, const Point& b)
{
    return (b.y - a.y) / (b.x - a.x);
}

InterpolationOutcome verify_samples(const std::vector<TwistSample>& samples, const std::set<Rational>& excluded,
                                    const PLFunction& reference)
{
    InterpolationOutcome out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Rational x = samples[i].abscissa();
        if (excluded.contains(x)) {
            out.skipped.push_back(i);
            continue;
        }
        const Rational expected = reference(x);
        if (samples[i].ordinate() != expected) {
            out.mismatched.push_back(i);
            out.issues.push_back("sample " + std::to_string(i) + " at " + x.str() + ": value/e = "
                                 + samples[i].ordinate().str() + ", reference gives " + expected.str());
        }
    }
    return out;
}

// Maximal runs of consecutive chords of equal slope, as [first, last] chord
// indices.
std::vector<std::pair<std::size_t, std::size_t>> chord_runs(const std::vector<Point>& pts)
{
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t start = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (chord(pts[i], pts[i + 1]) != chord(pts[start], pts[start + 1])) {
            runs.emplace_back(start, i - 1);
            start = i;
        }
    }
    runs.emplace_back(start, pts.size() - 2);
    return runs;
}

InterpolationOutcome reconstruct(const std::vector<TwistSample>& samples, const Rational& m,
                                 const std::set<Rational>& excluded)
{
    std::map<Rational, Rational> by_x;
    for (const auto& s : samples) {
        const Rational x = s.abscissa();
        if (excluded.contains(x)) {
            throw DomainError("sample at excluded abscissa " + x.str());
        }
        const auto [it, inserted] = by_x.emplace(x, s.ordinate());
        if (!inserted && it->second != s.ordinate()) {
            throw InconsistentDataError("samples at " + x.str() + " disagree: " + it->second.str() + " vs "
                                        + s.ordinate().str());
        }
    }

    InterpolationOutcome out;
    for (const auto& [x, y] : by_x) {
        if (x >= m && x != y) {
            out.issues.push_back("sample at " + x.str() + " is beyond m but off the identity");
        }
    }
    if (!out.ok()) {
        return out;
    }
    by_x.emplace(Rational(0), Rational(0));
    for (int i = 0; i < 3; ++i) {
        by_x.emplace(m + Rational(i), m + Rational(i));
    }
    if (by_x.at(Rational(0)) != Rational(0)) {
        out.issues.push_back("sample at 0 has nonzero value");
        return out;
    }

    std::vector<Point> pts;
    for (const auto& [x, y] : by_x) {
        pts.push_back({x, y});
    }
    const auto runs = chord_runs(pts);
    auto certified = [](const std::pair<std::size_t, std::size_t>& r) { return r.second > r.first; };

    std::vector<Breakpoint> corners{{pts.front().x, pts.front().y}};
    std::size_t i = 0;
    if (!certified(runs[0])) {
        out.issues.push_back("first piece witnessed by fewer than three points on ["
                             + pts[0].x.str() + ", " + pts[2].x.str() + "]");
        return out;
    }
    while (i + 1 < runs.size()) {
        const auto& cur = runs[i];
        const auto& next = runs[i + 1];
        const std::size_t end_pt = cur.second + 1;
        if (certified(next)) {
            corners.push_back({pts[end_pt].x, pts[end_pt].y});
            ++i;
            continue;
        }
        if (i + 2 >= runs.size() || !certified(runs[i + 2])) {
            out.issues.push_back("too sparse beyond " + pts[end_pt].x.str()
                                 + ": no piece is witnessed by three collinear samples");
            return out;
        }
        // A single crossing chord: the two lines must meet inside it.
        const Rational s1 = chord(pts[cur.first], pts[cur.first + 1]);
        const auto& after = runs[i + 2];
        const Rational s2 = chord(pts[after.first], pts[after.first + 1]);
        const Point& p = pts[end_pt];
        const Point& q = pts[end_pt + 1];
        if (s1 == s2) {
            out.issues.push_back("parallel pieces around (" + p.x.str() + ", " + q.x.str() + ")");
            return out;
        }
        const Rational x = (q.y - p.y + s1 * p.x - s2 * q.x) / (s1 - s2);
        if (x <= p.x || x >= q.x) {
            out.issues.push_back("pieces on either side of (" + p.x.str() + ", " + q.x.str()
                                 + ") do not meet inside that gap");
            return out;
        }
        corners.push_back({p.x, p.y});
        corners.push_back({x, p.y + s1 * (x - p.x)});
        corners.push_back({q.x, q.y});
        i += 2;
    }
    corners.push_back({pts.back().x, pts.back().y});
    std::vector<Breakpoint> unique;
    for (auto& c : corners) {
        if (unique.empty() || unique.back().x != c.x) {
            unique.push_back(std::move(c));
        }
    }
    out.psi = PLFunction(std::move(unique), Rational(1));
    return out;
}

}  // namespace

InterpolationOutcome interpolate_psi(const std::vector<TwistSample>& samples, const Rational& m,
                                     const std::vector<Rational>& exceptional,
                                     const std::optional<PLFunction>& reference)
{
    for (const auto& s : samples) {
        if (s.e < 1 || s.k < 1 || s.value.sign() <= 0) {
            throw DomainError("twist samples need e >= 1, k >= 1 and a positive value");
        }
    }
    if (m.sign() < 0) {
        throw DomainError("level must be nonnegative");
    }
    const std::set<Rational> excluded(exceptional.begin(), exceptional.end());
    if (reference) {
        return verify_samples(samples, excluded, *reference);
    }
    return reconstruct(samples, m, excluded);
}

LevelDecomposition decompose_m(const Rational& m, std::int64_t p, std::int64_t r)
{
    if (m.sign() <= 0) {
        throw DomainError("level must be positive");
    }
    if (!is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
    if (r < 0) {
        throw DomainError("r must be nonnegative");
    }
    const mpz_class pz(static_cast<long>(p));
    mpz_class num = m.numerator();
    mpz_class den = m.denominator();
    std::int64_t v = 0;
    while (num % pz == 0) {
        num /= pz;
        ++v;
    }
    while (den % pz == 0) {
        den /= pz;
        --v;
    }
    if (den != 1) {
        throw DomainError("m = " + m.str() + " has a denominator prime other than " + std::to_string(p));
    }
    return {num, v + r};
}

BoundarySlopeReport boundary_slopes_check(const PLFunction& psi, std::int64_t p, std::int64_t r, const Rational& m)
{
    BoundarySlopeReport rep;
    if (r == 0) {
        rep.expected_first = Rational(1);
        rep.expected_last = Rational(1);
    } else {
        const auto [a, t] = decompose_m(m, p, r);
        if (t >= r || t < 0) {
            throw DomainError("m = " + m.str() + " gives t = " + std::to_string(t)
                              + " outside [0, r); twist by a character to lower the level first");
        }
        mpz_class pr;
        mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r));
        mpz_class prt;
        mpz_ui_pow_ui(prt.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r - t));
        rep.expected_first = Rational(mpq_class(1, pr));
        rep.expected_last = Rational(mpq_class(prt));
    }
    rep.first_slope = psi.slope_right(psi.domain_start());
    rep.last_slope = m > psi.domain_start() ? psi.slope_left(m) : psi.slope_right(m);
    if (rep.first_slope != rep.expected_first) {
        rep.failures.push_back("slope near 0 is " + rep.first_slope.str() + ", expected "
                               + rep.expected_first.str());
    }
    if (rep.last_slope != rep.expected_last) {
        rep.failures.push_back("slope just below m is " + rep.last_slope.str() + ", expected "
                               + rep.expected_last.str());
    }
    return rep;
}

EssentialTamenessReport essentially_tame_check(const EndoClassProfile& profile, const PLFunction& psi)
{
    return {psi == PLFunction::identity(), std::gcd(profile.e(), profile.p()) == 1};
}

}  // namespace ramicalc
