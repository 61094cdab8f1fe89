#include "ramicalc/endo_class.hpp"

#include <algorithm>
#include <numeric>

#include "ramicalc/error.hpp"

namespace ramicalc {

namespace {

void require(bool ok, const char* invariant, const std::string& detail)
{
    if (!ok) {
        throw ValidationError(invariant, detail);
    }
}

// Value of c/d^2 + x/d.
Rational level_value(const TowerLevel& lv, const Rational& x)
{
    const Rational d(lv.d);
    return Rational(lv.c) / (d * d) + x / d;
}

bool is_power_of(std::int64_t n, std::int64_t p)
{
    while (n > 1 && n % p == 0) {
        n /= p;
    }
    return n == 1;
}

}  // namespace

EndoClassProfile::EndoClassProfile(std::int64_t p, std::int64_t deg, std::int64_t e, std::int64_t f, Rational m,
                                   std::optional<Rational> k0, std::vector<TowerLevel> tower, bool trivial)
    : p_(p), deg_(deg), e_(e), f_(f), m_(std::move(m)), k0_(std::move(k0)), tower_(std::move(tower)), trivial_(trivial)
{
    validate();
}

EndoClassProfile EndoClassProfile::trivial(std::int64_t p)
{
    return EndoClassProfile(p, 1, 1, 1, Rational(0), std::nullopt, {}, true);
}

void EndoClassProfile::validate() const
{
    require(is_prime(p_), "p is prime", "p = " + std::to_string(p_));
    if (trivial_) {
        require(deg_ == 1 && e_ == 1 && f_ == 1, "trivial class has deg = e = f = 1",
                "deg = " + std::to_string(deg_) + ", e = " + std::to_string(e_) + ", f = " + std::to_string(f_));
        require(m_.is_zero(), "trivial class has m = 0", "m = " + m_.str());
        require(tower_.empty(), "trivial class has no jumps", std::to_string(tower_.size()) + " levels given");
        require(!k0_, "k0 absent iff deg = 1", "trivial class with k0 = " + (k0_ ? k0_->str() : ""));
        return;
    }

    require(deg_ >= 1 && e_ >= 1 && f_ >= 1, "positive degree invariants", "deg, e and f must be positive");
    require(e_ * f_ == deg_, "e f = deg",
            std::to_string(e_) + " * " + std::to_string(f_) + " != " + std::to_string(deg_));
    require(m_.sign() > 0, "m > 0", "m = " + m_.str());
    require(mpz_class(static_cast<long>(e_)) % m_.denominator() == 0, "denominator of m divides e",
            "m = " + m_.str() + ", e = " + std::to_string(e_));
    require(!tower_.empty(), "nonempty tower", "nontrivial class needs at least one jump");

    for (std::size_t i = 0; i < tower_.size(); ++i) {
        const auto& lv = tower_[i];
        const std::string where = "level " + std::to_string(i);
        require(lv.jump.sign() > 0 && lv.jump <= m_, "jumps lie in (0, m]", where + " jump " + lv.jump.str());
        require(i == 0 || tower_[i - 1].jump < lv.jump, "jumps strictly increasing", where);
        require(lv.d >= 1 && lv.ex >= 1, "positive level invariants", where);
        require(lv.d % lv.ex == 0, "ex divides d", where);
        require(lv.c >= 0, "c nonnegative", where + " c = " + std::to_string(lv.c));
        if (i > 0) {
            const auto& prev = tower_[i - 1];
            require(lv.d < prev.d, "d strictly decreasing", where);
            require(prev.d % lv.d == 0, "d divides its predecessor", where);
            require(level_value(prev, prev.jump) == level_value(lv, prev.jump), "continuity at jump",
                    "levels " + std::to_string(i - 1) + " and " + std::to_string(i) + " disagree at "
                        + prev.jump.str());
        }
    }
    require(tower_.back().jump == m_, "last jump equals m", "last jump " + tower_.back().jump.str());
    require(tower_.front().d == deg_, "first level d = deg", "d = " + std::to_string(tower_.front().d));
    require(tower_.front().ex == e_, "first level ex = e", "ex = " + std::to_string(tower_.front().ex));
    require(level_value(tower_.back(), m_) == m_, "continuity at m",
            "last level gives " + level_value(tower_.back(), m_).str() + " at m = " + m_.str());

    if (deg_ == 1) {
        require(!k0_, "k0 absent iff deg = 1", "degree one class with k0 = " + (k0_ ? k0_->str() : ""));
    } else {
        require(k0_.has_value(), "k0 absent iff deg = 1", "k0 missing for degree " + std::to_string(deg_));
        require(k0_->sign() < 0, "k0 negative", "k0 = " + k0_->str());
        require(-*k0_ <= m_, "-k0 <= m", "k0 = " + k0_->str() + ", m = " + m_.str());
        const Rational& least = tower_.front().jump;
        require(least == m_ || least == -*k0_, "least jump is m or -k0", "least jump " + least.str());
    }
}

std::vector<Rational> EndoClassProfile::jumps() const
{
    std::vector<Rational> out;
    out.reserve(tower_.size());
    for (const auto& lv : tower_) {
        out.push_back(lv.jump);
    }
    return out;
}

bool EndoClassProfile::totally_wild() const
{
    return e_ == deg_ && is_power_of(deg_, p_);
}

PLFunction structure_function(const EndoClassProfile& prof)
{
    if (prof.is_trivial()) {
        return PLFunction::identity();
    }
    const auto& tower = prof.tower();
    std::vector<Breakpoint> pts;
    pts.reserve(tower.size() + 1);
    pts.push_back({Rational(0), level_value(tower.front(), Rational(0))});
    for (const auto& lv : tower) {
        pts.push_back({lv.jump, level_value(lv, lv.jump)});
    }
    return PLFunction(std::move(pts), Rational(1));
}

std::int64_t minimal_c(std::int64_t m, std::int64_t e, std::int64_t f)
{
    if (m < 1 || e < 1 || f < 1) {
        throw DomainError("minimal_c needs positive m, e, f");
    }
    if (std::gcd(m, e) != 1) {
        throw DomainError("element is not minimal: gcd(" + std::to_string(m) + ", " + std::to_string(e) + ") != 1");
    }
    return m * f * (e * f - 1);
}

EndoClassProfile minimal_profile(std::int64_t a, std::int64_t b, std::int64_t p)
{
    if (a < 1 || b < 1) {
        throw DomainError("minimal_profile needs positive a, b");
    }
    if (std::gcd(a, b) != 1) {
        throw DomainError("level " + std::to_string(a) + "/" + std::to_string(b) + " is not in lowest terms");
    }
    const Rational m(a, b);
    std::optional<Rational> k0;
    if (b > 1) {
        k0 = -m;
    }
    return EndoClassProfile(p, b, b, 1, m, k0, {{m, b, b, minimal_c(a, b, 1)}});
}

EndoClassProfile tame_lift_structure(const EndoClassProfile& prof, std::int64_t e_ext)
{
    if (e_ext < 1) {
        throw DomainError("ramification index must be positive");
    }
    if (!prof.totally_wild()) {
        throw DomainError("tame lift is only computed for totally wild classes (e = deg = p^r)");
    }
    if (prof.is_trivial()) {
        return prof;
    }
    const Rational factor(e_ext);
    auto tower = prof.tower();
    for (auto& lv : tower) {
        lv.jump *= factor;
        lv.c *= e_ext;
    }
    std::optional<Rational> k0;
    if (prof.k0()) {
        k0 = *prof.k0() * factor;
    }
    return EndoClassProfile(prof.p(), prof.deg(), prof.e(), prof.f(), prof.m() * factor, k0, std::move(tower));
}

Rational pairing_varsigma(const EndoClassProfile& prof1, const EndoClassProfile& prof2, const Rational& a)
{
    if (a.sign() < 0) {
        throw DomainError("distance must be nonnegative");
    }
    const Rational v1 = structure_function(prof1)(a);
    const Rational v2 = structure_function(prof2)(a);
    if (v1 != v2) {
        throw InconsistentDataError("structure functions disagree at distance " + a.str() + ": " + v1.str()
                                    + " vs " + v2.str());
    }
    return v1;
}

std::optional<Rational> mixed_level_distance(const Rational& m1, const Rational& m2)
{
    if (m1.sign() < 0 || m2.sign() < 0) {
        throw DomainError("levels must be nonnegative");
    }
    if (m1 == m2) {
        return std::nullopt;
    }
    return std::max(m1, m2);
}

std::int64_t swan_exponent(const PairingInput& pi)
{
    if (pi.n1 < 1 || pi.n2 < 1 || pi.d < 0) {
        throw DomainError("pairing input needs positive degrees and d >= 0");
    }
    if (pi.n1 != pi.n2 && pi.d != 0) {
        throw DomainError("d must vanish when the degrees differ");
    }
    return pi.ar - pi.n1 * pi.n2 + pi.d;
}

std::vector<std::vector<std::string>> truncation_classes(const UltrametricTable& t, const Rational& eps)
{
    if (eps.sign() <= 0) {
        throw DomainError("eps must be positive");
    }
    if (!validate_ultrametric(t).valid()) {
        throw ValidationError("ultrametric inequality", "truncation classes need a valid ultrametric table");
    }
    std::vector<std::vector<std::string>> classes;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto it =
            std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return t(r, i) < eps; });
        if (it == reps.end()) {
            reps.push_back(i);
            classes.push_back({t.labels()[i]});
        } else {
            classes[static_cast<std::size_t>(it - reps.begin())].push_back(t.labels()[i]);
        }
    }
    return classes;
}

UltrametricTable varsigma_table(const std::vector<std::pair<std::string, EndoClassProfile>>& profiles,
                                const UltrametricTable& t)
{
    if (profiles.size() != t.size()) {
        throw DomainError("profile catalog and table have different sizes");
    }
    std::vector<PLFunction> phis;
    phis.reserve(t.size());
    for (const auto& label : t.labels()) {
        const auto it = std::find_if(profiles.begin(), profiles.end(),
                                     [&](const auto& entry) { return entry.first == label; });
        if (it == profiles.end()) {
            throw DomainError("no profile for label " + label);
        }
        phis.push_back(structure_function(it->second));
    }
    const std::size_t n = t.size();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational v1 = phis[i](t(i, j));
            const Rational v2 = phis[j](t(i, j));
            if (v1 != v2) {
                throw InconsistentDataError("structure functions of " + t.labels()[i] + " and " + t.labels()[j]
                                            + " disagree at their distance " + t(i, j).str());
            }
            dist[i][j] = v1;
            dist[j][i] = v1;
        }
    }
    return UltrametricTable(t.labels(), std::move(dist), false);
}

Rational twist_level(const Rational& m, std::int64_t k)
{
    if (k < 1) {
        throw DomainError("Swan conductor of the twist must be positive");
    }
    return std::max(m, Rational(k));
}

}  // namespace ramicalc
