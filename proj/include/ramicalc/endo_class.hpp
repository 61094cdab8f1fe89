#ifndef RAMICALC_ENDO_CLASS_HPP
#define RAMICALC_ENDO_CLASS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramicalc/plf.hpp"
#include "ramicalc/rational.hpp"
#include "ramicalc/ultrametric.hpp"

namespace ramicalc {

/// Invariants of the endo-class on the open interval ending at `jump`:
/// degree d of the approximating field, its ramification index ex, and the
/// integer c entering the structure function as c/d^2 + x/d.
struct TowerLevel {
    Rational jump;
    std::int64_t d;
    std::int64_t ex;
    std::int64_t c;

    friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

/// Invariant profile of an endo-class: the data the structure function and
/// its relatives are computed from.
///
/// The constructor rejects inconsistent data with a ValidationError whose
/// invariant() names the violated constraint. Continuity of the structure
/// function across each jump is one of those constraints.
class EndoClassProfile {
public:
    EndoClassProfile(std::int64_t p, std::int64_t deg, std::int64_t e, std::int64_t f, Rational m,
                     std::optional<Rational> k0, std::vector<TowerLevel> tower, bool trivial = false);

    /// The trivial class over residue characteristic p.
    static EndoClassProfile trivial(std::int64_t p);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t deg() const noexcept { return deg_; }
    std::int64_t e() const noexcept { return e_; }
    std::int64_t f() const noexcept { return f_; }
    const Rational& m() const noexcept { return m_; }
    // nullopt encodes k0 = -infinity (degree one).
    const std::optional<Rational>& k0() const noexcept { return k0_; }
    const std::vector<TowerLevel>& tower() const noexcept { return tower_; }
    bool is_trivial() const noexcept { return trivial_; }

    std::vector<Rational> jumps() const;

    /// e = deg = p^r.
    bool totally_wild() const;

    friend bool operator==(const EndoClassProfile&, const EndoClassProfile&) = default;

private:
    void validate() const;

    std::int64_t p_;
    std::int64_t deg_;
    std::int64_t e_;
    std::int64_t f_;
    Rational m_;
    std::optional<Rational> k0_;
    std::vector<TowerLevel> tower_;
    bool trivial_ = false;
};

/// c/d^2 + x/d on each tower interval, x beyond m; identity for the trivial
/// class. Convex and strictly increasing for every valid profile.
PLFunction structure_function(const EndoClassProfile& prof);

/// m f (e f - 1) for a minimal element; requires gcd(m, e) = 1.
std::int64_t minimal_c(std::int64_t m, std::int64_t e, std::int64_t f);

/// Totally ramified class of degree b with normalized level a/b built from
/// a single minimal element.
EndoClassProfile minimal_profile(std::int64_t a, std::int64_t b, std::int64_t p);

/// Lift of a totally wild class along a tame extension of ramification
/// index e_ext: jumps, m and every c scale by e_ext.
EndoClassProfile tame_lift_structure(const EndoClassProfile& prof, std::int64_t e_ext);

/// Normalized Swan exponent of the pair at ultrametric distance a: the
/// common value of both structure functions at a.
Rational pairing_varsigma(const EndoClassProfile& prof1, const EndoClassProfile& prof2, const Rational& a);

/// Distance between classes of different levels (the larger level);
/// nullopt when the levels agree and the distance is genuinely data.
std::optional<Rational> mixed_level_distance(const Rational& m1, const Rational& m2);

struct PairingInput {
    std::int64_t ar;  // Rankin-Selberg conductor exponent
    std::int64_t n1;
    std::int64_t n2;
    std::int64_t d;  // unramified twists identifying pi1 with the dual of pi2
};

std::int64_t swan_exponent(const PairingInput& pi);

/// Open eps-balls of a valid ultrametric table, in order of first label.
std::vector<std::vector<std::string>> truncation_classes(const UltrametricTable& t, const Rational& eps);

/// Table of pairing values Phi(A(x, y)) for labeled profiles. The labels of
/// `profiles` must match those of `t`. The result is non-separating.
UltrametricTable varsigma_table(const std::vector<std::pair<std::string, EndoClassProfile>>& profiles,
                                const UltrametricTable& t);

/// Normalized level of the twist of a class of level m by a character of
/// Swan conductor k: max(m, k).
Rational twist_level(const Rational& m, std::int64_t k);

}  // namespace ramicalc

#endif
