#include "ramicalc/galois.hpp"

#include <algorithm>
#include <numeric>

#include "ramicalc/error.hpp"

namespace ramicalc {

GaloisDecomposition::GaloisDecomposition(std::int64_t dim, std::vector<Constituent> components)
    : dim_(dim), components_(std::move(components))
{
    if (dim_ < 1) {
        throw ValidationError("positive dimension", "dim = " + std::to_string(dim_));
    }
    if (components_.empty()) {
        throw ValidationError("nonempty components", "no constituents listed");
    }
    std::int64_t total = 0;
    for (const auto& c : components_) {
        if (c.dim < 1) {
            throw ValidationError("positive constituent dimension", "constituent of dim " + std::to_string(c.dim));
        }
        if (c.swan < 0) {
            throw ValidationError("nonnegative Swan conductor", "constituent with swan " + std::to_string(c.swan));
        }
        total += c.dim;
    }
    if (total != dim_ * dim_) {
        throw ValidationError("constituent dimensions sum to dim^2", "sum is " + std::to_string(total)
                                                                          + ", expected "
                                                                          + std::to_string(dim_ * dim_));
    }
    if (std::find(components_.begin(), components_.end(), Constituent{1, 0}) == components_.end()) {
        throw ValidationError("trivial constituent present", "no constituent (1, 0)");
    }
}

GaloisDecomposition GaloisDecomposition::scaled_swans(std::int64_t e) const
{
    if (e < 1) {
        throw DomainError("ramification index must be positive");
    }
    auto comps = components_;
    for (auto& c : comps) {
        c.swan *= e;
    }
    return GaloisDecomposition(dim_, std::move(comps));
}

Rational slope_of(std::int64_t dim, std::int64_t swan)
{
    if (dim < 1) {
        throw DomainError("dimension must be positive");
    }
    return Rational(swan, dim);
}

PLFunction sigma_function(const GaloisDecomposition& d)
{
    std::vector<AffineTerm> terms;
    terms.reserve(d.components().size());
    for (const auto& c : d.components()) {
        terms.push_back({c.dim, c.swan});
    }
    return max_affine_mean(d.dim() * d.dim(), terms);
}

Rational delta_from_pairing(const PLFunction& sigma, const Rational& varsigma)
{
    if (varsigma < sigma.initial_value()) {
        throw DomainError("pairing value " + varsigma.str() + " lies below sigma(0) = " + sigma.initial_value().str());
    }
    return invert(sigma)(varsigma);
}

PLFunction restrict_tame_sigma(const PLFunction& sigma, std::int64_t e)
{
    return scale_conj(sigma, e);
}

Rational tame_distance_min(const std::vector<Rational>& conjugate_distances, std::int64_t e)
{
    if (conjugate_distances.empty()) {
        throw DomainError("no conjugate distances given");
    }
    if (e < 1) {
        throw DomainError("ramification index must be positive");
    }
    return *std::min_element(conjugate_distances.begin(), conjugate_distances.end()) / Rational(e);
}

namespace {

Rational least_jump(const PLFunction& sigma)
{
    const auto jumps = derivative_jumps(sigma);
    if (jumps.empty()) {
        throw DomainError("decomposition function has no slope discontinuity (tame representation)");
    }
    return jumps.front().x;
}

}  // namespace

SigmaJumpDiagnostic least_sigma_jump(const PLFunction& sigma, std::int64_t p, AbsolutelyWild)
{
    if (!is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
    SigmaJumpDiagnostic d;
    d.a = least_jump(sigma);
    d.absolutely_wild = true;
    d.integral = d.a.is_integer() && d.a.sign() > 0;
    d.p_integral = is_p_integral(d.a, p);
    d.interpretation = "a = " + d.a.str() + " = min sw(chi) over nontrivial chi in D(sigma)";
    return d;
}

SigmaJumpDiagnostic least_sigma_jump(const PLFunction& sigma, std::int64_t p, GeneralWild mode)
{
    if (!is_prime(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
    if (mode.e_ti < 1) {
        throw DomainError("imprimitivity ramification index must be positive");
    }
    SigmaJumpDiagnostic d;
    d.a = least_jump(sigma);
    d.scaled_integral = (d.a * Rational(mode.e_ti)).is_integer();
    d.p_integral = is_p_integral(d.a, p);
    d.interpretation = "a = " + d.a.str() + " = min sw(chi)/" + std::to_string(mode.e_ti)
                       + " over nontrivial chi in D(sigma^{T_I})";
    return d;
}

TwistDistance twist_distance(const PLFunction& sigma, std::int64_t c)
{
    if (c < 1) {
        throw DomainError("conductor must be a positive integer");
    }
    const Rational cr(c);
    const auto jumps = derivative_jumps(sigma);
    const bool jump_at_c = std::any_of(jumps.begin(), jumps.end(), [&](const SlopeJump& j) { return j.x == cr; });
    return {cr, !jump_at_c};
}

std::optional<std::string> single_jump_diagnostic(const PLFunction& sigma, std::int64_t p, std::int64_t r)
{
    if (derivative_jumps(sigma).size() != 1) {
        return std::nullopt;
    }
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * r));
    return "Gal(E/F) elementary abelian of order " + std::to_string(p) + "^" + std::to_string(2 * r) + " = "
           + order.get_str();
}

}  // namespace ramicalc
