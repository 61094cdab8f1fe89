#ifndef RAMICALC_RATIONAL_HPP
#define RAMICALC_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramicalc {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that the
/// rest of the code never sees gmpxx expression templates (which do not
/// mix well with `auto`) and so that every value is canonicalized.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n)  // NOLINT(google-explicit-constructor)
        : q_(mpz_from(n))
    {
    }

    template <std::integral T, std::integral U>
    Rational(T num, U den) : q_(mpz_from(num), mpz_from(den))
    {
        check_denominator();
        q_.canonicalize();
    }

    explicit Rational(mpq_class q);

    /// Parses "a", "-a" or "a/b" (b != 0). Whitespace is not accepted.
    static Rational parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "a/b", with "/b" omitted when b = 1.
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    template <std::integral T>
    static mpz_class mpz_from(T n)
    {
        if constexpr (std::is_signed_v<T>) {
            return mpz_class(static_cast<long>(n));
        } else {
            return mpz_class(static_cast<unsigned long>(n));
        }
    }

    void check_denominator() const;

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Largest integer <= r.
mpz_class floor(const Rational& r);

/// True when the denominator of r is prime to p.
bool is_p_integral(const Rational& r, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace ramicalc

#endif
