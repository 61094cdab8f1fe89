#include "ramicalc/rational.hpp"

#include <ostream>

#include "ramicalc/error.hpp"

namespace ramicalc {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    check_denominator();
    q_.canonicalize();
}

void Rational::check_denominator() const
{
    if (q_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!valid_integer_text(den_text) || den_text.front() == '-') {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        den = mpz_class(std::string(den_text), 10);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

mpz_class floor(const Rational& r)
{
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), r.get().get_num_mpz_t(), r.get().get_den_mpz_t());
    return out;
}

bool is_p_integral(const Rational& r, std::int64_t p)
{
    return r.denominator() % mpz_class(static_cast<long>(p)) != 0;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace ramicalc
