#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace stratavol {

using BigInt = mpz_class;
using Rational = mpq_class;  // canonical (lowest terms, positive denominator) after every operation

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
/// n!! with the conventions (-1)!! = 0!! = 1.
BigInt double_factorial(long n);
BigInt pow_int(const BigInt& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

/// Exact rational times a nonnegative integer power of pi.
/// Zero is canonical: coeff 0 forces pi_pow 0.
class PiScalar {
public:
    PiScalar() = default;
    PiScalar(Rational coeff, int pi_pow);
    static PiScalar rational(Rational coeff) { return PiScalar(std::move(coeff), 0); }

    const Rational& coeff() const { return coeff_; }
    int pi_pow() const { return pi_pow_; }
    bool is_zero() const { return sgn(coeff_) == 0; }

    PiScalar operator-() const { return PiScalar(-coeff_, pi_pow_); }
    /// Adding two nonzero scalars with different pi powers is a DomainError; use PiSum for that.
    PiScalar& operator+=(const PiScalar& rhs);
    PiScalar& operator-=(const PiScalar& rhs) { return *this += -rhs; }
    PiScalar& operator*=(const PiScalar& rhs);
    PiScalar& operator*=(const Rational& rhs);
    PiScalar& operator/=(const Rational& rhs);

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
    friend PiScalar operator*(PiScalar a, const Rational& b) { return a *= b; }
    friend PiScalar operator*(const Rational& b, PiScalar a) { return a *= b; }
    friend PiScalar operator/(PiScalar a, const Rational& b) { return a /= b; }

    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.pi_pow_ == b.pi_pow_ && a.coeff_ == b.coeff_;
    }

private:
    Rational coeff_{0};
    int pi_pow_ = 0;
};

/// Human-readable form, e.g. "8/297675*pi^6".
std::string to_string(const PiScalar& x);

/// Sparse sum of PiScalars keyed by pi power; never stores zero coefficients.
class PiSum {
public:
    PiSum() = default;
    PiSum(const PiScalar& x);  // NOLINT: implicit by design of the ring embedding
    PiSum(const Rational& r) : PiSum(PiScalar::rational(r)) {}

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The single term when the sum is homogeneous (or zero).
    std::optional<PiScalar> as_scalar() const;

    PiSum operator-() const;
    PiSum& operator+=(const PiSum& rhs);
    PiSum& operator-=(const PiSum& rhs) { return *this += -rhs; }
    PiSum& operator*=(const PiSum& rhs);

    friend PiSum operator+(PiSum a, const PiSum& b) { return a += b; }
    friend PiSum operator-(PiSum a, const PiSum& b) { return a -= b; }
    friend PiSum operator*(PiSum a, const PiSum& b) { return a *= b; }
    friend bool operator==(const PiSum& a, const PiSum& b) { return a.terms_ == b.terms_; }

private:
    void add_term(int pi_pow, const Rational& c);
    std::map<int, Rational> terms_;
};

std::string to_string(const PiSum& x);

PiSum pi_add(const PiSum& a, const PiSum& b);
PiSum pi_mul(const PiSum& a, const PiSum& b);

// ---- special values ------------------------------------------------------

/// Bernoulli number B_n with B_1 = -1/2. Values up to the memo cap are cached.
Rational bernoulli(int n);
/// Sets the largest index kept in the Bernoulli memo table (default 64).
void set_bernoulli_memo_cap(int cap);
int bernoulli_memo_cap();

/// zeta(k) / pi^k for even k >= 2.
Rational zeta_even_over_pi(int k);
/// zeta(-k) for k >= 1.
Rational zeta_neg(int k);

/// The Taylor coefficients of pi*x/sin(pi*x):
///   frak_z(k) = (2 - 2^{2-k}) zeta(k) for even k >= 2, frak_z(0) = 1,
///   zero for odd k and for k < 0.
PiScalar frak_z(int k);

/// 50 significant digits of pi rendered from a fixed literal; only for labelled approximations.
std::string approx_decimal(const PiScalar& x, int digits = 50);
extern const char* const kPiDigits;

}  // namespace stratavol
