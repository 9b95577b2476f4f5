#include "stratavol/exact_arith.hpp"

#include "stratavol/errors.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace stratavol {

const char* const kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899863";

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    return make_rational(BigInt(n), BigInt(std::string(den)));
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt double_factorial(long n) {
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) {
        if (sgn(base) == 0) throw DomainError("zero to a negative power");
        Rational inv = 1 / base;
        return pow_rational(inv, -exp);
    }
    const auto e = static_cast<unsigned long>(exp);
    return make_rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

// ---- PiScalar -------------------------------------------------------------

PiScalar::PiScalar(Rational coeff, int pi_pow) : coeff_(std::move(coeff)), pi_pow_(pi_pow) {
    if (pi_pow < 0) throw DomainError("negative power of pi");
    if (sgn(coeff_) == 0) pi_pow_ = 0;
}

PiScalar& PiScalar::operator+=(const PiScalar& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (pi_pow_ != rhs.pi_pow_)
        throw DomainError("inhomogeneous sum: pi^" + std::to_string(pi_pow_) + " + pi^" +
                          std::to_string(rhs.pi_pow_));
    coeff_ += rhs.coeff_;
    if (sgn(coeff_) == 0) pi_pow_ = 0;
    return *this;
}

PiScalar& PiScalar::operator*=(const PiScalar& rhs) {
    coeff_ *= rhs.coeff_;
    pi_pow_ = sgn(coeff_) == 0 ? 0 : pi_pow_ + rhs.pi_pow_;
    return *this;
}

PiScalar& PiScalar::operator*=(const Rational& rhs) {
    coeff_ *= rhs;
    if (sgn(coeff_) == 0) pi_pow_ = 0;
    return *this;
}

PiScalar& PiScalar::operator/=(const Rational& rhs) {
    if (sgn(rhs) == 0) throw DomainError("division by zero");
    coeff_ /= rhs;
    return *this;
}

std::string to_string(const PiScalar& x) {
    if (x.is_zero()) return "0";
    std::string s = to_string(x.coeff());
    if (x.pi_pow() == 0) return s;
    s += "*pi";
    if (x.pi_pow() != 1) s += "^" + std::to_string(x.pi_pow());
    return s;
}

// ---- PiSum ----------------------------------------------------------------

PiSum::PiSum(const PiScalar& x) {
    if (!x.is_zero()) terms_.emplace(x.pi_pow(), x.coeff());
}

void PiSum::add_term(int pi_pow, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(pi_pow, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

std::optional<PiScalar> PiSum::as_scalar() const {
    if (terms_.empty()) return PiScalar{};
    if (terms_.size() != 1) return std::nullopt;
    return PiScalar(terms_.begin()->second, terms_.begin()->first);
}

PiSum PiSum::operator-() const {
    PiSum r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

PiSum& PiSum::operator+=(const PiSum& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

PiSum& PiSum::operator*=(const PiSum& rhs) {
    PiSum r;
    for (const auto& [pa, ca] : terms_)
        for (const auto& [pb, cb] : rhs.terms_) r.add_term(pa + pb, ca * cb);
    return *this = std::move(r);
}

std::string to_string(const PiSum& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        std::string t = to_string(PiScalar(it->second, it->first));
        if (s.empty()) {
            s = t;
        } else if (t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
    }
    return s;
}

PiSum pi_add(const PiSum& a, const PiSum& b) { return a + b; }
PiSum pi_mul(const PiSum& a, const PiSum& b) { return a * b; }

// ---- Bernoulli numbers and zeta values ------------------------------------

namespace {

std::atomic<int> g_bernoulli_cap{64};

struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

// Extends `b` (holding B_0..B_{k-1}) up to B_n from sum_{k<=n} C(n+1,k) B_k = 0.
void extend_bernoulli(std::vector<Rational>& b, int n) {
    for (int i = static_cast<int>(b.size()); i <= n; ++i) {
        if (i >= 3 && i % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        Rational acc = 0;
        for (int k = 0; k < i; ++k) {
            if (sgn(b[k]) == 0) continue;
            acc += Rational(binomial(i + 1, k)) * b[k];
        }
        acc /= i + 1;
        b.push_back(-acc);
    }
}

}  // namespace

void set_bernoulli_memo_cap(int cap) {
    if (cap < 1) throw DomainError("Bernoulli memo cap must be positive");
    g_bernoulli_cap.store(cap);
}

int bernoulli_memo_cap() { return g_bernoulli_cap.load(); }

Rational bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    if (n >= 3 && n % 2 == 1) return 0;
    auto& table = bernoulli_table();
    {
        std::shared_lock lock(table.mutex);
        if (n < static_cast<int>(table.values.size())) return table.values[n];
    }
    const int cap = g_bernoulli_cap.load();
    if (n <= cap) {
        std::unique_lock lock(table.mutex);
        extend_bernoulli(table.values, n);
        return table.values[n];
    }
    std::vector<Rational> local;
    {
        std::shared_lock lock(table.mutex);
        local = table.values;
    }
    extend_bernoulli(local, n);
    return local[n];
}

Rational zeta_even_over_pi(int k) {
    if (k < 2 || k % 2 != 0) throw DomainError("zeta_even_over_pi: k must be even and >= 2");
    // zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!)
    const int j = k / 2;
    Rational r = bernoulli(k) * Rational(pow_int(2, k)) / Rational(2 * factorial(k));
    return j % 2 == 1 ? r : Rational(-r);
}

Rational zeta_neg(int k) {
    if (k < 1) throw DomainError("zeta_neg: k must be >= 1");
    return -bernoulli(k + 1) / (k + 1);
}

PiScalar frak_z(int k) {
    if (k < 0 || k % 2 != 0) return {};
    if (k == 0) return PiScalar::rational(1);
    const Rational factor = 2 - make_rational(BigInt(1), pow_int(2, k - 2));
    return PiScalar(factor * zeta_even_over_pi(k), k);
}

std::string approx_decimal(const PiScalar& x, int digits) {
    const mp_bitcnt_t bits = 64 + static_cast<mp_bitcnt_t>(digits * 4);
    mpf_class pi(kPiDigits, bits);
    mpf_class value(x.coeff(), bits);
    for (int i = 0; i < x.pi_pow(); ++i) value *= pi;
    mp_exp_t exp = 0;
    std::string mant = value.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (mant.empty() || mant == "0") return "0";
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1) + "." + mant.substr(1);
    if (out.back() == '.') out.pop_back();
    return out + "e" + std::to_string(static_cast<long>(exp) - 1);
}

}  // namespace stratavol
