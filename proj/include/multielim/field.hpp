#ifndef MULTIELIM_FIELD_HPP
#define MULTIELIM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multielim {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (GMP's canonical form), so equality is plain
// value comparison.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, mirrors integer literals
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "22/7", "-3", "0". Throws std::invalid_argument on anything else.
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return canonical(-v_); }
    Rational operator+(const Rational& o) const { return canonical(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return canonical(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return canonical(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in Q");
        return canonical(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q");
        return canonical(1 / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

private:
    // GMP arithmetic on canonical operands yields canonical results,
    // so no re-canonicalization here.
    static Rational canonical(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline Rational Rational_parse_impl(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(mpq_class(n));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        mpq_class q(num, den);
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline Rational Rational::parse(const std::string& s) { return Rational_parse_impl(s); }

// Element of Z/p for a prime p < 2^63, stored as the canonical
// representative in [0, p). Each element carries its modulus; mixing
// moduli is a hard error rather than a silent coercion.
class Fp {
public:
    Fp() = default; // element of no field; arithmetic with it throws

    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp modulus must be >= 2");
        if (p >= (1ULL << 63)) throw std::invalid_argument("Fp modulus must be < 2^63");
        v_ = value % p;
    }

    static Fp from_int(long long value, std::uint64_t p) {
        long long m = value % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(m), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const {
        check_field(*this);
        return raw(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp operator+(const Fp& o) const {
        check_pair(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check_pair(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        check_pair(o);
        unsigned __int128 t = static_cast<unsigned __int128>(v_) * o.v_;
        return raw(static_cast<std::uint64_t>(t % p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const {
        check_field(*this);
        if (v_ == 0) throw std::domain_error("inverse of zero in Fp");
        // extended Euclid on (v, p)
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (r != 1) throw std::domain_error("element not invertible: modulus is not prime");
        if (t < 0) t += static_cast<long long>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const Fp& o) const {
        if (p_ != o.p_) return false;
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    static void check_field(const Fp& x) {
        if (x.p_ == 0) throw std::invalid_argument("Fp element without a field");
    }
    void check_pair(const Fp& o) const {
        check_field(*this);
        check_field(o);
        if (p_ != o.p_)
            throw std::invalid_argument("mixed Fp moduli: " + std::to_string(p_) + " vs " +
                                        std::to_string(o.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

// Default verification prime: 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

inline Rational times_int(const Rational& a, long long m) { return a * Rational(static_cast<long>(m)); }
inline Fp times_int(const Fp& a, long long m) { return a * Fp::from_int(m, a.modulus()); }

inline Rational parse_element(const std::string& s, const Rational&) { return Rational::parse(s); }
inline Fp parse_element(const std::string& s, const Fp& like) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return Fp::from_int(v, like.modulus());
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse Fp element: '" + s + "'");
    }
}

// Field named on a command line or in a file: "Q" or "Fp:<p>".
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    static FieldSpec parse(const std::string& s) {
        FieldSpec f;
        if (s == "Q") return f;
        if (s.rfind("Fp:", 0) == 0) {
            f.rational = false;
            try {
                std::size_t pos = 0;
                f.p = std::stoull(s.substr(3), &pos);
                if (pos != s.size() - 3) throw std::invalid_argument(s);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad field spec: '" + s + "'");
            }
            if (f.p < 2) throw std::invalid_argument("bad field spec: '" + s + "'");
            return f;
        }
        throw std::invalid_argument("bad field spec: '" + s + "' (expected Q or Fp:<p>)");
    }

    std::string str() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

} // namespace multielim

#endif
