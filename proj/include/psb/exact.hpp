#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psb {

// Thrown on invalid exact arithmetic (division by zero and friends).
struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on bad user input: unknown construction, even m, exceeded caps.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1, den > 0.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q);

    // Accepts "p", "p/q", optional leading '-'.
    static Rat parse(const std::string& text);

    const mpq_class& mpq() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    int cmp(const Rat& o) const { return ::cmp(v_, o.v_); }
    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    // "p" or "p/q".
    std::string str() const;

    // Canonical byte encoding, length-prefixed sign/magnitude of num and den.
    void append_key(std::string& out) const;

  private:
    mpq_class v_;
};

// Element of Q[sqrt(3)]: rational() + sqrt3_coeff() * sqrt(3).
// Representation is unique, so equality is componentwise.
class Quad {
  public:
    Quad() = default;
    Quad(long n) : r_(n) {}
    Quad(const Rat& r) : r_(r) {}
    Quad(const Rat& r, const Rat& s) : r_(r), s_(s) {}

    static Quad sqrt3(const Rat& coeff = Rat(1)) { return Quad(Rat(0), coeff); }

    const Rat& rational() const { return r_; }
    const Rat& sqrt3_coeff() const { return s_; }
    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    bool is_rational() const { return s_.is_zero(); }

    Quad operator-() const { return Quad(-r_, -s_); }
    Quad operator+(const Quad& o) const { return Quad(r_ + o.r_, s_ + o.s_); }
    Quad operator-(const Quad& o) const { return Quad(r_ - o.r_, s_ - o.s_); }
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;
    Quad& operator+=(const Quad& o) { r_ += o.r_; s_ += o.s_; return *this; }
    Quad& operator-=(const Quad& o) { r_ -= o.r_; s_ -= o.s_; return *this; }

    Quad inverse() const;

    // Field norm r^2 - 3 s^2; zero only for the zero element.
    Rat norm() const { return r_ * r_ - Rat(3) * s_ * s_; }

    // Exact sign of the real value r + s*sqrt(3).
    int sign() const;
    int cmp(const Quad& o) const { return (*this - o).sign(); }
    Quad abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Quad& o) const { return r_ == o.r_ && s_ == o.s_; }
    bool operator!=(const Quad& o) const { return !(*this == o); }
    bool operator<(const Quad& o) const { return cmp(o) < 0; }
    bool operator<=(const Quad& o) const { return cmp(o) <= 0; }
    bool operator>(const Quad& o) const { return cmp(o) > 0; }
    bool operator>=(const Quad& o) const { return cmp(o) >= 0; }

    // Injective canonical byte key: key(a) == key(b) iff a == b.
    void append_key(std::string& out) const;
    std::string key() const;

    // "a/b", "c/d*r3" or "a/b+c/d*r3" with r3 denoting sqrt(3).
    std::string str() const;

    // Decimal approximation truncated to the given number of fractional digits.
    std::string decimal(int digits) const;

  private:
    Rat r_, s_;
};

inline Quad operator*(const Rat& a, const Quad& b) { return Quad(a) * b; }

// floor(sqrt(3) * 10^digits) as an integer; the approximation error is < 10^-digits.
mpz_class sqrt3_scaled(int digits);

}  // namespace psb
