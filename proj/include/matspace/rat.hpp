#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matspace::la {

/// Arbitrary-precision rational scalar. Values are always kept in lowest
/// terms with a positive denominator (GMP canonical form), so equality is
/// plain representation equality and serialization is unique.
class Rat {
public:
    /// Field descriptor. Carries no run-time state for Q; it exists so the
    /// generic linear-algebra code can mint constants of "the same field as
    /// this matrix" uniformly for Q and F_p.
    struct Field {
        Rat zero() const { return Rat(); }
        Rat one() const { return Rat(1); }
        Rat from_long(long n) const { return Rat(n); }
        Rat parse(const std::string& s) const;
        bool operator==(const Field&) const = default;
        std::string name() const { return "Q"; }
    };

    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    /// Parses "a" or "a/b" (base 10, optional sign on either part).
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static Rat parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Field field() const { return {}; }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace matspace::la
