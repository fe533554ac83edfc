#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matspace::la {

/// True iff p is an odd prime (deterministic trial division; moduli here
/// are desk-scale).
bool is_odd_prime(std::uint64_t p);

/// Prime-field scalar: a residue 0..p-1 together with its modulus. The
/// modulus rides along on every value so mixed-field arithmetic is caught
/// at run time instead of corrupting results.
class Fp {
public:
    struct Field {
        std::uint64_t p = 0;

        Field() = default;
        explicit Field(std::uint64_t prime) : p(prime) {
            if (!is_odd_prime(prime))
                throw std::invalid_argument("Fp: modulus " + std::to_string(prime) +
                                            " is not an odd prime");
            if (prime > (std::uint64_t{1} << 31))
                throw std::invalid_argument("Fp: modulus too large (must fit in 31 bits)");
        }

        Fp zero() const { return Fp(0, p); }
        Fp one() const { return Fp(1, p); }
        Fp from_long(long n) const;
        /// Parses "k" or "k mod p" (the q in "k mod q" must match this field).
        Fp parse(const std::string& s) const;
        bool operator==(const Field&) const = default;
        std::string name() const { return "Fp:" + std::to_string(p); }
    };

    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inv() const;

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = (v_ * o.v_) % p_;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Field field() const {
        Field f;
        f.p = p_;
        return f;
    }

    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw std::logic_error("Fp: mixed moduli " + std::to_string(p_) + " and " +
                                   std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

} // namespace matspace::la
