#pragma once

#include "matspace/mpoly.hpp"
#include "matspace/rat.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matspace::poly {

/// Raised when an exact search (divisor enumeration for rational roots,
/// subspace-pair enumeration) would exceed its iteration budget; callers
/// never get an unsound verdict in place of the error.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over Q; coefficient of x^i at index i,
/// no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<la::Rat> coeffs);

    static UPoly constant(const la::Rat& c) { return UPoly({c}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; the zero polynomial is treated as degree -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<la::Rat>& coeffs() const { return c_; }
    const la::Rat& leading() const { return c_.back(); }

    la::Rat eval(const la::Rat& x) const;

    UPoly operator*(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly scaled(const la::Rat& s) const;

    /// Polynomial remainder of *this by o (o nonzero).
    UPoly rem(const UPoly& o) const;

    /// Monic gcd over Q.
    static UPoly gcd(UPoly a, UPoly b);

    /// All rational roots, found exactly via the rational-root theorem on
    /// the primitive integer form. Throws BudgetExceeded if the divisor
    /// enumeration would be excessive.
    std::vector<la::Rat> rational_roots() const;

private:
    void trim();
    std::vector<la::Rat> c_;
};

/// Homogeneous binary form f(s, t) of a fixed degree: coefficient of
/// s^(deg-i) t^i at index i. The zero form is the empty coefficient list.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(std::vector<la::Rat> coeffs);

    /// Converts a 2-variable homogeneous MPoly (vars s=0, t=1).
    static BinaryForm from_mpoly(const MPoly<la::Rat>& p);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the form; -1 for the zero form.
    int degree() const { return deg_; }
    bool is_constant() const { return !is_zero() && deg_ == 0; }
    const std::vector<la::Rat>& coeffs() const { return c_; }

    la::Rat eval(const la::Rat& s, const la::Rat& t) const;

    /// Canonical scaling: first nonzero coefficient equals 1.
    BinaryForm normalized() const;

    /// Gcd of two binary forms (canonically scaled); gcd with the zero
    /// form is the other form.
    static BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

    /// All roots [s:t] in P^1(Q), as canonical pairs: [1:0], [0:1], or
    /// [1:x] for rational x != 0 roots of the dehomogenization.
    std::vector<std::pair<la::Rat, la::Rat>> rational_roots() const;

    std::string str() const;

private:
    std::vector<la::Rat> c_; // size deg_+1 when nonzero
    int deg_ = -1;
};

} // namespace matspace::poly
