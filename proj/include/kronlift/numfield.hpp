#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace kronlift {

using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational &q) const { return lo <= q && q <= hi; }
};

/// A real number field Q(alpha) given by a monic integer minimal polynomial
/// and an isolating interval selecting the real embedding of alpha.
/// Irreducibility is not checked; see FieldElement::inverse.
class NumberField {
  public:
    /// minpoly holds c_0..c_D with c_D == 1. Throws NonMonic or
    /// NoRealRootIsolated.
    NumberField(std::vector<Integer> minpoly, Rational lo, Rational hi);

    std::size_t degree() const { return minpoly_.size() - 1; }
    const std::vector<Integer> &minpoly() const { return minpoly_; }
    const RationalInterval &root_interval() const { return root_; }

    /// Sign of the minimal polynomial at a rational point.
    int sign_at(const Rational &t) const;

    /// Bisect the isolating interval until its width is at most max_width.
    RationalInterval refined_root(const Rational &max_width) const;

    bool operator==(const NumberField &other) const {
        return minpoly_ == other.minpoly_ && root_.lo == other.root_.lo &&
               root_.hi == other.root_.hi;
    }

  private:
    std::vector<Integer> minpoly_;
    RationalInterval root_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Integer> minpoly, Rational lo, Rational hi);

/// Q itself, as the degree-one field x - 1.
FieldPtr rational_field();

bool same_field(const FieldPtr &a, const FieldPtr &b);

/// a_0 + a_1 alpha + ... + a_{D-1} alpha^{D-1}, coefficients canonical.
class FieldElement {
  public:
    explicit FieldElement(FieldPtr field);
    FieldElement(FieldPtr field, const Rational &value);
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);

    /// alpha^power, reduced into the power basis.
    static FieldElement alpha_power(const FieldPtr &field, std::size_t power);

    const FieldPtr &field() const { return field_; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    const Rational &coeff(std::size_t t) const { return coeffs_[t]; }
    std::size_t degree() const { return coeffs_.size(); }

    bool is_zero() const;
    bool is_rational() const;
    const Rational &rational_part() const { return coeffs_[0]; }

    FieldElement operator-() const;
    FieldElement &operator+=(const FieldElement &rhs);
    FieldElement &operator-=(const FieldElement &rhs);
    FieldElement &operator*=(const FieldElement &rhs);
    FieldElement &operator*=(const Rational &rhs);
    FieldElement &operator/=(const FieldElement &rhs);

    /// Extended Euclid against the minimal polynomial. Throws DivisionByZero
    /// or ReducibleMinimalPolynomial.
    FieldElement inverse() const;

    /// Replace the rational coefficient by its residue in [0, 1).
    FieldElement reduced_mod_one() const;

    bool operator==(const FieldElement &rhs) const;
    bool operator!=(const FieldElement &rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    void check_same(const FieldElement &rhs) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

inline FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement &b) { return a *= b; }
inline FieldElement operator*(FieldElement a, const Rational &b) { return a *= b; }
inline FieldElement operator*(const Rational &a, FieldElement b) { return b *= a; }
inline FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }

std::ostream &operator<<(std::ostream &os, const FieldElement &x);

/// Certified enclosure of the real value of x (under the field's chosen
/// embedding) of width < eps. eps must be positive.
RationalInterval approx(const FieldElement &x, const Rational &eps);

/// Midpoint of a tight enclosure, for floating-point consumers.
double to_double(const FieldElement &x);

Rational floor_rational(const Rational &q);
Rational mod_one(const Rational &q);

} // namespace kronlift
