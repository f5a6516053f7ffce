#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

// Multi-quadratic extension Q(sqrt(r1),...,sqrt(rk)) described by its list of
// radicands. Radicands must be square-free integers > 1, strictly ascending,
// and multiplicatively independent modulo squares (no nonempty subset has a
// square product). Independence is what makes the 2^k products of radicals a
// Q-basis, so the coefficient-wise zero test is exact.
class FieldSpec {
public:
    FieldSpec() = default;  // the rationals
    explicit FieldSpec(std::vector<std::int64_t> radicands);

    const std::vector<std::int64_t>& radicands() const { return radicands_; }
    std::size_t count() const { return radicands_.size(); }
    std::size_t degree() const { return std::size_t(1) << radicands_.size(); }

    bool operator==(const FieldSpec& o) const { return radicands_ == o.radicands_; }
    bool operator!=(const FieldSpec& o) const { return radicands_ != o.radicands_; }

    // Does this field contain sqrt of every radicand of `o`?
    bool contains(const FieldSpec& o) const;

    // Smallest common multi-quadratic field. Radicands that become dependent
    // reduce to products of the kept ones ({6} joined with {2,3} is {2,3}).
    static FieldSpec join(const FieldSpec& a, const FieldSpec& b);

    FieldSpec extended(std::int64_t radicand) const;

    // True if adding `radicand` would keep the radicand set independent
    // (i.e. sqrt(radicand) is not already in the field).
    bool is_fresh(std::int64_t radicand) const;

private:
    std::vector<std::int64_t> radicands_;
};

// Element of a multi-quadratic field, stored as exact rational coordinates in
// the basis { prod_{i in S} sqrt(r_i) : S subset of radicands }. Index of S is
// the bitmask over the FieldSpec's radicand list.
class AlgebraicScalar {
public:
    AlgebraicScalar() : coeffs_(1, Rational(0)) {}
    AlgebraicScalar(const Rational& q) : coeffs_(1, q) {}
    AlgebraicScalar(const Integer& n) : coeffs_(1, Rational(n)) {}
    AlgebraicScalar(int n) : coeffs_(1, Rational(n)) {}
    explicit AlgebraicScalar(FieldSpec f) : field_(std::move(f)), coeffs_(field_.degree(), Rational(0)) {}
    AlgebraicScalar(FieldSpec f, std::vector<Rational> coeffs);

    // sqrt(r) as an element of Q(sqrt r).
    static AlgebraicScalar radical(std::int64_t r);

    const FieldSpec& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t mask) const { return coeffs_[mask]; }

    bool is_zero() const;
    bool is_rational() const;
    // The rational value when is_rational(), otherwise nullopt.
    std::optional<Rational> as_rational() const;

    // Reinterpret in a larger field; `target` must contain field().
    AlgebraicScalar in_field(const FieldSpec& target) const;

    AlgebraicScalar operator-() const;
    AlgebraicScalar& operator+=(const AlgebraicScalar& o);
    AlgebraicScalar& operator-=(const AlgebraicScalar& o);
    AlgebraicScalar& operator*=(const AlgebraicScalar& o);
    AlgebraicScalar& operator/=(const AlgebraicScalar& o);

    friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
    friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
    friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }

    bool operator==(const AlgebraicScalar& o) const;
    bool operator!=(const AlgebraicScalar& o) const { return !(*this == o); }

    AlgebraicScalar inverse() const;  // error "division by zero" on zero

    // Exact sign in {-1, 0, +1}. Zero only after the exact coefficient test;
    // nonzero certified by interval refinement of the radicals.
    int sign() const;

    // Value within eps of the real embedding (all radicals positive), up to
    // one double rounding. eps must be > 0.
    double approx(const Rational& eps) const;

    // Positive square root inside this scalar's own field, if one exists.
    std::optional<AlgebraicScalar> sqrt_in_field() const;

    std::string to_string() const;  // debugging aid, e.g. "1/2 + -3/4*sqrt(2)"

private:
    FieldSpec field_;
    std::vector<Rational> coeffs_;
};

inline int sign_of(const AlgebraicScalar& x) { return x.sign(); }
inline double approx_value(const AlgebraicScalar& x, const Rational& eps) { return x.approx(eps); }

// Positive square root of x, extending the field by one radicand when x is
// rational and its square-free part is missing. Errors with clause
// "unrepresentable square root" when x is irrational and has no root in its
// own field (a real quadratic tower cannot hold nested radicals).
AlgebraicScalar sqrt_extending(const AlgebraicScalar& x);

// n = s^2 * m with m square-free: returns {s, m}. Factors by trial division;
// errors on values it cannot certify square-free.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

}  // namespace hk
