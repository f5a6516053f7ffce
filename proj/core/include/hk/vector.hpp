#pragma once

#include <cstddef>
#include <vector>

#include "hk/matrix.hpp"
#include "hk/scalar.hpp"

namespace hk {

// Vector with entries in one multi-quadratic field. Entries handed in with
// mixed fields are promoted to the join on construction.
class AlgebraicVector {
public:
    AlgebraicVector() = default;
    explicit AlgebraicVector(std::vector<AlgebraicScalar> entries);
    AlgebraicVector(FieldSpec f, std::size_t n) : field_(std::move(f)), entries_(n, AlgebraicScalar(field_)) {}

    static AlgebraicVector rational(const std::vector<Rational>& entries);
    static AlgebraicVector integral(const std::vector<Integer>& entries);
    static AlgebraicVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    const FieldSpec& field() const { return field_; }
    const AlgebraicScalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<AlgebraicScalar>& entries() const { return entries_; }

    void set(std::size_t i, const AlgebraicScalar& v);

    AlgebraicVector in_field(const FieldSpec& target) const;

    bool is_zero() const;
    bool is_rational() const;

    AlgebraicVector operator-() const;
    AlgebraicVector& operator+=(const AlgebraicVector& o);
    AlgebraicVector& operator-=(const AlgebraicVector& o);
    friend AlgebraicVector operator+(AlgebraicVector a, const AlgebraicVector& b) { return a += b; }
    friend AlgebraicVector operator-(AlgebraicVector a, const AlgebraicVector& b) { return a -= b; }
    friend AlgebraicVector operator*(const AlgebraicScalar& c, AlgebraicVector v);

    bool operator==(const AlgebraicVector& o) const;
    bool operator!=(const AlgebraicVector& o) const { return !(*this == o); }

    // Componentwise doubles at the given interval precision.
    std::vector<double> approx(const Rational& eps) const;

private:
    FieldSpec field_;
    std::vector<AlgebraicScalar> entries_;
};

// ----- linear algebra over the field -----------------------------------------

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix<AlgebraicScalar>& m);
std::vector<std::size_t> rref(Matrix<Rational>& m);

std::size_t rank(const std::vector<AlgebraicVector>& vectors);

// Is v in the span of `basis`?
bool in_span(const std::vector<AlgebraicVector>& basis, const AlgebraicVector& v);

// Coordinates of v in `basis` (which must be independent); nullopt if outside.
std::optional<std::vector<AlgebraicScalar>> coordinates_in(const std::vector<AlgebraicVector>& basis,
                                                           const AlgebraicVector& v);

// Basis of the intersection of two spans.
std::vector<AlgebraicVector> span_intersection(const std::vector<AlgebraicVector>& a,
                                               const std::vector<AlgebraicVector>& b);

// Determinant sign of the coordinate change between two bases of one space.
// Errors when the spans differ.
int basis_orientation(const std::vector<AlgebraicVector>& from, const std::vector<AlgebraicVector>& to);

// Basis of {x in F^b : q(x, c) = 0 for all constraints}, over the common
// field F of the constraints. Canonical RREF-derived basis.
std::vector<AlgebraicVector> orthogonal_complement(const std::vector<AlgebraicVector>& constraints,
                                                   const Matrix<Integer>& gram);

// Congruence-diagonalizes the restriction of the form to span(basis).
// Returns (vector, norm) pairs with deterministic pivoting; the vectors span
// the same space and are pairwise q-orthogonal.
std::vector<std::pair<AlgebraicVector, AlgebraicScalar>> diagonalize_restriction(
    const std::vector<AlgebraicVector>& basis, const Matrix<Integer>& gram);

// ----- restriction of scalars -------------------------------------------------

// One rational row block per constraint: the equation q(x, c) = 0 over the
// field splits into degree-many rational equations, one per basis radical
// product. Rows are indexed (constraint, subset mask).
Matrix<Rational> expand_constraints(const std::vector<AlgebraicVector>& constraints,
                                    const Matrix<Integer>& gram);

// {x in Q^b : q(x, c_i) = 0 for all i}, canonical RREF-derived basis. The
// result is independent of constraint order.
std::vector<std::vector<Rational>> rational_kernel(const std::vector<AlgebraicVector>& constraints,
                                                   const Matrix<Integer>& gram);

// {x in Z^b : A x = 0} for rational A, as a saturated lattice basis in
// canonical (HNF-reduced) form.
std::vector<std::vector<Integer>> integer_kernel(const Matrix<Rational>& a);

// Integer kernel of the expanded constraint block; the Neron-Severi style
// lattice of the constraint set.
std::vector<std::vector<Integer>> integer_constraint_kernel(const std::vector<AlgebraicVector>& constraints,
                                                            const Matrix<Integer>& gram);

}  // namespace hk
