#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hk/matrix.hpp"
#include "hk/vector.hpp"

namespace hk {

// Integer quadratic lattice with exact signature. The Gram matrix must be
// symmetric and non-degenerate; both are checked at construction.
class QuadLattice {
public:
    QuadLattice(std::string name, Matrix<Integer> gram);
    explicit QuadLattice(Matrix<Integer> gram) : QuadLattice("", std::move(gram)) {}

    const std::string& name() const { return name_; }
    const Matrix<Integer>& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }

    // Exact inertia (positive count, negative count); sums to rank.
    std::pair<std::size_t, std::size_t> signature() const { return signature_; }

    // All diagonal entries even.
    bool is_even() const;

    // q(x, y) = x^T G y, exact over the field of the arguments.
    AlgebraicScalar eval(const AlgebraicVector& x, const AlgebraicVector& y) const;
    AlgebraicScalar norm(const AlgebraicVector& x) const { return eval(x, x); }

    bool same_gram(const QuadLattice& o) const { return gram_ == o.gram_; }

private:
    std::string name_;
    Matrix<Integer> gram_;
    std::pair<std::size_t, std::size_t> signature_;
};

using LatticePtr = std::shared_ptr<const QuadLattice>;

// Exact inertia of a symmetric rational matrix by congruence diagonalization.
// Errors with "degenerate gram" when the form is singular.
std::pair<std::size_t, std::size_t> exact_signature(const Matrix<Rational>& sym);

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b);

// Standard lattices: "U", "E8neg", "K3", "K3n" (n >= 2), "Kummer" (n >= 2),
// "rank1" (even nonzero parameter = the single Gram entry). Every entry is
// checked symmetric, even and of the declared signature before return.
QuadLattice catalog_lookup(const std::string& key, std::optional<std::int64_t> param = std::nullopt);

// The Fujiki relation data: integral of the 2n-th power equals c q(eta,eta)^n.
struct FujikiData {
    Rational c;
    unsigned n;

    FujikiData(Rational c_, unsigned n_) : c(std::move(c_)), n(n_) {
        require(n >= 1, "bad fujiki exponent");
    }
};

AlgebraicScalar fujiki_value(const QuadLattice& L, const AlgebraicVector& eta, const FujikiData& f);

// Convenience wrapper matching the constraint-kernel signature used everywhere.
std::vector<std::vector<Rational>> rational_kernel(const std::vector<AlgebraicVector>& constraints,
                                                   const QuadLattice& L);

}  // namespace hk
