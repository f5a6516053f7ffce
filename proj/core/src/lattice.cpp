#include "hk/lattice.hpp"

namespace hk {

std::pair<std::size_t, std::size_t> exact_signature(const Matrix<Rational>& sym) {
    std::size_t n = sym.rows();
    Matrix<Rational> a = sym;
    std::size_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            std::size_t j = n;
            for (std::size_t t = i + 1; t < n; ++t)
                if (a(t, t) != 0) { j = t; break; }
            if (j < n) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
            } else {
                for (std::size_t t = i + 1; t < n; ++t)
                    if (a(i, t) != 0) { j = t; break; }
                require(j < n, "degenerate gram");
                // a(i,i) becomes 2 a(i,j) != 0 after the symmetric row/col add
                for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
            }
        }
        Rational p = a(i, i);
        if (p > 0) ++pos; else ++neg;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a(r, i) == 0) continue;
            Rational f = a(r, i) / p;
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(i, c);
            for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, i);
        }
    }
    return {pos, neg};
}

QuadLattice::QuadLattice(std::string name, Matrix<Integer> gram)
    : name_(std::move(name)), gram_(std::move(gram)) {
    require(gram_.rows() == gram_.cols() && gram_.rows() > 0, "bad gram", "square nonempty matrix required");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            require(gram_(i, j) == gram_(j, i), "bad gram", "gram must be symmetric");
    Matrix<Rational> q(gram_.rows(), gram_.cols());
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j) q(i, j) = Rational(gram_(i, j));
    signature_ = exact_signature(q);  // throws "degenerate gram" on singular input
}

bool QuadLattice::is_even() const {
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

AlgebraicScalar QuadLattice::eval(const AlgebraicVector& x, const AlgebraicVector& y) const {
    require(x.size() == rank() && y.size() == rank(), "length mismatch",
            "vector length must equal lattice rank");
    FieldSpec f = FieldSpec::join(x.field(), y.field());
    auto xf = x.in_field(f), yf = y.in_field(f);
    AlgebraicScalar acc{f};
    for (std::size_t i = 0; i < rank(); ++i) {
        if (xf[i].is_zero()) continue;
        AlgebraicScalar row{f};
        for (std::size_t j = 0; j < rank(); ++j) {
            if (gram_(i, j) == 0 || yf[j].is_zero()) continue;
            row += AlgebraicScalar(Rational(gram_(i, j))) * yf[j];
        }
        acc += xf[i] * row;
    }
    return acc;
}

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    Matrix<Integer> g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
    return QuadLattice(std::move(name), std::move(g));
}

namespace {

QuadLattice hyperbolic_plane() {
    return QuadLattice("U", Matrix<Integer>{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}});
}

// Negated E8 Cartan matrix, Bourbaki node numbering: chain 1-3-4-5-6-7-8 with
// node 2 hanging off node 4.
QuadLattice e8_negative() {
    Matrix<Integer> c(8, 8);
    for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
    auto bond = [&](std::size_t i, std::size_t j) { c(i - 1, j - 1) = -1; c(j - 1, i - 1) = -1; };
    bond(1, 3); bond(3, 4); bond(4, 5); bond(5, 6); bond(6, 7); bond(7, 8); bond(2, 4);
    return QuadLattice("E8neg", -c);
}

QuadLattice rank_one(Integer entry, std::string name) {
    Matrix<Integer> g(1, 1);
    g(0, 0) = std::move(entry);
    return QuadLattice(std::move(name), std::move(g));
}

void check_entry(const QuadLattice& L, std::size_t rank, std::pair<std::size_t, std::size_t> sig) {
    require(L.rank() == rank, "catalog check failed", L.name());
    require(L.is_even(), "catalog check failed", L.name() + " is not even");
    require(L.signature() == sig, "catalog check failed", L.name() + " has wrong signature");
}

}  // namespace

QuadLattice catalog_lookup(const std::string& key, std::optional<std::int64_t> param) {
    if (key == "U") {
        QuadLattice L = hyperbolic_plane();
        check_entry(L, 2, {1, 1});
        return L;
    }
    if (key == "E8neg") {
        QuadLattice L = e8_negative();
        check_entry(L, 8, {0, 8});
        return L;
    }
    if (key == "K3") {
        QuadLattice U = hyperbolic_plane();
        QuadLattice L = direct_sum(direct_sum(direct_sum(U, U), U),
                                   direct_sum(e8_negative(), e8_negative()));
        L = QuadLattice("K3", L.gram());
        check_entry(L, 22, {3, 19});
        return L;
    }
    if (key == "K3n") {
        require(param.has_value() && *param >= 2, "invalid parameter", "K3n needs n >= 2");
        QuadLattice k3 = catalog_lookup("K3");
        QuadLattice L = direct_sum(k3, rank_one(Integer(-2 * (*param - 1)), ""));
        L = QuadLattice("K3n(" + std::to_string(*param) + ")", L.gram());
        check_entry(L, 23, {3, 20});
        return L;
    }
    if (key == "Kummer") {
        require(param.has_value() && *param >= 2, "invalid parameter", "Kummer needs n >= 2");
        QuadLattice U = hyperbolic_plane();
        QuadLattice L = direct_sum(direct_sum(direct_sum(U, U), U),
                                   rank_one(Integer(-2 * (*param + 1)), ""));
        L = QuadLattice("Kummer(" + std::to_string(*param) + ")", L.gram());
        check_entry(L, 7, {3, 4});
        return L;
    }
    if (key == "rank1") {
        require(param.has_value() && *param != 0 && *param % 2 == 0, "invalid parameter",
                "rank1 needs an even nonzero entry");
        QuadLattice L = rank_one(Integer(*param), "rank1(" + std::to_string(*param) + ")");
        check_entry(L, 1, *param > 0 ? std::pair<std::size_t, std::size_t>{1, 0}
                                     : std::pair<std::size_t, std::size_t>{0, 1});
        return L;
    }
    throw Error("unknown key", key);
}

AlgebraicScalar fujiki_value(const QuadLattice& L, const AlgebraicVector& eta, const FujikiData& f) {
    AlgebraicScalar q = L.norm(eta);
    AlgebraicScalar p(Rational(1));
    for (unsigned i = 0; i < f.n; ++i) p *= q;
    return AlgebraicScalar(f.c) * p;
}

std::vector<std::vector<Rational>> rational_kernel(const std::vector<AlgebraicVector>& constraints,
                                                   const QuadLattice& L) {
    return rational_kernel(constraints, L.gram());
}

}  // namespace hk
