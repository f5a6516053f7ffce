#include "hk/vector.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

AlgebraicVector::AlgebraicVector(std::vector<AlgebraicScalar> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) field_ = FieldSpec::join(field_, e.field());
    for (auto& e : entries_) e = e.in_field(field_);
}

AlgebraicVector AlgebraicVector::rational(const std::vector<Rational>& entries) {
    AlgebraicVector v;
    v.entries_.reserve(entries.size());
    for (const auto& q : entries) v.entries_.emplace_back(q);
    return v;
}

AlgebraicVector AlgebraicVector::integral(const std::vector<Integer>& entries) {
    AlgebraicVector v;
    v.entries_.reserve(entries.size());
    for (const auto& n : entries) v.entries_.emplace_back(Rational(n));
    return v;
}

AlgebraicVector AlgebraicVector::unit(std::size_t n, std::size_t i) {
    require(i < n, "index out of range");
    AlgebraicVector v;
    v.entries_.assign(n, AlgebraicScalar());
    v.entries_[i] = AlgebraicScalar(Rational(1));
    return v;
}

void AlgebraicVector::set(std::size_t i, const AlgebraicScalar& v) {
    require(i < entries_.size(), "index out of range");
    if (v.field() == field_) {
        entries_[i] = v;
        return;
    }
    field_ = FieldSpec::join(field_, v.field());
    for (auto& e : entries_) e = e.in_field(field_);
    entries_[i] = v.in_field(field_);
}

AlgebraicVector AlgebraicVector::in_field(const FieldSpec& target) const {
    AlgebraicVector out;
    out.field_ = FieldSpec::join(field_, target);
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.entries_.push_back(e.in_field(out.field_));
    return out;
}

bool AlgebraicVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

bool AlgebraicVector::is_rational() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_rational(); });
}

AlgebraicVector AlgebraicVector::operator-() const {
    AlgebraicVector out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

AlgebraicVector& AlgebraicVector::operator+=(const AlgebraicVector& o) {
    require(size() == o.size(), "length mismatch");
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    *this = in_field(o.field_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i].in_field(field_);
    return *this;
}

AlgebraicVector& AlgebraicVector::operator-=(const AlgebraicVector& o) {
    return *this += -o;
}

AlgebraicVector operator*(const AlgebraicScalar& c, AlgebraicVector v) {
    if (c.field() != v.field_) v = v.in_field(c.field());
    for (auto& e : v.entries_) e *= c;
    v.field_ = FieldSpec::join(v.field_, c.field());
    return v;
}

bool AlgebraicVector::operator==(const AlgebraicVector& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

std::vector<double> AlgebraicVector::approx(const Rational& eps) const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.approx(eps));
    return out;
}

// ----- elimination -------------------------------------------------------------

namespace {

template <class T, class ZeroFn>
std::vector<std::size_t> rref_impl(Matrix<T>& m, ZeroFn is_zero) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c))) { sel = i; break; }
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel_from_rref(const Matrix<T>& m, const std::vector<std::size_t>& pivots) {
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix<AlgebraicScalar> rows_matrix(const std::vector<AlgebraicVector>& vectors) {
    require(!vectors.empty(), "empty vector list");
    FieldSpec f;
    for (const auto& v : vectors) f = FieldSpec::join(f, v.field());
    Matrix<AlgebraicScalar> m(vectors.size(), vectors[0].size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        require(vectors[i].size() == vectors[0].size(), "length mismatch");
        auto vi = vectors[i].in_field(f);
        for (std::size_t j = 0; j < vi.size(); ++j) m(i, j) = vi[j];
    }
    return m;
}

}  // namespace

std::vector<std::size_t> rref(Matrix<AlgebraicScalar>& m) {
    return rref_impl(m, [](const AlgebraicScalar& x) { return x.is_zero(); });
}

std::vector<std::size_t> rref(Matrix<Rational>& m) {
    return rref_impl(m, [](const Rational& x) { return x == 0; });
}

std::size_t rank(const std::vector<AlgebraicVector>& vectors) {
    if (vectors.empty()) return 0;
    Matrix<AlgebraicScalar> m = rows_matrix(vectors);
    return rref(m).size();
}

bool in_span(const std::vector<AlgebraicVector>& basis, const AlgebraicVector& v) {
    if (v.is_zero()) return true;
    if (basis.empty()) return false;
    std::vector<AlgebraicVector> all = basis;
    all.push_back(v);
    return rank(basis) == rank(all);
}

std::optional<std::vector<AlgebraicScalar>> coordinates_in(const std::vector<AlgebraicVector>& basis,
                                                           const AlgebraicVector& v) {
    require(!basis.empty(), "empty vector list");
    std::size_t n = basis[0].size(), k = basis.size();
    FieldSpec f = v.field();
    for (const auto& b : basis) f = FieldSpec::join(f, b.field());
    Matrix<AlgebraicScalar> m(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        auto bj = basis[j].in_field(f);
        require(bj.size() == n, "length mismatch");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = bj[i];
    }
    auto vf = v.in_field(f);
    require(vf.size() == n, "length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, k) = vf[i];
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // v independent
    require(pivots.size() == k, "dependent basis");
    std::vector<AlgebraicScalar> coords(k, AlgebraicScalar());
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = m(r, k);
    return coords;
}

std::vector<AlgebraicVector> span_intersection(const std::vector<AlgebraicVector>& a,
                                               const std::vector<AlgebraicVector>& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a[0].size();
    FieldSpec f;
    for (const auto& v : a) f = FieldSpec::join(f, v.field());
    for (const auto& v : b) f = FieldSpec::join(f, v.field());
    Matrix<AlgebraicScalar> m(n, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        auto vj = a[j].in_field(f);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = vj[i];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto vj = b[j].in_field(f);
        for (std::size_t i = 0; i < n; ++i) m(i, a.size() + j) = -vj[i];
    }
    auto pivots = rref(m);
    auto ker = kernel_from_rref(m, pivots);
    std::vector<AlgebraicVector> out;
    for (const auto& y : ker) {
        AlgebraicVector w(f, n);
        bool nonzero = false;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (y[j].is_zero()) continue;
            w += y[j] * a[j].in_field(f);
            nonzero = true;
        }
        if (nonzero && !w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

int basis_orientation(const std::vector<AlgebraicVector>& from, const std::vector<AlgebraicVector>& to) {
    require(from.size() == to.size(), "dimension mismatch");
    std::size_t k = from.size();
    Matrix<AlgebraicScalar> change(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto coords = coordinates_in(from, to[j]);
        require(coords.has_value(), "spans differ");
        for (std::size_t i = 0; i < k; ++i) change(i, j) = (*coords)[i];
    }
    // determinant sign by elimination
    int swaps = 0;
    AlgebraicScalar det(Rational(1));
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t sel = k;
        for (std::size_t i = c; i < k; ++i)
            if (!change(i, c).is_zero()) { sel = i; break; }
        require(sel < k, "spans differ", "degenerate change of basis");
        if (sel != c) change.swap_rows(c, sel), ++swaps;
        det *= change(c, c);
        AlgebraicScalar inv = AlgebraicScalar(Rational(1)) / change(c, c);
        for (std::size_t i = c + 1; i < k; ++i) {
            if (change(i, c).is_zero()) continue;
            AlgebraicScalar fct = change(i, c) * inv;
            for (std::size_t j = c; j < k; ++j) change(i, j) -= fct * change(c, j);
        }
    }
    int s = det.sign() * (swaps % 2 ? -1 : 1);
    return s;
}

// ----- restriction of scalars ---------------------------------------------------

Matrix<Rational> expand_constraints(const std::vector<AlgebraicVector>& constraints,
                                    const Matrix<Integer>& gram) {
    std::size_t b = gram.rows();
    FieldSpec f;
    for (const auto& c : constraints) {
        require(c.size() == b, "length mismatch", "constraint length must equal lattice rank");
        f = FieldSpec::join(f, c.field());
    }
    std::size_t deg = f.degree();
    Matrix<Rational> rows(constraints.size() * deg, b);
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        auto c = constraints[ci].in_field(f);
        for (std::size_t j = 0; j < b; ++j) {
            // (G c)_j as a field scalar
            AlgebraicScalar gj(f);
            for (std::size_t l = 0; l < b; ++l) {
                if (gram(j, l) == 0) continue;
                gj += AlgebraicScalar(Rational(gram(j, l))) * c[l];
            }
            auto gjf = gj.in_field(f);
            for (std::size_t mask = 0; mask < deg; ++mask) rows(ci * deg + mask, j) = gjf.coeff(mask);
        }
    }
    return rows;
}

std::vector<std::vector<Rational>> rational_kernel(const std::vector<AlgebraicVector>& constraints,
                                                   const Matrix<Integer>& gram) {
    std::size_t b = gram.rows();
    if (constraints.empty()) {
        std::vector<std::vector<Rational>> basis;
        for (std::size_t i = 0; i < b; ++i) {
            std::vector<Rational> e(b, Rational(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Matrix<Rational> m = expand_constraints(constraints, gram);
    auto pivots = rref(m);
    return kernel_from_rref(m, pivots);
}

namespace {

// Canonical row HNF with positive pivots and reduced entries above them.
void hnf_rows(std::vector<std::vector<Integer>>& rows) {
    if (rows.empty()) return;
    std::size_t n = rows[0].size(), r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        // gcd-chain the remaining rows into row r
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            while (rows[i][c] != 0) {
                Integer q = rows[r][c] / rows[i][c];
                for (std::size_t j = 0; j < n; ++j) rows[r][j] -= q * rows[i][j];
                std::swap(rows[r], rows[i]);
            }
        }
        if (rows[r][c] < 0)
            for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            // floor division so entries above the pivot land in [0, pivot)
            Integer num = rows[i][c], den = rows[r][c];
            q = num / den;
            if (num % den != 0 && (num < 0) != (den < 0)) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
}

}  // namespace

std::vector<std::vector<Integer>> integer_kernel(const Matrix<Rational>& a) {
    std::size_t m = a.rows(), b = a.cols();
    // scale each row integral; row scaling keeps the kernel
    Matrix<Integer> ai(m, b);
    for (std::size_t i = 0; i < m; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < b; ++j)
            l = boost::multiprecision::lcm(l, denominator(a(i, j)));
        for (std::size_t j = 0; j < b; ++j) {
            Rational v = a(i, j) * Rational(l);
            ai(i, j) = numerator(v);
        }
    }
    // unimodular column reduction; columns that annihilate every row span the
    // saturated kernel lattice
    Matrix<Integer> u = Matrix<Integer>::identity(b);
    std::vector<std::size_t> active(b);
    std::iota(active.begin(), active.end(), 0);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<Integer> vals(active.size());
        for (std::size_t t = 0; t < active.size(); ++t) {
            Integer s = 0;
            for (std::size_t j = 0; j < b; ++j) s += ai(r, j) * u(j, active[t]);
            vals[t] = s;
        }
        // Euclidean sweep: concentrate the row value on one column
        while (true) {
            std::size_t min_t = active.size();
            for (std::size_t t = 0; t < active.size(); ++t)
                if (vals[t] != 0 &&
                    (min_t == active.size() || boost::multiprecision::abs(vals[t]) <
                                                   boost::multiprecision::abs(vals[min_t])))
                    min_t = t;
            if (min_t == active.size()) break;  // row already zero on all active cols
            bool reduced_any = false;
            for (std::size_t t = 0; t < active.size(); ++t) {
                if (t == min_t || vals[t] == 0) continue;
                Integer q = vals[t] / vals[min_t];
                if (q != 0) {
                    for (std::size_t j = 0; j < b; ++j)
                        u(j, active[t]) -= q * u(j, active[min_t]);
                    vals[t] -= q * vals[min_t];
                }
                if (vals[t] != 0) reduced_any = true;
            }
            if (!reduced_any) {
                // single nonzero column remains: drop it from the kernel candidates
                active.erase(active.begin() + min_t);
                break;
            }
        }
    }
    std::vector<std::vector<Integer>> basis;
    for (auto j : active) basis.push_back(u.col(j));
    hnf_rows(basis);
    return basis;
}

std::vector<std::vector<Integer>> integer_constraint_kernel(const std::vector<AlgebraicVector>& constraints,
                                                            const Matrix<Integer>& gram) {
    std::size_t b = gram.rows();
    if (constraints.empty()) {
        std::vector<std::vector<Integer>> basis;
        for (std::size_t i = 0; i < b; ++i) {
            std::vector<Integer> e(b, Integer(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    return integer_kernel(expand_constraints(constraints, gram));
}

}  // namespace hk
