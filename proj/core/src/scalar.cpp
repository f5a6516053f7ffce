#include "hk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>

namespace hk {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    auto bad = [&] { throw Error("bad rational", s); };
    std::size_t i = 0;
    auto read_int = [&]() -> Integer {
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i] == '-'), ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) bad();
        Integer v(s.substr(start, i - start));
        return neg ? -v : v;
    };
    Integer num = read_int();
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) bad();
    }
    if (i != s.size()) bad();
    return Rational(num, den);
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    require(n > 0, "negative sqrt", "squarefree_decompose needs a positive value");
    Integer s = 1, m = 1, rest = n;
    for (Integer p = 2; p <= 100000 && p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) rest /= p, ++e;
        for (unsigned j = 0; j + 1 < e; j += 2) s *= p;
        if (e % 2) m *= p;
    }
    if (rest > 1) {
        Integer r;
        if (is_perfect_square(rest, &r)) {
            s *= r;
        } else if (rest < Integer("1000000000000000")) {
            // no factor <= 1e5 and below 1e15: at most two primes, both single
            m *= rest;
        } else {
            throw Error("cannot certify square-free", rest.str());
        }
    }
    return {s, m};
}

namespace {

// ----- square-class bookkeeping ---------------------------------------------

// Pairwise-coprime square-free base; parity vectors over it decide whether
// products of radicands are squares.
class CoprimeBase {
public:
    void insert(Integer m) {
        // m must be square-free; splitting preserves that, so pieces stay
        // pairwise coprime.
        if (m <= 1) return;
        for (std::size_t i = 0; i < elems_.size() && m > 1; ) {
            Integer g = boost::multiprecision::gcd(m, elems_[i]);
            if (g == 1) { ++i; continue; }
            if (g != elems_[i]) {
                Integer e = elems_[i];
                elems_[i] = g;
                elems_.push_back(e / g);
            }
            m /= g;
            ++i;
        }
        if (m > 1) elems_.push_back(m);
        require(elems_.size() <= 64, "too many radicand factors");
    }

    std::uint64_t parity(const Integer& v) const {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (v % elems_[i] == 0) bits |= std::uint64_t(1) << i;
        return bits;
    }

private:
    std::vector<Integer> elems_;
};

CoprimeBase base_over(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b = {}) {
    CoprimeBase base;
    for (auto r : a) base.insert(Integer(r));
    for (auto r : b) base.insert(Integer(r));
    return base;
}

// Expresses `target` as a XOR of rows, if possible; returns the subset mask.
std::optional<std::uint64_t> f2_solve(std::vector<std::uint64_t> rows, std::uint64_t target) {
    std::vector<std::uint64_t> combo(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) combo[i] = std::uint64_t(1) << i;
    std::uint64_t target_combo = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // eliminate with previously reduced rows
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t lead = rows[j] & ~(rows[j] - 1);
            if (rows[j] && (rows[i] & lead)) rows[i] ^= rows[j], combo[i] ^= combo[j];
        }
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!rows[j]) continue;
        std::uint64_t lead = rows[j] & ~(rows[j] - 1);
        if (target & lead) target ^= rows[j], target_combo ^= combo[j];
    }
    if (target != 0) return std::nullopt;
    return target_combo;
}

std::size_t f2_rank(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!rows[j]) continue;
            std::uint64_t lead = rows[j] & ~(rows[j] - 1);
            if (rows[i] & lead) rows[i] ^= rows[j];
        }
        if (rows[i]) ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> parities(const CoprimeBase& base, const std::vector<std::int64_t>& radicands) {
    std::vector<std::uint64_t> out;
    out.reserve(radicands.size());
    for (auto r : radicands) out.push_back(base.parity(Integer(r)));
    return out;
}

// ----- interval arithmetic for sign certification ---------------------------

struct Interval {
    Rational lo, hi;
};

Interval radical_enclosure(std::int64_t r, unsigned prec) {
    Integer scaled = Integer(r) << (2 * prec);
    Integer a = isqrt(scaled);
    Integer den = Integer(1) << prec;
    return {Rational(a, den), Rational(a + 1, den)};
}

Interval mul_positive(const Interval& a, const Interval& b) {
    return {a.lo * b.lo, a.hi * b.hi};
}

Interval scale(const Interval& iv, const Rational& c) {
    if (c >= 0) return {c * iv.lo, c * iv.hi};
    return {c * iv.hi, c * iv.lo};
}

}  // namespace

// ----- FieldSpec -------------------------------------------------------------

FieldSpec::FieldSpec(std::vector<std::int64_t> radicands) : radicands_(std::move(radicands)) {
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
        require(radicands_[i] > 1, "bad radicand", std::to_string(radicands_[i]));
        auto [s, m] = squarefree_decompose(Integer(radicands_[i]));
        require(s == 1, "bad radicand", std::to_string(radicands_[i]) + " is not square-free");
        if (i) require(radicands_[i - 1] < radicands_[i], "bad radicand",
                       "radicands must be strictly ascending");
    }
    CoprimeBase base = base_over(radicands_);
    require(f2_rank(parities(base, radicands_)) == radicands_.size(), "dependent radicands",
            "a nonempty subset of radicands has square product");
}

bool FieldSpec::contains(const FieldSpec& o) const {
    if (o.radicands_.empty()) return true;
    CoprimeBase base = base_over(radicands_, o.radicands_);
    auto mine = parities(base, radicands_);
    for (auto r : o.radicands_)
        if (!f2_solve(mine, base.parity(Integer(r)))) return false;
    return true;
}

FieldSpec FieldSpec::join(const FieldSpec& a, const FieldSpec& b) {
    if (a == b || a.contains(b)) return a;
    if (b.contains(a)) return b;
    std::vector<std::int64_t> all = a.radicands_;
    all.insert(all.end(), b.radicands_.begin(), b.radicands_.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    CoprimeBase base = base_over(all);
    std::vector<std::int64_t> kept;
    std::vector<std::uint64_t> kept_par;
    for (auto r : all) {
        std::uint64_t p = base.parity(Integer(r));
        if (!f2_solve(kept_par, p)) {
            kept.push_back(r);
            kept_par.push_back(p);
        }
    }
    return FieldSpec(std::move(kept));
}

FieldSpec FieldSpec::extended(std::int64_t radicand) const {
    return join(*this, FieldSpec({radicand}));
}

bool FieldSpec::is_fresh(std::int64_t radicand) const {
    CoprimeBase base = base_over(radicands_, {radicand});
    return !f2_solve(parities(base, radicands_), base.parity(Integer(radicand)));
}

// ----- AlgebraicScalar -------------------------------------------------------

AlgebraicScalar::AlgebraicScalar(FieldSpec f, std::vector<Rational> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == field_.degree(), "bad coefficient count");
}

AlgebraicScalar AlgebraicScalar::radical(std::int64_t r) {
    AlgebraicScalar x{FieldSpec({r})};
    x.coeffs_[1] = 1;
    return x;
}

bool AlgebraicScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool AlgebraicScalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rational> AlgebraicScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

AlgebraicScalar AlgebraicScalar::in_field(const FieldSpec& target) const {
    if (field_ == target) return *this;
    require(target.contains(field_), "field embedding failure");
    AlgebraicScalar out{target};
    CoprimeBase base = base_over(field_.radicands(), target.radicands());
    auto target_par = parities(base, target.radicands());
    auto source_par = parities(base, field_.radicands());
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (coeffs_[mask] == 0) continue;
        Integer value = 1;
        std::uint64_t par = 0;
        for (std::size_t i = 0; i < field_.count(); ++i)
            if (mask >> i & 1) value *= Integer(field_.radicands()[i]), par ^= source_par[i];
        auto sub = f2_solve(target_par, par);
        require(sub.has_value(), "field embedding failure");
        Integer prod = 1;
        for (std::size_t j = 0; j < target.count(); ++j)
            if (*sub >> j & 1) prod *= Integer(target.radicands()[j]);
        Integer d;
        bool square = is_perfect_square(value * prod, &d);
        require(square, "field embedding failure");
        out.coeffs_[*sub] += coeffs_[mask] * Rational(d, prod);
    }
    return out;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
    AlgebraicScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    FieldSpec f = FieldSpec::join(field_, o.field_);
    *this = in_field(f);
    AlgebraicScalar rhs = o.in_field(f);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
    return *this += -o;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
    FieldSpec f = FieldSpec::join(field_, o.field_);
    AlgebraicScalar lhs = in_field(f);
    AlgebraicScalar rhs = o.in_field(f);
    AlgebraicScalar out{f};
    const auto& rad = f.radicands();
    for (std::size_t s = 0; s < lhs.coeffs_.size(); ++s) {
        if (lhs.coeffs_[s] == 0) continue;
        for (std::size_t t = 0; t < rhs.coeffs_.size(); ++t) {
            if (rhs.coeffs_[t] == 0) continue;
            Integer common = 1;
            for (std::size_t i = 0; i < rad.size(); ++i)
                if ((s & t) >> i & 1) common *= Integer(rad[i]);
            out.coeffs_[s ^ t] += lhs.coeffs_[s] * rhs.coeffs_[t] * Rational(common);
        }
    }
    *this = std::move(out);
    return *this;
}

namespace {

// Splits x over its top radicand: x = lo + sqrt(p) * hi with lo, hi in the
// subfield missing p.
std::pair<AlgebraicScalar, AlgebraicScalar> split_top(const AlgebraicScalar& x) {
    const auto& rad = x.field().radicands();
    FieldSpec sub{std::vector<std::int64_t>(rad.begin(), rad.end() - 1)};
    std::size_t half = sub.degree();
    std::vector<Rational> lo(x.coeffs().begin(), x.coeffs().begin() + half);
    std::vector<Rational> hi(x.coeffs().begin() + half, x.coeffs().end());
    return {AlgebraicScalar(sub, std::move(lo)), AlgebraicScalar(sub, std::move(hi))};
}

AlgebraicScalar join_top(const FieldSpec& full, const AlgebraicScalar& lo, const AlgebraicScalar& hi) {
    FieldSpec sub{std::vector<std::int64_t>(full.radicands().begin(), full.radicands().end() - 1)};
    std::vector<Rational> coeffs(full.degree());
    auto l = lo.in_field(sub), h = hi.in_field(sub);
    std::copy(l.coeffs().begin(), l.coeffs().end(), coeffs.begin());
    std::copy(h.coeffs().begin(), h.coeffs().end(), coeffs.begin() + sub.degree());
    return AlgebraicScalar(full, std::move(coeffs));
}

}  // namespace

AlgebraicScalar AlgebraicScalar::inverse() const {
    require(!is_zero(), "division by zero");
    if (field_.count() == 0) return AlgebraicScalar(Rational(1) / coeffs_[0]);
    auto [a, b] = split_top(*this);
    if (b.is_zero()) return a.inverse().in_field(field_);
    std::int64_t p = field_.radicands().back();
    // (a + sqrt(p) b)(a - sqrt(p) b) = a^2 - p b^2 lands in the subfield and is
    // nonzero because each tower step genuinely doubles the degree.
    AlgebraicScalar norm = a * a - AlgebraicScalar(Rational(p)) * b * b;
    AlgebraicScalar ninv = norm.inverse();
    return join_top(field_, a * ninv, -(b * ninv));
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) {
    return *this *= o.inverse();
}

bool AlgebraicScalar::operator==(const AlgebraicScalar& o) const {
    if (field_ == o.field_) return coeffs_ == o.coeffs_;
    FieldSpec f = FieldSpec::join(field_, o.field_);
    return in_field(f).coeffs_ == o.in_field(f).coeffs_;
}

namespace {

Interval enclosure(const AlgebraicScalar& x, unsigned prec) {
    const auto& rad = x.field().radicands();
    std::vector<Interval> rads;
    rads.reserve(rad.size());
    for (auto r : rad) rads.push_back(radical_enclosure(r, prec));
    Interval total{Rational(0), Rational(0)};
    for (std::size_t mask = 0; mask < x.coeffs().size(); ++mask) {
        const Rational& c = x.coeffs()[mask];
        if (c == 0) continue;
        Interval b{Rational(1), Rational(1)};
        for (std::size_t i = 0; i < rad.size(); ++i)
            if (mask >> i & 1) b = mul_positive(b, rads[i]);
        Interval term = scale(b, c);
        total.lo += term.lo;
        total.hi += term.hi;
    }
    return total;
}

}  // namespace

int AlgebraicScalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return hk::sign(coeffs_[0]);
    for (unsigned prec = 16; prec <= (1u << 20); prec *= 2) {
        Interval iv = enclosure(*this, prec);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
    }
    throw Error("sign refinement failed");  // unreachable for exact nonzero input
}

double AlgebraicScalar::approx(const Rational& eps) const {
    require(eps > 0, "bad tolerance");
    for (unsigned prec = 16;; prec *= 2) {
        Interval iv = enclosure(*this, prec);
        if (iv.hi - iv.lo <= eps) {
            Rational mid = (iv.lo + iv.hi) / 2;
            return mid.convert_to<double>();
        }
        require(prec <= (1u << 20), "approx refinement failed");
    }
}

std::optional<AlgebraicScalar> AlgebraicScalar::sqrt_in_field() const {
    int sg = sign();
    if (sg < 0) return std::nullopt;
    if (sg == 0) return AlgebraicScalar(field_);

    if (is_rational()) {
        Rational q = coeffs_[0];
        auto [s, m] = squarefree_decompose(numerator(q) * denominator(q));
        Rational base(s, denominator(q));
        if (m == 1) return AlgebraicScalar(base).in_field(field_);
        // look for m as a product of a subset of the radicands, mod squares
        CoprimeBase cbase = base_over(field_.radicands(), {});
        cbase.insert(m);
        auto sub = f2_solve(parities(cbase, field_.radicands()), cbase.parity(m));
        if (!sub) return std::nullopt;
        Integer prod = 1;
        for (std::size_t j = 0; j < field_.count(); ++j)
            if (*sub >> j & 1) prod *= Integer(field_.radicands()[j]);
        Integer d;
        if (!is_perfect_square(m * prod, &d)) return std::nullopt;
        AlgebraicScalar out{field_};
        out.coeffs_[*sub] = base * Rational(d, prod);
        return out;
    }

    // x = x0 + sqrt(p) x1 over the top radicand
    auto [x0, x1] = split_top(*this);
    std::int64_t p = field_.radicands().back();
    auto lift_check = [&](const AlgebraicScalar& cand) -> std::optional<AlgebraicScalar> {
        if (cand * cand == *this) return cand.sign() < 0 ? -cand : cand;
        return std::nullopt;
    };
    if (x1.is_zero()) {
        if (auto t = x0.sqrt_in_field())
            if (auto r = lift_check(t->in_field(field_))) return r;
        if (auto t = (x0 / AlgebraicScalar(Rational(p))).sqrt_in_field())
            if (auto r = lift_check(*t * AlgebraicScalar::radical(p).in_field(field_))) return r;
        return std::nullopt;
    }
    // (a + sqrt(p) b)^2 = x needs a^2 + p b^2 = x0 and 2ab = x1; a^2 solves a
    // quadratic whose discriminant is the norm x0^2 - p x1^2.
    AlgebraicScalar disc = x0 * x0 - AlgebraicScalar(Rational(p)) * x1 * x1;
    auto s = disc.sqrt_in_field();
    if (!s) return std::nullopt;
    for (int sigma : {1, -1}) {
        AlgebraicScalar half = (x0 + (sigma > 0 ? *s : -*s)) / AlgebraicScalar(Rational(2));
        auto a = half.sqrt_in_field();
        if (!a || a->is_zero()) continue;
        AlgebraicScalar b = x1 / (AlgebraicScalar(Rational(2)) * *a);
        AlgebraicScalar cand = join_top(field_, *a, b);
        if (auto r = lift_check(cand)) return r;
    }
    return std::nullopt;
}

AlgebraicScalar sqrt_extending(const AlgebraicScalar& x) {
    require(x.sign() >= 0, "negative square root");
    if (auto t = x.sqrt_in_field()) return *t;
    auto q = x.as_rational();
    require(q.has_value(), "unrepresentable square root",
            "irrational value with no square root in its own field");
    auto [s, m] = squarefree_decompose(numerator(*q) * denominator(*q));
    require(m <= Integer(std::numeric_limits<std::int64_t>::max()), "unrepresentable square root",
            "square-free part too large for a radicand");
    FieldSpec ext = x.field().extended(m.convert_to<std::int64_t>());
    AlgebraicScalar root =
        AlgebraicScalar(Rational(s, denominator(*q))) * AlgebraicScalar::radical(m.convert_to<std::int64_t>());
    return root.in_field(FieldSpec::join(ext, x.field()));
}

std::string AlgebraicScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (coeffs_[mask] == 0) continue;
        if (!first) os << " + ";
        os << hk::to_string(coeffs_[mask]);
        for (std::size_t i = 0; i < field_.count(); ++i)
            if (mask >> i & 1) os << "*sqrt(" << field_.radicands()[i] << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hk
