#include "reflectk/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/integer.hpp>

namespace reflectk {

namespace {
std::atomic<std::size_t> g_max_terms{1'000'000};
}

std::size_t max_poly_terms() { return g_max_terms.load(); }
void set_max_poly_terms(std::size_t n) { g_max_terms.store(n == 0 ? 1 : n); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId id, int exp) {
    Monomial m;
    if (exp < 0) throw InvariantError("monomial exponents must be non-negative");
    if (exp > 0) m.powers_.emplace_back(id, exp);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [id, e] : powers_) d += e;
    return d;
}

int Monomial::exponent(VarId id) const {
    for (const auto& [vid, e] : powers_)
        if (vid == id) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.powers_.reserve(powers_.size() + o.powers_.size());
    auto a = powers_.begin(), b = o.powers_.begin();
    while (a != powers_.end() || b != o.powers_.end()) {
        if (b == o.powers_.end() ||
            (a != powers_.end() && names::rank(a->first) < names::rank(b->first))) {
            out.powers_.push_back(*a++);
        } else if (a == powers_.end() || names::rank(b->first) < names::rank(a->first)) {
            out.powers_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.powers_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::pow(int e) const {
    if (e < 0) throw InvariantError("monomial exponents must be non-negative");
    Monomial out;
    if (e == 0) return out;
    out.powers_ = powers_;
    for (auto& [id, ex] : out.powers_) ex *= e;
    return out;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Same total degree: lexicographic, smaller-ranked variable first; a
    // higher exponent on the smaller-ranked variable makes the monomial
    // larger.
    auto pa = a.powers_.begin(), pb = b.powers_.begin();
    while (pa != a.powers_.end() && pb != b.powers_.end()) {
        auto ra = names::rank(pa->first), rb = names::rank(pb->first);
        if (ra != rb) return ra < rb ? 1 : -1;
        if (pa->second != pb->second) return pa->second > pb->second ? 1 : -1;
        ++pa;
        ++pb;
    }
    if (pa != a.powers_.end()) return 1;
    if (pb != b.powers_.end()) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const BigInt& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::var(VarId id, int exp) {
    Poly p;
    p.terms_.emplace_back(Monomial::var(id, exp), BigInt(1));
    return p;
}

Poly Poly::term(Monomial m, BigInt c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int Poly::degree() const {
    return terms_.empty() ? 0 : terms_.front().first.degree();
}

void Poly::check_limit() const {
    if (terms_.size() > max_poly_terms())
        throw TermLimitError("polynomial exceeded the term-count ceiling (" +
                             std::to_string(max_poly_terms()) +
                             "); raise REFLECTK_MAX_TERMS if intended");
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int c;
        if (a == terms_.end())
            c = -1;
        else if (b == o.terms_.end())
            c = 1;
        else
            c = Monomial::cmp(a->first, b->first);
        if (c > 0) {
            out.terms_.push_back(*a++);
        } else if (c < 0) {
            out.terms_.push_back(*b++);
        } else {
            BigInt coef = a->second + b->second;
            if (coef != 0) out.terms_.emplace_back(a->first, std::move(coef));
            ++a;
            ++b;
        }
    }
    out.check_limit();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    // Multiply by the shorter operand on the outside.
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
    if (small.terms_.size() == 1) {
        const auto& [sm, sc] = small.terms_[0];
        Poly out;
        out.terms_.reserve(large.terms_.size());
        for (const auto& [m, c] : large.terms_) out.terms_.emplace_back(m.times(sm), c * sc);
        if (!sm.is_one())
            std::sort(out.terms_.begin(), out.terms_.end(),
                      [](const Term& x, const Term& y) {
                          return Monomial::cmp(x.first, y.first) > 0;
                      });
        out.check_limit();
        return out;
    }
    std::map<Monomial, BigInt, MonomialGradedLexGreater> acc;
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [ml, cl] : large.terms_) {
            Monomial m = ms.times(ml);
            auto [it, fresh] = acc.emplace(std::move(m), cs * cl);
            if (!fresh) it->second += cs * cl;
        }
        if (acc.size() > max_poly_terms())
            throw TermLimitError("polynomial product exceeded the term-count ceiling");
    }
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
    out.check_limit();
    return out;
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divided_by_int(const BigInt& g) const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c /= g;
    return out;
}

Poly Poly::divexact(const Poly& o) const {
    if (o.is_zero()) throw DivideByZeroError("divexact by the zero polynomial");
    Poly rem = *this;
    Poly quot;
    const auto& [lm, lc] = o.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        // Monomial quotient rm / lm must exist with non-negative exponents.
        Monomial q;
        {
            std::vector<std::pair<VarId, int>> pw;
            auto a = rm.powers().begin();
            for (const auto& [id, e] : lm.powers()) {
                while (a != rm.powers().end() && names::rank(a->first) < names::rank(id)) {
                    pw.emplace_back(*a);
                    ++a;
                }
                if (a == rm.powers().end() || a->first != id || a->second < e)
                    throw InvariantError("divexact: leading monomial not divisible");
                if (a->second > e) pw.emplace_back(id, a->second - e);
                ++a;
            }
            while (a != rm.powers().end()) {
                pw.emplace_back(*a);
                ++a;
            }
            q = Monomial{};
            for (auto& p : pw) q = q.times(Monomial::var(p.first, p.second));
        }
        if (rc % lc != 0) throw InvariantError("divexact: leading coefficient not divisible");
        Poly t = Poly::term(q, rc / lc);
        quot = quot + t;
        rem = rem - t * o;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const BigRat& r)
    : num_(BigInt(boost::multiprecision::numerator(r))),
      den_(BigInt(boost::multiprecision::denominator(r))) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivideByZeroError("scalar with zero denominator");
    normalize();
}

Scalar Scalar::var(VarId id, int exp) {
    if (exp >= 0) return Scalar(Poly::var(id, exp), Poly(BigInt(1)));
    return Scalar(Poly(BigInt(1)), Poly::var(id, -exp));
}

namespace {

// Componentwise-min exponent vector over all terms of p.
std::vector<std::pair<VarId, int>> monomial_content(const Poly& p) {
    std::vector<std::pair<VarId, int>> acc;
    bool first = true;
    p.for_each([&](const Monomial& m, const BigInt&) {
        if (first) {
            acc = m.powers();
            first = false;
            return;
        }
        std::vector<std::pair<VarId, int>> next;
        for (const auto& [id, e] : acc) {
            int other = m.exponent(id);
            int mn = std::min(e, other);
            if (mn > 0) next.emplace_back(id, mn);
        }
        acc = std::move(next);
    });
    return acc;
}

Poly strip_monomial(const Poly& p, const std::vector<std::pair<VarId, int>>& g) {
    Poly out;
    p.for_each([&](const Monomial& m, const BigInt& c) {
        Monomial reduced;
        for (const auto& [id, e] : m.powers()) {
            int drop = 0;
            for (const auto& [gid, ge] : g)
                if (gid == id) drop = ge;
            if (e - drop > 0) reduced = reduced.times(Monomial::var(id, e - drop));
        }
        out = out + Poly::term(reduced, c);
    });
    return out;
}

}  // namespace

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(BigInt(1));
        return;
    }
    // Structural collapses keep chained products from accreting X/X factors.
    if (num_ == den_) {
        num_ = Poly(BigInt(1));
        den_ = Poly(BigInt(1));
        return;
    }
    if (num_ == -den_) {
        num_ = Poly(BigInt(-1));
        den_ = Poly(BigInt(1));
        return;
    }
    // Common monomial content (min exponents across num and den jointly):
    // still far short of a multivariate gcd, but removes the pure-power
    // factors that unreduced arithmetic accumulates.
    if (!den_.is_constant() || !num_.is_constant()) {
        auto gn = monomial_content(num_);
        if (!gn.empty()) {
            auto gd = monomial_content(den_);
            std::vector<std::pair<VarId, int>> g;
            for (const auto& [id, e] : gn)
                for (const auto& [id2, e2] : gd)
                    if (id == id2) g.emplace_back(id, std::min(e, e2));
            if (!g.empty()) {
                num_ = strip_monomial(num_, g);
                den_ = strip_monomial(den_, g);
            }
        }
    }
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading().second < 0) g = -g;
    if (g != 1) {
        num_ = num_.divided_by_int(g);
        den_ = den_.divided_by_int(g);
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar out;
    if (den_ == o.den_) {
        out.num_ = num_ + o.num_;
        out.den_ = den_;
    } else if (den_.is_one()) {
        out.num_ = num_ * o.den_ + o.num_;
        out.den_ = o.den_;
    } else if (o.den_.is_one()) {
        out.num_ = num_ + o.num_ * den_;
        out.den_ = den_;
    } else {
        out.num_ = num_ * o.den_ + o.num_ * den_;
        out.den_ = den_ * o.den_;
    }
    out.normalize();
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // Structural cross-cancellation: (a/b)(b/c) = a/c and friends.
    const Poly *n1 = &num_, *d1 = &den_, *n2 = &o.num_, *d2 = &o.den_;
    Poly onep(BigInt(1));
    if (*n1 == *d2 && *n2 == *d1) return Scalar(1);
    if (*n1 == *d2) {
        n1 = &onep;
        d2 = &onep;
    } else if (*n2 == *d1) {
        n2 = &onep;
        d1 = &onep;
    }
    Scalar out;
    out.num_ = *n1 * *n2;
    out.den_ = *d1 * *d2;
    out.normalize();
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivideByZeroError("inverse of the zero scalar");
    Scalar out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inv() : *this;
    int n = e < 0 ? -e : e;
    Scalar acc(1);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

bool Scalar::equals(const Scalar& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

namespace {

Scalar subst_poly(const Poly& p, const std::map<VarId, Scalar>& bindings) {
    // Powers of each bound value are memoized per call.
    std::map<VarId, std::vector<Scalar>> powcache;
    auto power = [&](VarId id, int e) -> const Scalar& {
        auto& vec = powcache[id];
        if (vec.empty()) vec.push_back(Scalar(1));
        while (static_cast<int>(vec.size()) <= e)
            vec.push_back(vec.back() * bindings.at(id));
        return vec[static_cast<std::size_t>(e)];
    };
    Scalar acc;
    p.for_each([&](const Monomial& m, const BigInt& c) {
        Monomial unbound;
        Scalar factor(c);
        for (const auto& [id, e] : m.powers()) {
            if (bindings.count(id))
                factor = factor * power(id, e);
            else
                unbound = unbound.times(Monomial::var(id, e));
        }
        if (!unbound.is_one()) factor = factor * Scalar(Poly::term(unbound, BigInt(1)));
        acc = acc + factor;
    });
    return acc;
}

}  // namespace

Scalar Scalar::subst(const std::map<VarId, Scalar>& bindings) const {
    Scalar n = subst_poly(num_, bindings);
    Scalar d = subst_poly(den_, bindings);
    if (d.is_zero())
        throw PoleError("substitution makes a denominator vanish identically");
    return n / d;
}

BigRat Scalar::eval(const std::map<VarId, BigRat>& point) const {
    auto eval_poly = [&](const Poly& p) -> BigRat {
        BigRat acc = 0;
        p.for_each([&](const Monomial& m, const BigInt& c) {
            BigRat t(c);
            for (const auto& [id, e] : m.powers()) {
                auto it = point.find(id);
                if (it == point.end())
                    throw InvariantError("eval: unbound indeterminate " + names::str(id));
                BigRat base = it->second;
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        });
        return acc;
    };
    BigRat d = eval_poly(den_);
    if (d == 0) throw PoleError("evaluation point hits a denominator zero");
    return eval_poly(num_) / d;
}

void Scalar::collect_vars(std::map<VarId, int>& into) const {
    auto walk = [&](const Poly& p) {
        p.for_each([&](const Monomial& m, const BigInt&) {
            for (const auto& [id, e] : m.powers()) {
                auto [it, fresh] = into.emplace(id, e);
                if (!fresh) it->second = std::max(it->second, e);
            }
        });
    };
    walk(num_);
    walk(den_);
}

Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace reflectk
