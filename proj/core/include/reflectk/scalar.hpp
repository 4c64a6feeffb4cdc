#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "reflectk/errors.hpp"
#include "reflectk/names.hpp"

namespace reflectk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Term-count ceiling for polynomial results. Products of unreduced fractions
/// can grow; hitting the ceiling raises TermLimitError instead of thrashing.
std::size_t max_poly_terms();
void set_max_poly_terms(std::size_t n);

/// Power product of registry indeterminates. No zero exponents are stored;
/// the empty product is the constant monomial.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId id, int exp = 1);

    bool is_one() const { return powers_.empty(); }
    int degree() const;
    int exponent(VarId id) const;
    const std::vector<std::pair<VarId, int>>& powers() const { return powers_; }

    Monomial times(const Monomial& o) const;
    Monomial pow(int e) const;

    /// Graded-lex over the registry order: higher total degree first, then
    /// lexicographic on exponents of the smaller-ranked variable.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return powers_ == o.powers_; }

private:
    // Sorted by ascending registry rank.
    std::vector<std::pair<VarId, int>> powers_;
};

struct MonomialGradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

/// Multivariate polynomial over arbitrary-precision integers.
/// Terms are kept sorted in descending graded-lex order; no zero coefficients.
class Poly {
public:
    using Term = std::pair<Monomial, BigInt>;

    Poly() = default;
    explicit Poly(const BigInt& c);
    explicit Poly(long c) : Poly(BigInt(c)) {}
    static Poly var(VarId id, int exp = 1);
    static Poly term(Monomial m, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    int degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// gcd of all coefficients (positive; 0 for the zero polynomial).
    BigInt content() const;
    Poly divided_by_int(const BigInt& g) const;

    /// Exact division; throws InvariantError when o does not divide *this.
    Poly divexact(const Poly& o) const;

    template <typename F>
    void for_each(F&& f) const {
        for (const auto& [m, c] : terms_) f(m, c);
    }

private:
    std::vector<Term> terms_;
    void check_limit() const;
    friend class Scalar;
};

/// Element of the fraction field of Poly: num/den with den != 0.
/// Fractions are not reduced (no multivariate gcd); only integer content is
/// stripped and the denominator's leading coefficient is kept positive, which
/// makes the representation deterministic. Equality is decided by
/// cross-multiplication, an exact polynomial identity.
class Scalar {
public:
    Scalar() : num_(), den_(BigInt(1)) {}
    Scalar(long n) : num_(BigInt(n)), den_(BigInt(1)) {}  // NOLINT(implicit)
    explicit Scalar(const BigInt& n) : num_(n), den_(BigInt(1)) {}
    explicit Scalar(const BigRat& r);
    Scalar(Poly num, Poly den);
    explicit Scalar(Poly num) : num_(std::move(num)), den_(BigInt(1)) {}

    static Scalar var(VarId id, int exp = 1);  // exp may be negative
    static Scalar of_int(long n) { return Scalar(n); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;       // throws DivideByZeroError on zero
    Scalar pow(int e) const;  // negative exponents via inv

    /// a/b == c/d  iff  a*d - c*b == 0, exactly.
    bool equals(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return equals(o); }

    /// Exact composition. Unbound names pass through. Throws PoleError if the
    /// denominator vanishes identically under the substitution.
    Scalar subst(const std::map<VarId, Scalar>& bindings) const;

    /// Exact rational evaluation with every occurring name bound.
    /// Throws PoleError on a vanishing denominator, InvariantError if some
    /// name is unbound.
    BigRat eval(const std::map<VarId, BigRat>& point) const;

    /// Names occurring in num or den.
    void collect_vars(std::map<VarId, int>& into) const;

private:
    Poly num_, den_;
    void normalize();
};

Scalar operator*(long c, const Scalar& s);

}  // namespace reflectk
