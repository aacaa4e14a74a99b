#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace chromaroot {

using BigInt = mpz_class;
// mpq_class keeps denominators positive and fractions reduced, which is
// exactly the invariant the code relies on for sign decisions.
using Rational = mpq_class;

// Dense integer-coefficient univariate polynomial, ascending degree,
// trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt c);
    // Coefficients listed from the leading term down, e.g.
    // descending({1, -2, 4, -4}) is t^3 - 2t^2 + 4t - 4.
    static IntPoly descending(std::initializer_list<long> coeffs);
    static IntPoly one() { return constant(1); }
    static IntPoly t();  // the monomial t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int k) const;  // zero-safe accessor
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& k) const;
    bool operator==(const IntPoly&) const = default;

    IntPoly derivative() const;

    // Exact value at a rational point (Horner over rationals).
    Rational operator()(const Rational& t) const;
    // Sign of the value at a rational point, via homogenised integer
    // evaluation (no rational normalisation in the loop).
    int sign_at(const Rational& t) const;

    // Exact division; throws std::logic_error if the division leaves a
    // remainder or fractional coefficients.
    IntPoly divide_exact(const IntPoly& divisor) const;
    // Divide by the positive content (gcd of coefficients).
    IntPoly primitive_part() const;
    // Primitive gcd with positive leading coefficient.
    static IntPoly gcd(IntPoly a, IntPoly b);
    // p / gcd(p, p'): same distinct roots, all simple.
    IntPoly squarefree_part() const;
    // Exact division by (den*t - num) for the rational root num/den.
    IntPoly deflate_root(const Rational& root) const;

    // Human-readable form, descending: "t^3-2*t^2+4*t-4".
    std::string to_string() const;

private:
    std::vector<BigInt> c_;
    void trim();
};

// Named operation aliases for the evaluation entry point.
Rational eval(const IntPoly& p, const Rational& t);

// Sturm chain of a polynomial; reusable across many queries.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    // Distinct real roots in (lo, hi]. Requires p(lo) != 0 != p(hi).
    int count(const Rational& lo, const Rational& hi) const;
    int variations_at(const Rational& x) const;

private:
    std::vector<IntPoly> seq_;
};

// Distinct real roots of p in (lo, hi]; throws
// std::invalid_argument("endpoint is a root; perturb interval") if either
// endpoint is a root.
int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);

// A rational interval certified to contain exactly one simple real root of
// `poly`: lo < hi, sign(poly(lo)) and sign(poly(hi)) nonzero and opposite,
// Sturm count 1.
struct RootInterval {
    IntPoly poly;
    Rational lo;
    Rational hi;
    bool simple_root_certified = true;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

// Isolating intervals for all real roots of p strictly inside (lo, hi),
// ascending. p is reduced to its squarefree part internally; roots exactly
// at lo or hi are excluded. Throws on the zero polynomial.
std::vector<RootInterval> isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

// Bisect until hi - lo < width, preserving the sign certificate.
RootInterval refine(const RootInterval& r, const Rational& width);

// Ordering of certified roots: refines both intervals until they are
// disjoint, or proves the roots equal via a common factor. Returns -1/0/+1.
int compare_roots(const RootInterval& a, const RootInterval& b);
// Root vs exact rational.
int compare_root_to(const RootInterval& a, const Rational& x);

// Exact decimal expansion of x truncated to `digits` fractional digits;
// display only, never used for decisions.
std::string decimal_string(const Rational& x, int digits);

Rational rational_from_decimal(const std::string& text);

}  // namespace chromaroot
