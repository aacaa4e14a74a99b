#include "chromaroot/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromaroot {

namespace {

using RatPoly = std::vector<Rational>;  // ascending, not necessarily trimmed

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

void rat_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b over the rationals.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    rat_trim(a);
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        rat_trim(a);
    }
    return a;
}

// Scale a rational polynomial by a positive constant to a primitive integer
// polynomial (the sign pattern is what Sturm chains care about).
IntPoly to_primitive_int(const RatPoly& p) {
    BigInt den_lcm = 1;
    for (const auto& q : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (const auto& q : p) c.push_back(q.get_num() * (den_lcm / q.get_den()));
    IntPoly out{std::move(c)};
    return out.primitive_part();
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::t() {
    IntPoly p;
    p.c_ = {0, 1};
    return p;
}

IntPoly IntPoly::descending(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c(coeffs.size());
    auto it = coeffs.begin();
    for (std::size_t i = 0; i < coeffs.size(); ++i, ++it) c[coeffs.size() - 1 - i] = *it;
    return IntPoly{std::move(c)};
}

const BigInt& IntPoly::coeff(int k) const {
    static const BigInt zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const BigInt& k) const {
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly{std::move(c)};
}

Rational IntPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

int IntPoly::sign_at(const Rational& t) const {
    if (c_.empty()) return 0;
    // sum of c_i * num^i * den^(d-i)
    const BigInt& num = t.get_num();
    const BigInt& den = t.get_den();
    int d = degree();
    BigInt acc = 0;
    BigInt num_pow = 1;
    std::vector<BigInt> den_pow(d + 1);
    den_pow[0] = 1;
    for (int i = 1; i <= d; ++i) den_pow[i] = den_pow[i - 1] * den;
    for (int i = 0; i <= d; ++i) {
        acc += c_[i] * num_pow * den_pow[d - i];
        num_pow *= num;
    }
    return sgn(acc);
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    RatPoly a = to_rat(*this);
    RatPoly b = to_rat(divisor);
    rat_trim(a);
    RatPoly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quotient[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        rat_trim(a);
    }
    if (!a.empty()) throw std::logic_error("polynomial division is not exact");
    std::vector<BigInt> c;
    c.reserve(quotient.size());
    for (const auto& q : quotient) {
        if (q.get_den() != 1) throw std::logic_error("polynomial division is not exact");
        c.push_back(q.get_num());
    }
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt content = 0;
    for (const auto& c : c_) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / content;
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        RatPoly r = rat_rem(to_rat(a), to_rat(b));
        IntPoly rem = r.empty() ? IntPoly{} : to_primitive_int(r);
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.is_zero() && sgn(a.leading()) < 0) a = -a;
    return a;
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero()) throw std::logic_error("squarefree part of zero polynomial");
    if (degree() == 0) return one();
    IntPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive_part();
    return divide_exact(g).primitive_part();
}

IntPoly IntPoly::deflate_root(const Rational& root) const {
    std::vector<BigInt> divisor_coeffs{-root.get_num(), root.get_den()};
    return divide_exact(IntPoly{std::move(divisor_coeffs)});
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = c_[k];
        if (c == 0) continue;
        bool first = out.empty();
        if (sgn(c) >= 0 && !first) out += "+";
        BigInt abs_c = abs(c);
        if (sgn(c) < 0) out += "-";
        if (k == 0) {
            out += abs_c.get_str();
        } else {
            if (abs_c != 1) out += abs_c.get_str() + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

Rational eval(const IntPoly& p, const Rational& t) { return p(t); }

SturmChain::SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    seq_.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (d.is_zero()) return;
    seq_.push_back(d.primitive_part());
    while (true) {
        const IntPoly& a = seq_[seq_.size() - 2];
        const IntPoly& b = seq_.back();
        RatPoly r = rat_rem(to_rat(a), to_rat(b));
        if (r.empty()) break;
        seq_.push_back(-to_primitive_int(r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("interval endpoints out of order");
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
        throw std::invalid_argument("endpoint is a root; perturb interval");
    return SturmChain(p).count(lo, hi);
}

namespace {

// Certified isolating interval around a known simple rational root m of p,
// contained in (outer_lo, outer_hi) and of width below `cap`.
RootInterval bracket_rational_root(const IntPoly& p, const SturmChain& chain, const Rational& m,
                                   const Rational& outer_lo, const Rational& outer_hi,
                                   const Rational& cap) {
    Rational delta = cap / 4;
    auto shrink_ok = [&](const Rational& a, const Rational& b) {
        if (!(outer_lo < a) || !(b < outer_hi)) return false;
        int sa = p.sign_at(a);
        int sb = p.sign_at(b);
        if (sa == 0 || sb == 0 || sa == sb) return false;
        return chain.count(a, b) == 1;
    };
    while (true) {
        Rational a = m - delta;
        Rational b = m + delta;
        if (shrink_ok(a, b)) return RootInterval{p, a, b, true};
        delta /= 2;
    }
}

void isolate_rec(const IntPoly& p, const SturmChain& chain, const Rational& lo, const Rational& hi,
                 int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        int s_lo = p.sign_at(lo);
        int s_hi = p.sign_at(hi);
        if (s_lo != s_hi && s_lo != 0 && s_hi != 0) {
            out.push_back(RootInterval{p, lo, hi, true});
            return;
        }
        // single root but no sign change cannot happen for squarefree p;
        // fall through to bisection to make progress anyway
    }
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) {
        RootInterval at_mid = bracket_rational_root(p, chain, mid, lo, hi, hi - lo);
        isolate_rec(p, chain, lo, at_mid.lo, chain.count(lo, at_mid.lo), out);
        out.push_back(at_mid);
        isolate_rec(p, chain, at_mid.hi, hi, chain.count(at_mid.hi, hi), out);
        return;
    }
    int left = chain.count(lo, mid);
    isolate_rec(p, chain, lo, mid, left, out);
    isolate_rec(p, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("interval endpoints out of order");
    IntPoly sf = p.squarefree_part();
    // roots exactly at the endpoints are outside the open interval: deflate
    while (sf.degree() > 0 && sf.sign_at(lo) == 0) sf = sf.deflate_root(lo);
    while (sf.degree() > 0 && sf.sign_at(hi) == 0) sf = sf.deflate_root(hi);
    if (sf.degree() <= 0) return {};
    SturmChain chain(sf);
    std::vector<RootInterval> out;
    isolate_rec(sf, chain, lo, hi, chain.count(lo, hi), out);
    return out;
}

RootInterval refine(const RootInterval& r, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refinement width must be positive");
    RootInterval cur = r;
    int s_lo = cur.poly.sign_at(cur.lo);
    if (s_lo == 0 || cur.poly.sign_at(cur.hi) == 0)
        throw std::invalid_argument("endpoint is a root; perturb interval");
    while (cur.hi - cur.lo >= width) {
        Rational mid = (cur.lo + cur.hi) / 2;
        int s_mid = cur.poly.sign_at(mid);
        if (s_mid == 0) {
            // the root is exactly mid: bracket it tightly
            SturmChain chain(cur.poly);
            return bracket_rational_root(cur.poly, chain, mid, cur.lo, cur.hi, width);
        }
        if (s_mid == s_lo)
            cur.lo = mid;
        else
            cur.hi = mid;
    }
    return cur;
}

int compare_root_to(const RootInterval& a, const Rational& x) {
    if (a.hi <= x) {
        // root < x unless the root is exactly x, excluded by hi sign != 0
        if (a.hi < x) return -1;
        return -1;  // hi == x and poly(hi) != 0, so root < x
    }
    if (a.lo >= x) return 1;
    // x lies strictly inside: decide by the sign of poly at x
    int s_x = a.poly.sign_at(x);
    if (s_x == 0) return 0;
    return s_x == a.poly.sign_at(a.lo) ? 1 : -1;
}

int compare_roots(const RootInterval& a, const RootInterval& b) {
    RootInterval ra = a;
    RootInterval rb = b;
    for (int round = 0; round < 512; ++round) {
        if (ra.hi <= rb.lo) return -1;
        if (rb.hi <= ra.lo) return 1;
        // overlapping: equal roots only if the polynomials share a factor
        IntPoly g = IntPoly::gcd(ra.poly, rb.poly);
        if (g.degree() >= 1) {
            Rational lo = std::max(ra.lo, rb.lo);
            Rational hi = std::min(ra.hi, rb.hi);
            if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && SturmChain(g).count(lo, hi) == 1) {
                // both intervals' roots are the unique shared root
                if (SturmChain(ra.poly).count(lo, hi) == 1 && SturmChain(rb.poly).count(lo, hi) == 1)
                    return 0;
            }
        }
        Rational w = std::min(ra.width(), rb.width()) / 4;
        ra = refine(ra, w);
        rb = refine(rb, w);
    }
    throw std::logic_error("root comparison did not converge");
}

std::string decimal_string(const Rational& x, int digits) {
    BigInt num = x.get_num();
    BigInt den = x.get_den();
    bool negative = sgn(num) < 0;
    if (negative) num = -num;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = num * scale / den;  // truncated
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative ? "-" : "") + whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

Rational rational_from_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt numerator = BigInt(whole.empty() || whole == "-" ? "0" : whole) * scale;
    BigInt frac_part(frac.empty() ? "0" : frac);
    numerator += negative ? -frac_part : frac_part;
    Rational out(numerator, scale);
    out.canonicalize();
    return out;
}

}  // namespace chromaroot
