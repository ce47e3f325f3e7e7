#pragma once

// Exact Laurent polynomials over Q (with Z as the integral sub-ring), the
// field of rational functions Q(t), and canonical classes in Q(t)/Z[t^±1].

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation would need a value that is not defined
/// (division by zero, a zero determinant where a unit is required, ...).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingTag { IntegerCoeffs, RationalCoeffs };

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Sparse Laurent polynomial sum_e c_e t^e with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}  // NOLINT
  LaurentPolynomial(const Integer& c) : LaurentPolynomial(Rational(c)) {}  // NOLINT
  LaurentPolynomial(const Rational& c) {  // NOLINT
    if (c != 0) terms_.emplace(0, c);
  }
  LaurentPolynomial(std::initializer_list<std::pair<const int, Rational>> terms)
      : LaurentPolynomial(Terms(terms)) {}
  explicit LaurentPolynomial(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  }

  static LaurentPolynomial monomial(const Rational& c, int exponent) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
  }
  static LaurentPolynomial t(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exponent() const {
    if (is_zero()) throw DegenerateError("min_exponent of zero polynomial");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    if (is_zero()) throw DegenerateError("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }
  /// Width max - min of the exponent support; the Euclidean size on Q[t^±1].
  int span() const { return max_exponent() - min_exponent(); }

  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Rational& leading_coefficient() const {
    if (is_zero()) throw DegenerateError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
  }
  const Rational& trailing_coefficient() const {
    if (is_zero()) throw DegenerateError("trailing coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  RingTag ring() const {
    for (const auto& [e, c] : terms_)
      if (!is_integral(c)) return RingTag::RationalCoeffs;
    return RingTag::IntegerCoeffs;
  }

  /// Multiplication by t^n.
  LaurentPolynomial shifted(int n) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + n, c);
    return out;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    if (is_zero()) return acc;
    if (x == 0) {
      if (min_exponent() < 0) throw DegenerateError("evaluating t^-n at t = 0");
      return coefficient(0);
    }
    for (const auto& [e, c] : terms_) {
      Rational pw = 1;
      Rational base = e >= 0 ? x : Rational(1 / x);
      for (int i = 0; i < (e >= 0 ? e : -e); ++i) pw *= base;
      acc += c * pw;
    }
    return acc;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    Terms acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    return LaurentPolynomial(std::move(acc));
  }
  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& p) {
    if (s == 0) return {};
    LaurentPolynomial out = p;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

/// t ↦ t^{-1} on exponents; coefficients untouched.
inline LaurentPolynomial involute(const LaurentPolynomial& p) {
  LaurentPolynomial::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(-e, c);
  return LaurentPolynomial(std::move(out));
}

/// Multiply by the unit ±t^n of Z[t^±1] that makes p an ordinary polynomial
/// with positive constant term.
inline LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DegenerateError("normalize_alexander: zero polynomial (degenerate presentation)");
  LaurentPolynomial out = p.shifted(-p.min_exponent());
  if (out.coefficient(0) < 0) out = -out;
  return out;
}

/// Canonical associate over Q[t^±1]: ordinary monic polynomial with nonzero
/// constant term. Zero maps to zero.
inline LaurentPolynomial monic_associate(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading_coefficient()) * p.shifted(-p.min_exponent());
}

/// True iff p and q differ by a unit c·t^n of Q[t^±1].
inline bool associates(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return monic_associate(p) == monic_associate(q);
}

/// Polynomial long division in Q[t]. Both arguments must be ordinary
/// polynomials and the divisor nonzero.
inline std::pair<LaurentPolynomial, LaurentPolynomial> poly_divmod(const LaurentPolynomial& a,
                                                                    const LaurentPolynomial& b) {
  if (b.is_zero()) throw DegenerateError("division by zero polynomial");
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("poly_divmod expects ordinary polynomials");
  LaurentPolynomial q, r = a;
  const int db = b.max_exponent();
  const Rational inv_lead = 1 / b.leading_coefficient();
  while (!r.is_zero() && r.max_exponent() >= db) {
    const int shift = r.max_exponent() - db;
    LaurentPolynomial term = LaurentPolynomial::monomial(r.leading_coefficient() * inv_lead, shift);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

/// Extended Euclid in Q[t] on ordinary polynomials: returns {g, x, y} with
/// x·a + y·b = g and g monic (or zero when a = b = 0).
struct GcdResult {
  LaurentPolynomial gcd, x, y;
};

inline GcdResult poly_ext_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading_coefficient();
  return {inv * r0, inv * s0, inv * t0};
}

namespace detail {

// p = t^{min} · body with body(0) != 0
inline std::pair<int, LaurentPolynomial> split_unit(const LaurentPolynomial& p) {
  const int m = p.min_exponent();
  return {m, p.shifted(-m)};
}

}  // namespace detail

/// Division with remainder in Q[t^±1] by a divisor s that is an ordinary
/// polynomial with s(0) != 0. Returns {q, r} with a = q·s + r and r the
/// unique ordinary polynomial of degree < deg s in the class of a.
inline std::pair<LaurentPolynomial, LaurentPolynomial> laurent_divmod(const LaurentPolynomial& a,
                                                                      const LaurentPolynomial& s) {
  if (s.is_zero()) throw DegenerateError("division by zero polynomial");
  if (!s.is_polynomial() || s.coefficient(0) == 0)
    throw std::invalid_argument("laurent_divmod divisor must be a polynomial with nonzero constant term");
  if (a.is_zero()) return {{}, {}};
  const int low = a.min_exponent();
  if (low >= 0) return poly_divmod(a, s);
  // a = t^low · body; reduce body · (t^{-1} mod s)^{|low|} modulo s.
  const LaurentPolynomial body = a.shifted(-low);
  const auto [q0, r0] = poly_divmod(body, s);
  LaurentPolynomial r = r0;
  if (s.max_exponent() > 0) {
    // t·u ≡ 1 mod s with u = (1 - s/s(0)) / t
    const LaurentPolynomial u = (LaurentPolynomial(1) - Rational(1 / s.coefficient(0)) * s).shifted(-1);
    for (int i = 0; i < -low; ++i) r = poly_divmod(r * u, s).second;
  } else {
    r = {};
  }
  // body - t^{-low} r is divisible by s
  const LaurentPolynomial q = poly_divmod(body - r.shifted(-low), s).first.shifted(low);
  return {q, r};
}

/// Exact division in Q[t^±1]; throws when b does not divide a.
inline LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw DegenerateError("division by zero polynomial");
  if (a.is_zero()) return {};
  const auto [bm, bbody] = detail::split_unit(b);
  const auto [q, r] = laurent_divmod(a, bbody);
  if (!r.is_zero()) throw std::domain_error("exact_divide: divisor does not divide dividend");
  return q.shifted(-bm);
}

/// Extended gcd in the PID Q[t^±1]: {g, x, y} with x·a + y·b = g and g the
/// monic associate (ordinary, nonzero constant term).
inline GcdResult laurent_ext_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {{}, {}, {}};
  if (b.is_zero()) {
    const auto [m, body] = detail::split_unit(a);
    const Rational inv = 1 / body.leading_coefficient();
    return {inv * body, LaurentPolynomial::monomial(inv, -m), {}};
  }
  if (a.is_zero()) {
    const auto [m, body] = detail::split_unit(b);
    const Rational inv = 1 / body.leading_coefficient();
    return {inv * body, {}, LaurentPolynomial::monomial(inv, -m)};
  }
  const auto [ma, abody] = detail::split_unit(a);
  const auto [mb, bbody] = detail::split_unit(b);
  GcdResult g = poly_ext_gcd(abody, bbody);
  return {g.gcd, g.x.shifted(-ma), g.y.shifted(-mb)};
}

inline LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return monic_associate(b);
  if (b.is_zero()) return monic_associate(a);
  LaurentPolynomial r0 = detail::split_unit(a).second, r1 = detail::split_unit(b).second;
  while (!r1.is_zero()) r0 = std::exchange(r1, poly_divmod(r0, r1).second);
  return monic_associate(r0);
}

/// Element of Q(t) stored as num/den with den monic, den(0) != 0 and
/// gcd(num, den) = 1 in Q[t^±1]; all units t^n live in the numerator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(LaurentPolynomial(c)) {}  // NOLINT
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den) {
    if (den.is_zero()) throw DegenerateError("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = 1;
      return;
    }
    const auto [m, body] = detail::split_unit(den);
    const Rational inv = 1 / body.leading_coefficient();
    num = inv * num.shifted(-m);
    den = inv * body;
    const LaurentPolynomial g = laurent_gcd(num, den);
    if (!g.is_one()) {
      num = exact_divide(num, g);
      den = poly_divmod(den, g).first;
    }
    num_ = std::move(num);
    den_ = std::move(den);
  }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DegenerateError("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

inline RationalFunction involute(const RationalFunction& f) {
  return {involute(f.numerator()), involute(f.denominator())};
}

/// f ∈ Z[t^±1]?
inline bool lambda_membership(const RationalFunction& f) {
  return f.is_laurent() && f.numerator().ring() == RingTag::IntegerCoeffs;
}

/// Canonical element of Q(t)/Z[t^±1].
///
/// Every f ∈ Q(t) splits uniquely as f = q + r/s with q ∈ Q[t^±1], s monic
/// with s(0) != 0 and r an ordinary polynomial with deg r < deg s. The class
/// of f is stored as (frac(q), r/s) where frac reduces each coefficient of q
/// into [0, 1). When q is integral this is just the proper part r/s.
class TorsionClass {
 public:
  TorsionClass() = default;

  const LaurentPolynomial& fractional_part() const { return fractional_; }
  const RationalFunction& proper_part() const { return proper_; }
  bool is_zero() const { return fractional_.is_zero() && proper_.is_zero(); }

  /// fractional_part + proper_part, as an element of Q(t).
  RationalFunction representative() const { return RationalFunction(fractional_) + proper_; }

  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

  friend TorsionClass torsion_reduce(const RationalFunction& f);

 private:
  LaurentPolynomial fractional_;
  RationalFunction proper_;
};

inline TorsionClass torsion_reduce(const RationalFunction& f) {
  TorsionClass out;
  if (f.is_zero()) return out;
  auto [q, r] = laurent_divmod(f.numerator(), f.denominator());
  LaurentPolynomial::Terms frac;
  for (const auto& [e, c] : q.terms()) frac.emplace(e, c - Rational(floor_of(c)));
  out.fractional_ = LaurentPolynomial(std::move(frac));
  if (!r.is_zero()) out.proper_ = RationalFunction(r, f.denominator());
  return out;
}

inline TorsionClass operator+(const TorsionClass& a, const TorsionClass& b) {
  return torsion_reduce(a.representative() + b.representative());
}
inline TorsionClass operator-(const TorsionClass& a) { return torsion_reduce(-a.representative()); }
inline TorsionClass operator-(const TorsionClass& a, const TorsionClass& b) { return a + (-b); }

/// Multiplication of a class by an element of Z[t^±1] (the Λ-module action).
inline TorsionClass operator*(const LaurentPolynomial& p, const TorsionClass& c) {
  if (p.ring() != RingTag::IntegerCoeffs)
    throw std::invalid_argument("Q(t)/Z[t^±1] is only a module over Z[t^±1]");
  return torsion_reduce(RationalFunction(p) * c.representative());
}

/// Class of the involuted representative.
inline TorsionClass conjugate(const TorsionClass& c) { return torsion_reduce(involute(c.representative())); }

}  // namespace knotlab
