#pragma once

#include <symcone/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symcone {

/// Exponent vector over (a0, a1, ...) with trailing zeros trimmed.
using Monomial = std::vector<std::uint16_t>;

/// Graded lexicographic comparison: true when lhs > rhs.
struct GrlexGreater {
  bool operator()(const Monomial &lhs, const Monomial &rhs) const;
};

/// Sparse polynomial in the equivariant parameters with rational
/// coefficients. Terms are kept in descending graded-lex order, so the first
/// term is the leading term.
class AlphaPoly {
public:
  using Terms = std::map<Monomial, BigRational, GrlexGreater>;

  AlphaPoly() = default;
  AlphaPoly(const BigRational &c); // NOLINT: constants convert implicitly
  AlphaPoly(long c) : AlphaPoly(BigRational(c)) {} // NOLINT
  static AlphaPoly variable(std::size_t i);
  /// sum_i coeffs[i] * a_i.
  static AlphaPoly linear(const std::vector<BigRational> &coeffs);
  static AlphaPoly from_terms(Terms terms);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  int total_degree() const;
  /// Highest variable index present plus one.
  std::size_t variable_count() const;
  const Monomial &leading_monomial() const;
  const BigRational &leading_coefficient() const;
  /// Coefficient of a_i in the degree-one part.
  BigRational linear_coefficient(std::size_t i) const;

  AlphaPoly monic() const;
  AlphaPoly operator-() const;
  AlphaPoly &operator+=(const AlphaPoly &o);
  AlphaPoly &operator-=(const AlphaPoly &o);
  AlphaPoly &operator*=(const AlphaPoly &o);
  AlphaPoly &operator*=(const BigRational &c);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly &b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly &b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly &a, const AlphaPoly &b);
  friend AlphaPoly operator*(AlphaPoly a, const BigRational &c) { return a *= c; }
  AlphaPoly pow(unsigned e) const;

  /// Quotient when `divisor` divides this exactly, otherwise nullopt.
  /// Throws DivByZero on a zero divisor.
  std::optional<AlphaPoly> divide_exact(const AlphaPoly &divisor) const;

  BigRational evaluate(const std::vector<BigRational> &alpha) const;
  std::string to_string() const;

  friend bool operator==(const AlphaPoly &a, const AlphaPoly &b);
  friend bool operator<(const AlphaPoly &a, const AlphaPoly &b);

private:
  Terms terms_;
};

/// Rational function in the equivariant parameters. The denominator is kept
/// as a product of monic nonconstant factors; linear factors are irreducible,
/// so for the denominators produced by this library the form is reduced and
/// canonical.
class AlphaRat {
public:
  using Factors = std::map<AlphaPoly, int>;

  AlphaRat() = default;
  AlphaRat(const AlphaPoly &num); // NOLINT
  AlphaRat(const BigRational &c) : AlphaRat(AlphaPoly(c)) {} // NOLINT
  AlphaRat(long c) : AlphaRat(AlphaPoly(c)) {}               // NOLINT
  /// num / prod(factors); factors are normalized and cancelled.
  AlphaRat(const AlphaPoly &num, const Factors &den);

  const AlphaPoly &numerator() const { return num_; }
  const Factors &denominator_factors() const { return den_; }
  AlphaPoly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Numerator when the denominator is trivial.
  std::optional<AlphaPoly> as_polynomial() const;

  AlphaRat operator-() const;
  AlphaRat &operator+=(const AlphaRat &o);
  AlphaRat &operator-=(const AlphaRat &o);
  AlphaRat &operator*=(const AlphaRat &o);
  /// Throws DivByZero.
  AlphaRat &operator/=(const AlphaRat &o);
  friend AlphaRat operator+(AlphaRat a, const AlphaRat &b) { return a += b; }
  friend AlphaRat operator-(AlphaRat a, const AlphaRat &b) { return a -= b; }
  friend AlphaRat operator*(AlphaRat a, const AlphaRat &b) { return a *= b; }
  friend AlphaRat operator/(AlphaRat a, const AlphaRat &b) { return a /= b; }
  AlphaRat inverse() const;
  AlphaRat pow(int e) const;

  /// Throws DivByZero when the denominator vanishes at `alpha`.
  BigRational evaluate(const std::vector<BigRational> &alpha) const;
  std::size_t variable_count() const;
  std::string to_string() const;

  friend bool operator==(const AlphaRat &a, const AlphaRat &b);

private:
  void cancel_against(const Factors &candidates);

  AlphaPoly num_;
  Factors den_;
};

/// A linear form sum c_i a_i, stored as scale * direction where direction is
/// an integer vector of content 1 whose first nonzero entry is positive.
class LinearForm {
public:
  LinearForm() = default;
  explicit LinearForm(std::vector<BigRational> coeffs);
  /// Throws ShapeMismatch if `p` is not homogeneous of degree <= 1.
  static LinearForm from_poly(const AlphaPoly &p);
  /// (a_i - a_j) * scale.
  static LinearForm difference(std::size_t i, std::size_t j,
                               const BigRational &scale = 1);

  const std::vector<BigRational> &coefficients() const { return coeffs_; }
  const std::vector<BigInt> &direction() const { return direction_; }
  const BigRational &scale() const { return scale_; }
  bool is_zero() const { return direction_.empty(); }
  bool same_direction(const LinearForm &o) const;

  AlphaPoly to_poly() const;
  LinearForm scaled(const BigRational &c) const;
  std::string to_string() const;

  friend bool operator==(const LinearForm &a, const LinearForm &b) {
    return a.direction_ == b.direction_ && a.scale_ == b.scale_;
  }
  friend bool operator<(const LinearForm &a, const LinearForm &b);

private:
  std::vector<BigRational> coeffs_; // trimmed
  std::vector<BigInt> direction_;   // trimmed; empty for the zero form
  BigRational scale_ = 0;
};

/// Rational function of z over AlphaRat. The denominator is
/// prod_w (z - w)^m over pole locations w (linear forms, z = 0 included)
/// times an optional monic "irregular" z-polynomial that could not be split
/// into such factors.
class ZRat {
public:
  using Poly = std::vector<AlphaRat>; // dense, index = power of z
  using Poles = std::map<LinearForm, int>;

  ZRat() = default;
  ZRat(const AlphaRat &c); // NOLINT
  ZRat(const AlphaPoly &c) : ZRat(AlphaRat(c)) {} // NOLINT
  ZRat(long c) : ZRat(AlphaRat(c)) {}             // NOLINT
  static ZRat z();
  /// z^n for any integer n.
  static ZRat z_power(int n);
  /// 1 / (z - w)^m.
  static ZRat pole(const LinearForm &w, int m = 1);
  /// 1 / (c - g z), g != 0.
  static ZRat inverse_linear(const AlphaPoly &c, const BigRational &g);
  static ZRat from_parts(Poly num, Poles poles, Poly irregular = {});

  const Poly &numerator() const { return num_; }
  const Poles &poles() const { return poles_; }
  const Poly &irregular() const { return irregular_; }
  bool has_irregular() const { return irregular_.size() > 1; }
  bool is_zero() const { return num_.empty(); }
  int numerator_degree() const { return static_cast<int>(num_.size()) - 1; }
  int denominator_degree() const;

  ZRat operator-() const;
  ZRat &operator+=(const ZRat &o);
  ZRat &operator-=(const ZRat &o);
  ZRat &operator*=(const ZRat &o);
  ZRat &operator/=(const ZRat &o);
  friend ZRat operator+(ZRat a, const ZRat &b) { return a += b; }
  friend ZRat operator-(ZRat a, const ZRat &b) { return a -= b; }
  friend ZRat operator*(ZRat a, const ZRat &b) { return a *= b; }
  friend ZRat operator/(ZRat a, const ZRat &b) { return a /= b; }

  /// Evaluates at alpha and z; throws DivByZero at a pole.
  BigRational evaluate(const std::vector<BigRational> &alpha,
                       const BigRational &z) const;
  std::size_t variable_count() const;
  std::string to_string() const;

  friend bool operator==(const ZRat &a, const ZRat &b);

private:
  void reduce();

  Poly num_;
  Poles poles_;
  Poly irregular_;
};

/// Coefficients of u^k, k = kmin..kmax, of f(z = w - u).
/// Throws DegeneratePole when the irregular denominator vanishes at w.
std::vector<AlphaRat> laurent_coefficients(const ZRat &f, const LinearForm &w,
                                           int kmin, int kmax);
AlphaRat laurent_at(const ZRat &f, const LinearForm &w, int k);
/// Pole order of f at z = w (0 when regular).
int pole_order(const ZRat &f, const LinearForm &w);

struct PoleSupport {
  std::vector<std::pair<LinearForm, int>> poles; // excluding z = 0
  int order_at_zero = 0;
  /// deg(numerator) - deg(denominator); f grows like z^degree at infinity.
  int degree_at_infinity = 0;
};

/// Throws NonLinearPole when part of the denominator is not a product of
/// z-linear factors.
PoleSupport pole_support(const ZRat &f);

/// Exact value at explicit parameters; throws DivByZero.
BigRational specialize(const AlphaRat &f, const std::vector<BigRational> &alpha);

struct Specialization {
  std::vector<BigRational> alpha;
  BigRational z;
  BigRational value;
};

/// Draws pairwise distinct small rationals for alpha (and z) from `seed`,
/// retrying when a denominator vanishes. Throws SpecializationFailed after
/// `retries` attempts.
Specialization random_specialize(const AlphaRat &f, std::size_t nvars,
                                 std::uint64_t seed, int retries = 16);
Specialization random_specialize(const ZRat &f, std::size_t nvars,
                                 std::uint64_t seed, int retries = 16);
/// Random point with pairwise distinct coordinates.
std::vector<BigRational> random_point(std::size_t nvars, std::uint64_t seed);

} // namespace symcone
