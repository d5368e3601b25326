#pragma once

// Dense integer polynomials with arbitrary-precision coefficients.

#include <alexlab/bigint.hpp>

#include <climits>
#include <cstddef>
#include <string>
#include <vector>

namespace alexlab {

/// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = LONG_MIN;

class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// t^n - 1
  static IntPoly cyclic_modulus(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& constant_term() const { return coeffs_.front(); }

  BigInt evaluate(const BigInt& x) const;
  /// f(t^v) for v >= 1.
  IntPoly substitute_power(std::size_t v) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// A unit of Z[t, t^-1]: sign * t^shift.
struct LaurentUnit {
  int sign = 1;
  long shift = 0;
  friend bool operator==(const LaurentUnit&, const LaurentUnit&) = default;
};

/// body * t^low_degree; the form used for parsing and serialization.
struct LaurentPoly {
  IntPoly body;
  long low_degree = 0;

  LaurentPoly() = default;
  LaurentPoly(IntPoly b, long low = 0) : body(std::move(b)), low_degree(low) {}

  bool is_zero() const noexcept { return body.is_zero(); }
  /// Shifts all exponents so the lowest one is zero; returns the shift removed.
  long make_polynomial();

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
};

struct NormalizedPoly {
  IntPoly canonical;
  LaurentUnit unit;
};

/// q with f = q * g exactly. Throws DivideByZero / NotDivisible.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// Returns (quotient, remainder) when lc(g) = +-1.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& g);

/// lc(g)^(deg f - deg g + 1) * f = q * g + r.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

BigInt content(const IntPoly& f);

/// Resultant via the subresultant pseudo-remainder sequence.
BigInt resultant(const IntPoly& f, const IntPoly& g);
/// Resultant as the fraction-free determinant of the Sylvester matrix.
BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g);

/// Sylvester matrix, rows of f (descending coefficients) above rows of g.
std::vector<std::vector<BigInt>> sylvester_matrix(const IntPoly& f, const IntPoly& g);

unsigned long euler_phi(unsigned long m);
IntPoly cyclotomic(long m);

bool is_reciprocal(const IntPoly& f);

NormalizedPoly normalize_unit(const IntPoly& f);
NormalizedPoly normalize_unit(const LaurentPoly& f);

/// All m with Phi_m | f, ascending.
std::vector<unsigned long> cyclotomic_divisors(const IntPoly& f);

/// Parses e.g. "t^2 - 3t + 1", "2*t^-1 + 5". Throws SyntaxError.
LaurentPoly parse_laurent(const std::string& text);
/// Like parse_laurent but rejects negative exponents.
IntPoly parse_poly(const std::string& text);

std::string to_string(const IntPoly& f);
std::string to_string(const LaurentPoly& f);

}  // namespace alexlab
