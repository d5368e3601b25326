#include <alexlab/bigpoly.hpp>

#include <alexlab/error.hpp>
#include <alexlab/intmatrix.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>

namespace alexlab {

BigInt parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::SyntaxError, "empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(ErrorCode::SyntaxError, "bad integer literal '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::cyclic_modulus(std::size_t n) {
  std::vector<BigInt> v(n + 1, BigInt(0));
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::substitute_power(std::size_t v) const {
  if (v == 0) throw Error(ErrorCode::InvalidArgument, "substitute_power needs v >= 1");
  if (is_zero()) return {};
  std::vector<BigInt> out((coeffs_.size() - 1) * v + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * v] = coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

// ---------------------------------------------------------------------------
// Laurent forms

long LaurentPoly::make_polynomial() {
  if (body.is_zero()) {
    low_degree = 0;
    return 0;
  }
  std::size_t k = 0;
  while (body.coeff(k) == 0) ++k;
  std::vector<BigInt> c(body.coeffs().begin() + static_cast<std::ptrdiff_t>(k), body.coeffs().end());
  body = IntPoly(std::move(c));
  const long removed = low_degree + static_cast<long>(k);
  low_degree = 0;
  return removed;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(a.body * b.body, a.low_degree + b.low_degree);
}

namespace {

LaurentPoly add_aligned(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  if (a.is_zero()) return subtract ? LaurentPoly(-b.body, b.low_degree) : b;
  if (b.is_zero()) return a;
  const long low = std::min(a.low_degree, b.low_degree);
  IntPoly x = a.body * IntPoly::monomial(1, static_cast<std::size_t>(a.low_degree - low));
  IntPoly y = b.body * IntPoly::monomial(1, static_cast<std::size_t>(b.low_degree - low));
  return LaurentPoly(subtract ? x - y : x + y, low);
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add_aligned(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add_aligned(a, b, true); }

// ---------------------------------------------------------------------------
// Division

namespace {

std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<BigInt> r = f.coeffs();
  const std::size_t dg = g.size() - 1;
  std::vector<BigInt> q(r.size() - dg, BigInt(0));
  const BigInt& lg = g.leading();
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == 0) continue;
    if (!divides(lg, r[k])) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), lg.get_mpz_t());
    const std::size_t shift = k - dg;
    q[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j)
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < dg; ++k)
    if (r[k] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly divide_scalar(const IntPoly& f, const BigInt& c) {
  std::vector<BigInt> out = f.coeffs();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivideByZero, "division by the zero polynomial");
  auto q = try_exact_div(f, g);
  if (!q) throw Error(ErrorCode::NotDivisible, to_string(g) + " does not divide " + to_string(f));
  return *std::move(q);
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivideByZero, "division by the zero polynomial");
  if (abs(g.leading()) != 1) throw Error(ErrorCode::InvalidArgument, "divisor is not monic up to sign");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  std::vector<BigInt> r = f.coeffs();
  const std::size_t dg = g.size() - 1;
  std::vector<BigInt> q(r.size() - dg, BigInt(0));
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == 0) continue;
    BigInt c = r[k] * g.leading();  // lc = +-1 is its own inverse
    const std::size_t shift = k - dg;
    q[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j)
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivideByZero, "pseudo-division by zero");
  if (f.degree() < g.degree()) return f;
  const BigInt& lg = g.leading();
  long e = f.degree() - g.degree() + 1;
  IntPoly r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    IntPoly term = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - g.degree())) * g;
    r = r * lg - term;
    --e;
  }
  return r * pow_big(lg, static_cast<unsigned long>(e));
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) g = gcd_of(g, c);
  return g;
}

// ---------------------------------------------------------------------------
// Resultants

std::vector<std::vector<BigInt>> sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sylvester matrix of zero polynomial");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const std::size_t e = static_cast<std::size_t>(g.degree());
  const std::size_t size = d + e;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t k = 0; k <= d; ++k) s[i][i + k] = f.coeff(d - k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k <= e; ++k) s[e + i][i + k] = g.coeff(e - k);
  return s;
}

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  auto s = sylvester_matrix(f, g);
  const std::size_t n = s.size();
  return determinant(IntMatrix(std::move(s), n));
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  if (f.degree() == 0) return pow_big(f.constant_term(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return pow_big(g.constant_term(), static_cast<unsigned long>(f.degree()));

  // Subresultant pseudo-remainder sequence over Z.
  const BigInt ca = content(f);
  const BigInt cb = content(g);
  IntPoly a = divide_scalar(f, ca);
  IntPoly b = divide_scalar(g, cb);
  BigInt scale = pow_big(ca, static_cast<unsigned long>(b.degree())) *
                 pow_big(cb, static_cast<unsigned long>(a.degree()));
  BigInt gg = 1, h = 1;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = divide_scalar(r, gg * pow_big(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta > 0) {
      BigInt num = pow_big(gg, static_cast<unsigned long>(delta));
      BigInt den = pow_big(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const unsigned long da = static_cast<unsigned long>(a.degree());
  BigInt num = pow_big(b.leading(), da);
  BigInt den = pow_big(h, da - 1);
  mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return sign * scale * h;
}

// ---------------------------------------------------------------------------
// Cyclotomics

unsigned long euler_phi(unsigned long m) {
  if (m == 0) return 0;
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(long m) {
  if (m < 1) throw Error(ErrorCode::InvalidIndex, "cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly acc = IntPoly::cyclic_modulus(static_cast<std::size_t>(m));
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) acc = exact_div(acc, cyclotomic(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(acc)).first->second;
}

bool is_reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_reciprocal of zero polynomial");
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

NormalizedPoly normalize_unit(const LaurentPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "normalize_unit of zero polynomial");
  LaurentPoly g = f;
  const long shift = g.make_polynomial();
  const int sign = g.body.leading() < 0 ? -1 : 1;
  if (sign < 0) g.body = -g.body;
  return {std::move(g.body), LaurentUnit{sign, shift}};
}

NormalizedPoly normalize_unit(const IntPoly& f) { return normalize_unit(LaurentPoly(f, 0)); }

std::vector<unsigned long> cyclotomic_divisors(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cyclotomic_divisors of zero polynomial");
  std::vector<unsigned long> out;
  const unsigned long d = static_cast<unsigned long>(f.degree());
  if (d == 0) return out;
  // phi(m) >= sqrt(m / 2), so phi(m) <= d forces m <= 2 d^2.
  const unsigned long bound = 2 * d * d + 2;
  for (unsigned long m = 1; m <= bound; ++m) {
    if (euler_phi(m) > d) continue;
    if (try_exact_div(f, cyclotomic(static_cast<long>(m)))) out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string normalize_minus(const std::string& in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x88 && static_cast<unsigned char>(in[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(in[i]))) {
      out.push_back(in[i]);
    }
  }
  return out;
}

class TermParser {
 public:
  explicit TermParser(std::string s) : s_(std::move(s)) {}

  LaurentPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    std::map<long, BigInt> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exp] = term();
      terms[exp] += sign * coef;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    if (terms.empty()) return {};
    const long low = terms.begin()->first;
    const long high = terms.rbegin()->first;
    std::vector<BigInt> c(static_cast<std::size_t>(high - low + 1), BigInt(0));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - low)] = v;
    return LaurentPoly(IntPoly(std::move(c)), low);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.empty() || d.size() > 9) fail("bad exponent");
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    const long e = std::stol(d);
    return neg ? -e : e;
  }

  std::pair<BigInt, long> term() {
    BigInt coef = 1;
    std::string d = digits();
    bool have_coef = !d.empty();
    if (have_coef) coef = BigInt(d, 10);
    if (have_coef && peek() == '*') {
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    if (peek() == 't') {
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      }
      return {coef, e};
    }
    if (!have_coef) fail("expected a term");
    return {coef, 0};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string format_terms(const std::vector<BigInt>& c, long low) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const long e = low + static_cast<long>(k);
    BigInt mag = abs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += to_decimal(mag);
      continue;
    }
    if (mag != 1) out += to_decimal(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) { return TermParser(normalize_minus(text)).parse(); }

IntPoly parse_poly(const std::string& text) {
  LaurentPoly l = parse_laurent(text);
  if (l.low_degree < 0) throw Error(ErrorCode::SyntaxError, "negative exponent in '" + text + "'");
  return l.body * IntPoly::monomial(1, static_cast<std::size_t>(l.low_degree));
}

std::string to_string(const IntPoly& f) { return format_terms(f.coeffs(), 0); }

std::string to_string(const LaurentPoly& f) { return format_terms(f.body.coeffs(), f.low_degree); }

}  // namespace alexlab
