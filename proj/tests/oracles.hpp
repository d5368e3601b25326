#pragma once

// Test-only reference computations. None of these share code paths with the
// library: resultants come from complex roots of unity, determinants from
// the permutation expansion, invariant factors from gcds of minors, and
// ideals in finite layers by listing every element.

#include <alexlab/bigpoly.hpp>
#include <alexlab/quotring.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using alexlab::BigInt;
using alexlab::IntPoly;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random polynomial of exact degree `deg` with coefficients in [-h, h].
inline IntPoly random_poly(long deg, long h) {
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = uniform(-h, h);
  while (c.back() == 0) c.back() = uniform(-h, h);
  return IntPoly(std::move(c));
}

/// (-1)^(deg f * n) * prod_{z^n = 1} f(z), rounded. Good while |value| < 2^50.
inline long cyclic_resultant_complex(const IntPoly& f, std::size_t n) {
  using C = std::complex<long double>;
  C prod = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const long double a = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n);
    const C z = std::polar(1.0L, a);
    C v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * z + C(static_cast<long double>(f.coeffs()[i].get_si()), 0);
    prod *= v;
  }
  long r = std::lround(static_cast<double>(prod.real()));
  if ((f.degree() * static_cast<long>(n)) % 2 != 0) r = -r;
  return r;
}

/// Leibniz expansion over all permutations.
inline BigInt leibniz_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  BigInt total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    BigInt term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Resultant straight from the Sylvester layout (f-rows above g-rows).
inline BigInt sylvester_leibniz(const IntPoly& f, const IntPoly& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<std::vector<BigInt>> s(m + n, std::vector<BigInt>(m + n, BigInt(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  return leibniz_det(s);
}

namespace detail {

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

}  // namespace detail

/// Cokernel of a small integer matrix from determinantal divisors:
/// d_k = gcd of k x k minors, invariant factors d_k / d_(k-1).
inline alexlab::FinAbGroup minors_cokernel(const std::vector<std::vector<BigInt>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<BigInt> dk{BigInt(1)};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g = 0;
    for (const auto& rs : detail::subsets(rows, k))
      for (const auto& cs : detail::subsets(cols, k)) {
        std::vector<std::vector<BigInt>> minor(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
        g = gcd(g, leibniz_det(minor));
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  alexlab::FinAbGroup out;
  out.rank = cols - (dk.size() - 1);
  for (std::size_t k = 1; k < dk.size(); ++k) {
    BigInt f = dk[k] / dk[k - 1];
    if (f > 1) out.invariant_factors.push_back(f);
  }
  return out;
}

/// Elements of Z/m[t]/(t^n - 1) as coefficient vectors in [0, m).
using Elem = std::vector<long>;

inline std::vector<Elem> all_elements(std::size_t n, long m) {
  std::vector<Elem> out;
  Elem e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == m) e[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline Elem mul(const Elem& a, const Elem& b, long m) {
  const std::size_t n = a.size();
  Elem c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] = (c[(i + j) % n] + a[i] * b[j]) % m;
  return c;
}

inline Elem to_elem(const alexlab::RingElem& x) {
  Elem e;
  for (const auto& c : x.coeffs()) e.push_back(alexlab::mod_nonneg(c, x.ctx().m).get_si());
  return e;
}

/// The principal ideal x * R, listed.
inline std::set<Elem> principal_ideal(const Elem& g, long m) {
  std::set<Elem> out;
  for (const auto& x : all_elements(g.size(), m)) out.insert(mul(x, g, m));
  return out;
}

inline std::set<Elem> annihilator_set(const Elem& f, long m) {
  std::set<Elem> out;
  const Elem zero(f.size(), 0);
  for (const auto& x : all_elements(f.size(), m))
    if (mul(x, f, m) == zero) out.insert(x);
  return out;
}

/// Every element of the lattice reduced mod m, by walking Z-combinations of
/// the basis rows with coefficients in [0, m).
inline std::set<Elem> lattice_elements(const alexlab::IdealLattice& lat) {
  const long m = lat.ctx.m.get_si();
  const std::size_t n = lat.ctx.n;
  const std::size_t r = lat.basis.rows();
  std::set<Elem> out;
  std::vector<long> k(r, 0);
  while (true) {
    Elem e(n, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long c = (k[i] * lat.basis(i, j).get_si()) % m;
        e[j] = ((e[j] + c) % m + m) % m;
      }
    out.insert(e);
    std::size_t i = 0;
    while (i < r && ++k[i] == m) k[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace oracle
