#include <doctest.h>

#include <alexlab/intmatrix.hpp>
#include <alexlab/polymatrix.hpp>

#include "oracles.hpp"

using namespace alexlab;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, long h) {
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = oracle::uniform(-h, h);
  return a;
}

bool is_canonical_hnf(const IntMatrix& h) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols() || h(i, p) <= 0) return false;
    if (i > 0 && p <= last) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    last = p;
  }
  return true;
}

}  // namespace

TEST_CASE("determinant matches the permutation expansion") {
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 5));
    IntMatrix a = random_matrix(n, n, 6);
    CHECK(determinant(a) == oracle::leibniz_det(a.row_data()));
  }
}

TEST_CASE("hermite normal form") {
  // (t - 1) in Z[t]/(t^3 - 1): rows sum to zero, rank 2.
  IntMatrix a = IntMatrix::from_rows({{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}});
  CHECK(hermite_normal_form(a) == IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}}));
  CHECK(hermite_normal_form(IntMatrix::from_rows({{2, 10}, {0, 6}})) == IntMatrix::from_rows({{2, 4}, {0, 6}}));
  CHECK(hermite_normal_form(IntMatrix::from_rows({{3}}), 4) == IntMatrix::from_rows({{1}}));
  CHECK(hermite_normal_form(IntMatrix(0, 2), 5) == IntMatrix::from_rows({{5, 0}, {0, 5}}));
  CHECK(hermite_normal_form(IntMatrix(0, 2)).rows() == 0);
}

TEST_CASE("HNF is canonical and invariant under unimodular row operations") {
  for (int i = 0; i < 150; ++i) {
    const std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(oracle::uniform(1, 5));
    IntMatrix a = random_matrix(r, c, 9);
    const IntMatrix h = hermite_normal_form(a);
    CHECK(is_canonical_hnf(h));
    CHECK(hermite_normal_form(h) == h);
    for (const auto& row : a.row_data()) CHECK(in_row_lattice(h, row));
    IntMatrix b = a;
    if (r > 1) {
      const long k = oracle::uniform(-4, 4);
      for (std::size_t j = 0; j < c; ++j) b(0, j) += k * b(1, j);
      std::swap(b.row(0), b.row(r - 1));
    }
    for (std::size_t j = 0; j < c; ++j) b(0, j) = -b(0, j);
    CHECK(hermite_normal_form(b) == h);
    const BigInt m = oracle::uniform(2, 12);
    const IntMatrix hm = hermite_normal_form(a, m);
    CHECK(hm.rows() == c);
    CHECK(hermite_normal_form(b, m) == hm);
  }
}

TEST_CASE("Smith invariants match determinantal divisors") {
  for (int i = 0; i < 150; ++i) {
    const std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(oracle::uniform(1, 4));
    IntMatrix a = random_matrix(r, c, 6);
    if (i % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) a(0, j) *= 4;
    const auto diag = smith_diagonal(a);
    for (std::size_t k = 1; k < diag.size(); ++k) CHECK(divides(diag[k - 1], diag[k]));
    CHECK(FinAbGroup::cokernel(a) == oracle::minors_cokernel(a.row_data(), c));
  }
}

TEST_CASE("left kernel") {
  IntMatrix a = IntMatrix::from_rows({{-1, 1}, {1, -1}});
  CHECK(left_kernel(a) == IntMatrix::from_rows({{1, 1}}));
  CHECK(left_kernel(IntMatrix::from_rows({{2}}), 4) == IntMatrix::from_rows({{2}}));
  for (int i = 0; i < 80; ++i) {
    const std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(oracle::uniform(1, 4));
    IntMatrix a2 = random_matrix(r, c, 5);
    const BigInt m = i % 2 ? BigInt(0) : BigInt(oracle::uniform(2, 9));
    const IntMatrix k = left_kernel(a2, m);
    const IntMatrix prod = k * a2;
    for (const auto& row : prod.row_data())
      for (const auto& x : row) CHECK((m == 0 ? x == 0 : divides(m, x)));
  }
}

TEST_CASE("lattice intersection") {
  IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 1}});
  IntMatrix b = IntMatrix::from_rows({{1, 0}, {0, 3}});
  CHECK(lattice_intersection(a, b) == IntMatrix::from_rows({{2, 0}, {0, 3}}));
  for (int i = 0; i < 60; ++i) {
    IntMatrix x = random_matrix(2, 2, 4);
    IntMatrix y = random_matrix(2, 2, 4);
    const IntMatrix meet = lattice_intersection(x, y);
    const IntMatrix hx = hermite_normal_form(x);
    const IntMatrix hy = hermite_normal_form(y);
    for (const auto& row : meet.row_data()) {
      CHECK(in_row_lattice(hx, row));
      CHECK(in_row_lattice(hy, row));
    }
    // Brute force over a box: every common vector is in the intersection.
    for (long u = -6; u <= 6; ++u)
      for (long v = -6; v <= 6; ++v) {
        std::vector<BigInt> w{BigInt(u), BigInt(v)};
        if (in_row_lattice(hx, w) && in_row_lattice(hy, w)) CHECK(in_row_lattice(meet, w));
      }
  }
}

TEST_CASE("polynomial determinant") {
  PolyMatrix q{{IntPoly{-1, 1}, IntPoly{0, -1}}, {IntPoly{1}, IntPoly{-1, 1}}};
  CHECK(poly_determinant(q) == IntPoly{1, -1, 1});
  CHECK(poly_determinant({}) == IntPoly{1});
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 4));
    PolyMatrix p(n, std::vector<IntPoly>(n));
    for (auto& row : p)
      for (auto& e : row) e = oracle::uniform(0, 3) == 0 ? IntPoly{} : oracle::random_poly(oracle::uniform(0, 2), 3);
    const IntPoly det = poly_determinant(p);
    for (long x = -2; x <= 2; ++x) {
      std::vector<std::vector<BigInt>> ev(n, std::vector<BigInt>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) ev[r][c] = p[r][c].evaluate(BigInt(x));
      CHECK(det.evaluate(BigInt(x)) == oracle::leibniz_det(ev));
    }
  }
}
