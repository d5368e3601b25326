#include <alexlab/polymatrix.hpp>

#include <alexlab/error.hpp>

#include <algorithm>
#include <climits>

namespace alexlab {

IntPoly poly_determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return IntPoly{1};
  bool negate = false;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && a[i][k].is_zero()) ++i;
      if (i == n) return {};
      std::swap(a[i], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = IntPoly{};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentMatrix laurent_identity(std::size_t n) {
  LaurentMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly(IntPoly{1}, 0);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b.front().size();
  LaurentMatrix c(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

PolyMatrix clear_denominators(const LaurentMatrix& a) {
  PolyMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) {
    long low = LONG_MAX;
    for (const auto& x : row) {
      if (x.is_zero()) continue;
      LaurentPoly y = x;
      low = std::min(low, y.make_polynomial());
    }
    std::vector<IntPoly> prow;
    prow.reserve(row.size());
    for (const auto& x : row) {
      if (x.is_zero()) {
        prow.emplace_back();
        continue;
      }
      LaurentPoly y = x;
      const long shift = y.make_polynomial() - low;
      prow.push_back(y.body * IntPoly::monomial(1, static_cast<std::size_t>(shift)));
    }
    out.push_back(std::move(prow));
  }
  return out;
}

}  // namespace alexlab
