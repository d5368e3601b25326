#include <alexlab/intmatrix.hpp>

#include <alexlab/error.hpp>

#include <algorithm>
#include <utility>

namespace alexlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : data_(rows, IntRow(cols, BigInt(0))), cols_(cols) {}

IntMatrix::IntMatrix(std::vector<IntRow> rows, std::size_t cols) : data_(std::move(rows)), cols_(cols) {
  for (const auto& r : data_) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<IntRow> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.emplace_back(r.begin(), r.end());
  return IntMatrix(std::move(data), cols);
}

void IntMatrix::append_row(IntRow r) {
  if (data_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.push_back(std::move(r));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

BigInt determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      std::swap(a.row(i), a.row(k));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(i, j) * a(k, k);
        mpz_submul(tmp.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : BigInt(-a(n - 1, n - 1));
}

namespace {

bool is_zero_row(const IntRow& r) {
  return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

// row -= q * pivot, starting at column `from`.
void sub_mul_row(IntRow& row, const BigInt& q, const IntRow& pivot, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot[j] != 0) mpz_submul(row[j].get_mpz_t(), q.get_mpz_t(), pivot[j].get_mpz_t());
  }
}

void reduce_tail(IntRow& row, std::size_t from, const BigInt& modulus) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] < 0 || row[j] >= modulus) row[j] = mod_nonneg(row[j], modulus);
  }
}

// Row-echelon elimination over columns [0, prefix). On return rows[0, pivots)
// carry positive pivots in strictly increasing columns and every later row is
// zero on the prefix; zero rows are dropped. When modulus > 0 the lattice is
// taken to contain modulus * Z^cols, which allows reducing trailing entries.
// Pivot choice: smallest nonzero absolute value, then lowest row index.
std::size_t echelon(std::vector<IntRow>& rows, std::size_t cols, std::size_t prefix,
                    const BigInt& modulus) {
  const bool modular = modulus > 0;
  if (modular) {
    for (auto& r : rows) reduce_tail(r, 0, modulus);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < prefix; ++col) {
    if (modular) {
      IntRow e(cols, BigInt(0));
      e[col] = modulus;
      rows.push_back(std::move(e));
    }
    while (true) {
      std::size_t p = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (p == rows.size() || cmp_abs(rows[i][col], rows[p][col]) < 0) p = i;
      }
      if (p == rows.size()) break;
      std::swap(rows[r], rows[p]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        BigInt q = trunc_div(rows[i][col], rows[r][col]);
        sub_mul_row(rows[i], q, rows[r], col);
        if (modular) reduce_tail(rows[i], col + 1, modulus);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][col] < 0) {
          for (std::size_t j = col; j < cols; ++j) rows[r][j] = -rows[r][j];
          if (modular) reduce_tail(rows[r], col + 1, modulus);
        }
        ++r;
        break;
      }
    }
    auto tail = std::remove_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(), is_zero_row);
    rows.erase(tail, rows.end());
  }
  return r;
}

std::size_t pivot_column(const IntRow& row) {
  std::size_t c = 0;
  while (c < row.size() && row[c] == 0) ++c;
  return c;
}

IntMatrix hnf_rows(std::vector<IntRow> rows, std::size_t cols, const BigInt& modulus) {
  const std::size_t rank = echelon(rows, cols, cols, modulus);
  rows.resize(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t c = pivot_column(rows[k]);
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i][c] >= 0 && rows[i][c] < rows[k][c]) continue;
      BigInt q = floor_div(rows[i][c], rows[k][c]);
      sub_mul_row(rows[i], q, rows[k], c);
    }
  }
  return IntMatrix(std::move(rows), cols);
}

// Rows of the given block matrix that vanish on the first `prefix` columns,
// restricted to the remaining columns.
std::vector<IntRow> prefix_kernel(std::vector<IntRow> rows, std::size_t cols, std::size_t prefix,
                                  const BigInt& modulus) {
  const std::size_t rank = echelon(rows, cols, prefix, modulus);
  std::vector<IntRow> out;
  for (std::size_t i = rank; i < rows.size(); ++i) {
    out.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(prefix), rows[i].end());
  }
  return out;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a, const BigInt& modulus) {
  return hnf_rows(a.row_data(), a.cols(), modulus);
}

std::vector<BigInt> smith_diagonal(const IntMatrix& input) {
  std::vector<IntRow> a = input.row_data();
  const std::size_t nr = a.size();
  const std::size_t nc = input.cols();
  std::vector<BigInt> diag;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Global pivot: smallest nonzero |entry| in the trailing block, row-major first.
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == nr || cmp_abs(a[i][j], a[pi][pj]) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == nr) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    while (true) {
      bool done = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = trunc_div(a[i][t], a[t][t]);
        sub_mul_row(a[i], q, a[t], t);
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = trunc_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < nr; ++i) {
          if (a[i][t] != 0) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[i][t].get_mpz_t());
        }
        if (a[t][j] != 0) done = false;
      }
      if (!done) {
        // Bring the smallest remaining entry of row t / column t to the corner.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < nr; ++i)
          if (a[i][t] != 0 && cmp_abs(a[i][t], a[bi][bj]) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a[t][j] != 0 && cmp_abs(a[t][j], a[bi][bj]) < 0) {
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold any offending row into row t and repeat.
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!divides(a[t][t], a[i][j])) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      for (std::size_t j = t; j < nc; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

IntMatrix left_kernel(const IntMatrix& a, const BigInt& modulus) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<IntRow> rows;
  rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    IntRow row(c + r, BigInt(0));
    std::copy(a.row(i).begin(), a.row(i).end(), row.begin());
    row[c + i] = 1;
    rows.push_back(std::move(row));
  }
  return hnf_rows(prefix_kernel(std::move(rows), c + r, c, modulus), r, modulus);
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b, const BigInt& modulus) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "lattice dimension mismatch");
  const std::size_t n = a.cols();
  std::vector<IntRow> rows;
  for (const auto& r : a.row_data()) {
    IntRow row(2 * n);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(row));
  }
  for (const auto& r : b.row_data()) {
    IntRow row(2 * n, BigInt(0));
    std::copy(r.begin(), r.end(), row.begin());
    rows.push_back(std::move(row));
  }
  return hnf_rows(prefix_kernel(std::move(rows), 2 * n, n, modulus), n, modulus);
}

bool in_row_lattice(const IntMatrix& hnf, std::span<const BigInt> v) {
  if (v.size() != hnf.cols()) return false;
  IntRow x(v.begin(), v.end());
  for (std::size_t k = 0; k < hnf.rows(); ++k) {
    const IntRow& row = hnf.row(k);
    const std::size_t c = pivot_column(row);
    if (c == row.size()) continue;
    for (std::size_t j = 0; j < c; ++j)
      if (x[j] != 0) return false;
    if (!divides(row[c], x[c])) return false;
    BigInt q = x[c] / row[c];
    sub_mul_row(x, q, row, c);
  }
  return is_zero_row(x);
}

}  // namespace alexlab
