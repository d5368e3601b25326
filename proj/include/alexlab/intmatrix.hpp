#pragma once

// Exact integer matrices: determinants, Hermite and Smith normal forms,
// kernels and lattice intersections.

#include <alexlab/bigint.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace alexlab {

using IntRow = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have length cols.
  IntMatrix(std::vector<IntRow> rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  IntRow& row(std::size_t i) { return data_[i]; }
  const IntRow& row(std::size_t i) const { return data_[i]; }
  const std::vector<IntRow>& row_data() const noexcept { return data_; }

  void append_row(IntRow r);
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::vector<IntRow> data_;
  std::size_t cols_ = 0;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
BigInt determinant(IntMatrix a);

/// Canonical row Hermite normal form of the row lattice (plus modulus * Z^n
/// when modulus > 0). Zero rows are dropped. Pivots are positive and entries
/// above each pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a, const BigInt& modulus = 0);

/// Nonzero Smith invariants d1 | d2 | ... (all positive), one per unit of rank.
std::vector<BigInt> smith_diagonal(const IntMatrix& a);

/// Canonical HNF of {x : x * a == 0 (mod modulus)}; modulus 0 means exact.
IntMatrix left_kernel(const IntMatrix& a, const BigInt& modulus = 0);

/// Canonical HNF of the intersection of two row lattices in Z^n. When
/// modulus > 0 both lattices are taken to contain modulus * Z^n.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b,
                               const BigInt& modulus = 0);

/// Membership of v in the row lattice of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf, std::span<const BigInt> v);

}  // namespace alexlab
