#pragma once

// Square matrices over Z[t] and Z[t, t^-1].

#include <alexlab/bigpoly.hpp>

#include <cstddef>
#include <vector>

namespace alexlab {

using PolyMatrix = std::vector<std::vector<IntPoly>>;
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Fraction-free determinant over Z[t]; 1 for the empty matrix.
IntPoly poly_determinant(PolyMatrix a);

LaurentMatrix laurent_identity(std::size_t n);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

/// Scales each row by the power of t that makes it polynomial with lowest
/// exponent zero. Row scaling by units does not change the presented module.
PolyMatrix clear_denominators(const LaurentMatrix& a);

}  // namespace alexlab
