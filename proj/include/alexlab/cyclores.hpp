#pragma once

// Cyclic resultants R(f, t^n - 1) and the decisions built on them: the
// quotient-order check, cyclotomic stripping, equality up to units,
// sequence comparison, bounded reconstruction, and layer-by-layer matching
// of principal ideals under twists t -> t^v.

#include <alexlab/bigpoly.hpp>
#include <alexlab/quotring.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace alexlab {

struct CycResSeq {
  IntPoly poly;
  std::vector<BigInt> values;  // values[n - 1] = R(poly, t^n - 1)
};

BigInt cyclic_resultant(const IntPoly& f, std::size_t n);
CycResSeq cyclic_resultants(const IntPoly& f, std::size_t bound);

enum class CheckStatus { Pass, Fail, VanishingResultant };

std::string_view check_status_name(CheckStatus s) noexcept;

struct OrderCheck {
  std::size_t n = 0;
  BigInt resultant;
  FinAbGroup group;
  CheckStatus status = CheckStatus::Fail;
  bool passed = false;
};

/// Compares Z[t]/(t^n - 1, f) against |R(f, t^n - 1)|.
OrderCheck weber_check(const IntPoly& f, std::size_t n);

/// Shared pass rule: nonzero resultant needs a finite group of that order;
/// a vanishing one needs positive free rank.
OrderCheck judge_order(std::size_t n, BigInt resultant, FinAbGroup group);

struct StripResult {
  IntPoly f;
  IntPoly g;
  std::vector<unsigned long> stripped;  // with multiplicity, ascending
};

StripResult strip_common_cyclotomic(const IntPoly& f, const IntPoly& g);

bool equal_up_to_unit(const IntPoly& f, const IntPoly& g);

struct FriedMismatch {
  std::size_t n = 0;
  BigInt abs_f;
  BigInt abs_g;
};

/// Agreement up to `bound` is evidence, not proof.
struct FriedReport {
  std::size_t bound = 0;
  bool agree = true;
  std::optional<FriedMismatch> first_mismatch;
};

std::size_t default_fried_bound(const IntPoly& f, const IntPoly& g);
FriedReport fried_verify(const IntPoly& f, const IntPoly& g, std::size_t bound);

struct ReconstructionReport {
  std::size_t bound = 0;
  std::size_t max_degree = 0;
  BigInt max_height;
  std::vector<IntPoly> candidates;       // canonical unit-normal forms
  std::vector<std::size_t> vanishing_levels;  // n with |r_n| = 0
  std::size_t enumerated = 0;
};

/// Exhaustive search over reciprocal polynomials of degree <= max_degree and
/// coefficient height <= max_height whose |r_1|, ..., |r_N| match `abs_values`.
ReconstructionReport reconstruct_reciprocal(std::span<const BigInt> abs_values, std::size_t max_degree,
                                            const BigInt& max_height);

struct LevelMatch {
  std::size_t n = 0;
  std::vector<long> units;  // V_n
  bool maps_into_divisors = true;
};

struct TwistMatchReport {
  std::vector<std::size_t> levels;
  BigInt modulus;
  std::vector<LevelMatch> per_level;
  bool compatible = false;
  std::optional<std::size_t> witness_level;  // smallest n with V_n empty
  /// A single residue v mod family_modulus reducing into every V_n, if found.
  std::optional<BigInt> family_residue;
  BigInt family_modulus;
};

bool is_divisor_closed(std::span<const std::size_t> levels);
/// Sorted divisor closure of the given levels.
std::vector<std::size_t> divisor_closure(std::span<const std::size_t> levels);
/// {1, ..., max}
std::vector<std::size_t> levels_up_to(std::size_t max);

TwistMatchReport profinite_ideal_match(const IntPoly& f, const IntPoly& g, std::span<const std::size_t> levels,
                                       const BigInt& modulus);

/// F = Phi_pq Phi_p^2q Phi_pq^2 and G = Phi_p^2q^2 Phi_pq^2, p != q primes.
std::pair<IntPoly, IntPoly> fried_pair(unsigned long p, unsigned long q);

struct QuotientDifference {
  std::size_t n = 0;
  FinAbGroup f_group;
  FinAbGroup g_group;
};

/// Smallest n <= max_n where Z[t]/(t^n - 1, f) and Z[t]/(t^n - 1, g) differ.
std::optional<QuotientDifference> first_quotient_difference(const IntPoly& f, const IntPoly& g,
                                                            std::size_t max_n);

}  // namespace alexlab
