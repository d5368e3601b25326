#pragma once

// Finite layers Z/m[t]/(t^n - 1) of the completed group ring, with m = 0
// standing for integer coefficients. Ideals are carried as their additive
// lattices in Z^n in canonical Hermite normal form, so ideal equality is
// basis equality.

#include <alexlab/bigpoly.hpp>
#include <alexlab/intmatrix.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace alexlab {

struct TruncRingCtx {
  std::size_t n = 1;
  BigInt m = 0;

  TruncRingCtx() = default;
  TruncRingCtx(std::size_t n_, BigInt m_);

  friend bool operator==(const TruncRingCtx&, const TruncRingCtx&) = default;
};

/// True when `lower` is a quotient layer of `upper` (n and m divisibility).
bool is_below(const TruncRingCtx& lower, const TruncRingCtx& upper);

class RingElem {
 public:
  RingElem(TruncRingCtx ctx, std::vector<BigInt> coeffs);
  static RingElem zero(const TruncRingCtx& ctx);
  static RingElem one(const TruncRingCtx& ctx);

  const TruncRingCtx& ctx() const noexcept { return ctx_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  TruncRingCtx ctx_;
  std::vector<BigInt> coeffs_;
};

/// Finitely generated abelian group Z^rank + Z/d1 + ... with d1 | d2 | ...
struct FinAbGroup {
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;

  /// Order when finite.
  std::optional<BigInt> order() const;
  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }

  /// Cokernel of an integer matrix with `cols` columns, from its Smith diagonal.
  static FinAbGroup cokernel(const IntMatrix& relations);

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

struct IdealLattice {
  TruncRingCtx ctx;
  IntMatrix basis;  // canonical HNF rows

  bool is_zero() const;
  bool is_whole_ring() const;
  /// Number of ring elements in the ideal (m > 0 only).
  BigInt element_count() const;

  friend bool operator==(const IdealLattice&, const IdealLattice&) = default;
};

RingElem reduce(const IntPoly& f, const TruncRingCtx& ctx);
RingElem reduce(const LaurentPoly& f, const TruncRingCtx& ctx);

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);

/// Row i holds the coefficients of t^i * f; x * C_f is the product x f.
IntMatrix multiplication_matrix(const RingElem& f);

IdealLattice ideal_lattice(std::span<const RingElem> gens, const TruncRingCtx& ctx);
IdealLattice ideal_lattice(const RingElem& gen);

bool ideal_equal(const IdealLattice& a, const IdealLattice& b);

FinAbGroup quotient_group(std::span<const RingElem> gens, const TruncRingCtx& ctx);
FinAbGroup quotient_group(const IdealLattice& ideal);

IdealLattice annihilator(const RingElem& f);

/// Ring automorphism t -> t^v; v must be invertible mod n.
RingElem twist(const RingElem& x, long v);
IdealLattice twist(const IdealLattice& x, long v);

/// Projection onto a lower layer (fold exponents mod target.n, reduce mod target.m).
RingElem transition(const RingElem& x, const TruncRingCtx& target);
IdealLattice transition(const IdealLattice& x, const TruncRingCtx& target);

IdealLattice intersect(const IdealLattice& a, const IdealLattice& b);

/// Every basis row stays in the lattice after multiplication by t.
bool is_shift_closed(const IdealLattice& ideal);

struct StableImageStep {
  TruncRingCtx level;
  BigInt image_size;  // elements of the running image at the target
};

struct StableImage {
  IdealLattice image;
  std::vector<StableImageStep> trace;
  std::size_t stabilized_at = 0;  // schedule index where two images agreed
};

/// Images of Ann(f) from each schedule level pushed down to `target` and
/// intersected; returns once two consecutive running images agree.
/// Throws NotStabilized if the schedule runs out first.
StableImage stable_annihilator_image(const IntPoly& f, const TruncRingCtx& target,
                                     std::span<const TruncRingCtx> schedule);

/// start, then repeatedly double n (capped at max_n) and m (capped at max_m).
std::vector<TruncRingCtx> doubling_schedule(const TruncRingCtx& start, std::size_t max_n,
                                            const BigInt& max_m);

/// Residues v in [1, n] with gcd(v, n) = 1 (v = 1 only for n = 1).
std::vector<long> unit_residues(std::size_t n);

}  // namespace alexlab
