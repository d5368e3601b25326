#include <alexlab/quotring.hpp>

#include <alexlab/error.hpp>

#include <numeric>
#include <string>

namespace alexlab {

namespace {

std::string describe(const TruncRingCtx& c) {
  return "(n=" + std::to_string(c.n) + ", m=" + to_decimal(c.m) + ")";
}

void require_same(const TruncRingCtx& a, const TruncRingCtx& b) {
  if (!(a == b)) throw Error(ErrorCode::CtxMismatch, describe(a) + " vs " + describe(b));
}

void reduce_coeffs(std::vector<BigInt>& c, const BigInt& m) {
  if (m == 0) return;
  for (auto& x : c) x = mod_nonneg(x, m);
}

std::size_t unit_index(long v, std::size_t n) {
  const long nn = static_cast<long>(n);
  long r = v % nn;
  if (r < 0) r += nn;
  if (std::gcd(r, nn) != 1) {
    throw Error(ErrorCode::NotAUnit, std::to_string(v) + " is not invertible mod " + std::to_string(n));
  }
  return static_cast<std::size_t>(r);
}

void require_below(const TruncRingCtx& source, const TruncRingCtx& target) {
  if (!is_below(target, source)) {
    throw Error(ErrorCode::IncompatibleLevels, describe(source) + " does not map onto " + describe(target));
  }
}

}  // namespace

TruncRingCtx::TruncRingCtx(std::size_t n_, BigInt m_) : n(n_), m(std::move(m_)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "layer exponent n must be >= 1");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "coefficient modulus must be >= 0");
}

bool is_below(const TruncRingCtx& lower, const TruncRingCtx& upper) {
  if (upper.n % lower.n != 0) return false;
  if (lower.m == 0) return upper.m == 0;
  return upper.m == 0 || divides(lower.m, upper.m);
}

// ---------------------------------------------------------------------------

RingElem::RingElem(TruncRingCtx ctx, std::vector<BigInt> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_.n) throw Error(ErrorCode::InvalidArgument, "ring element needs exactly n coefficients");
  reduce_coeffs(coeffs_, ctx_.m);
}

RingElem RingElem::zero(const TruncRingCtx& ctx) { return RingElem(ctx, std::vector<BigInt>(ctx.n, BigInt(0))); }

RingElem RingElem::one(const TruncRingCtx& ctx) {
  std::vector<BigInt> c(ctx.n, BigInt(0));
  c[0] = 1;
  return RingElem(ctx, std::move(c));
}

bool RingElem::is_zero() const {
  for (const auto& x : coeffs_)
    if (x != 0) return false;
  return true;
}

std::optional<BigInt> FinAbGroup::order() const {
  if (rank != 0) return std::nullopt;
  BigInt o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

FinAbGroup FinAbGroup::cokernel(const IntMatrix& relations) {
  FinAbGroup g;
  auto diag = smith_diagonal(relations);
  g.rank = relations.cols() - diag.size();
  for (auto& d : diag)
    if (d > 1) g.invariant_factors.push_back(std::move(d));
  return g;
}

bool IdealLattice::is_zero() const {
  if (ctx.m == 0) return basis.rows() == 0;
  IntMatrix zero = IntMatrix::identity(ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i) zero(i, i) = ctx.m;
  return basis == zero;
}

bool IdealLattice::is_whole_ring() const { return basis == IntMatrix::identity(ctx.n); }

BigInt IdealLattice::element_count() const {
  if (ctx.m == 0) throw Error(ErrorCode::InvalidArgument, "element count of an infinite ideal");
  BigInt index = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) index *= basis(i, i);
  return pow_big(ctx.m, ctx.n) / index;
}

// ---------------------------------------------------------------------------

RingElem reduce(const IntPoly& f, const TruncRingCtx& ctx) {
  std::vector<BigInt> c(ctx.n, BigInt(0));
  for (std::size_t i = 0; i < f.size(); ++i) c[i % ctx.n] += f.coeffs()[i];
  return RingElem(ctx, std::move(c));
}

RingElem reduce(const LaurentPoly& f, const TruncRingCtx& ctx) {
  std::vector<BigInt> c(ctx.n, BigInt(0));
  const long n = static_cast<long>(ctx.n);
  for (std::size_t i = 0; i < f.body.size(); ++i) {
    long e = (f.low_degree + static_cast<long>(i)) % n;
    if (e < 0) e += n;
    c[static_cast<std::size_t>(e)] += f.body.coeffs()[i];
  }
  return RingElem(ctx, std::move(c));
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
  require_same(a.ctx(), b.ctx());
  std::vector<BigInt> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return RingElem(a.ctx(), std::move(c));
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
  require_same(a.ctx(), b.ctx());
  const std::size_t n = a.ctx().n;
  std::vector<BigInt> c(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(c[k].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return RingElem(a.ctx(), std::move(c));
}

IntMatrix multiplication_matrix(const RingElem& f) {
  const std::size_t n = f.ctx().n;
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, (i + j) % n) = f.coeffs()[j];
  return c;
}

// ---------------------------------------------------------------------------

IdealLattice ideal_lattice(std::span<const RingElem> gens, const TruncRingCtx& ctx) {
  const std::size_t n = ctx.n;
  IntMatrix rows(0, n);
  for (const auto& g : gens) {
    require_same(g.ctx(), ctx);
    IntMatrix c = multiplication_matrix(g);
    for (std::size_t i = 0; i < n; ++i) rows.append_row(c.row(i));
  }
  return IdealLattice{ctx, hermite_normal_form(rows, ctx.m)};
}

IdealLattice ideal_lattice(const RingElem& gen) { return ideal_lattice(std::span(&gen, 1), gen.ctx()); }

bool ideal_equal(const IdealLattice& a, const IdealLattice& b) {
  require_same(a.ctx, b.ctx);
  return a.basis == b.basis;
}

FinAbGroup quotient_group(std::span<const RingElem> gens, const TruncRingCtx& ctx) {
  return quotient_group(ideal_lattice(gens, ctx));
}

FinAbGroup quotient_group(const IdealLattice& ideal) {
  IntMatrix rel = ideal.basis;
  if (rel.rows() == 0) rel = IntMatrix(0, ideal.ctx.n);
  return FinAbGroup::cokernel(rel);
}

IdealLattice annihilator(const RingElem& f) {
  return IdealLattice{f.ctx(), left_kernel(multiplication_matrix(f), f.ctx().m)};
}

// ---------------------------------------------------------------------------

RingElem twist(const RingElem& x, long v) {
  const std::size_t n = x.ctx().n;
  const std::size_t u = unit_index(v, n);
  std::vector<BigInt> c(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) c[(i * u) % n] = x.coeffs()[i];
  return RingElem(x.ctx(), std::move(c));
}

IdealLattice twist(const IdealLattice& x, long v) {
  const std::size_t n = x.ctx.n;
  const std::size_t u = unit_index(v, n);
  IntMatrix rows(x.basis.rows(), n);
  for (std::size_t r = 0; r < x.basis.rows(); ++r)
    for (std::size_t i = 0; i < n; ++i) rows(r, (i * u) % n) = x.basis(r, i);
  return IdealLattice{x.ctx, hermite_normal_form(rows, x.ctx.m)};
}

RingElem transition(const RingElem& x, const TruncRingCtx& target) {
  require_below(x.ctx(), target);
  std::vector<BigInt> c(target.n, BigInt(0));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) c[i % target.n] += x.coeffs()[i];
  return RingElem(target, std::move(c));
}

IdealLattice transition(const IdealLattice& x, const TruncRingCtx& target) {
  require_below(x.ctx, target);
  IntMatrix rows(0, target.n);
  for (std::size_t r = 0; r < x.basis.rows(); ++r) {
    IntRow folded(target.n, BigInt(0));
    for (std::size_t i = 0; i < x.ctx.n; ++i) folded[i % target.n] += x.basis(r, i);
    rows.append_row(std::move(folded));
  }
  return IdealLattice{target, hermite_normal_form(rows, target.m)};
}

IdealLattice intersect(const IdealLattice& a, const IdealLattice& b) {
  require_same(a.ctx, b.ctx);
  return IdealLattice{a.ctx, lattice_intersection(a.basis, b.basis, a.ctx.m)};
}

bool is_shift_closed(const IdealLattice& ideal) {
  const std::size_t n = ideal.ctx.n;
  for (std::size_t r = 0; r < ideal.basis.rows(); ++r) {
    IntRow shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[(i + 1) % n] = ideal.basis(r, i);
    if (!in_row_lattice(ideal.basis, shifted)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

StableImage stable_annihilator_image(const IntPoly& f, const TruncRingCtx& target,
                                     std::span<const TruncRingCtx> schedule) {
  if (target.m == 0) {
    throw Error(ErrorCode::InvalidArgument, "stable annihilator images need a finite target layer (m > 0)");
  }
  for (const auto& level : schedule) {
    if (level.m == 0 || !is_below(target, level)) {
      throw Error(ErrorCode::IncompatibleLevels,
                  describe(level) + " is not above the target " + describe(target));
    }
  }
  StableImage out{IdealLattice{target, IntMatrix{}}, {}, 0};
  std::optional<IdealLattice> running;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    IdealLattice image = transition(annihilator(reduce(f, schedule[k])), target);
    IdealLattice next = running ? intersect(*running, image) : image;
    out.trace.push_back({schedule[k], next.element_count()});
    if (running && ideal_equal(*running, next)) {
      out.image = std::move(next);
      out.stabilized_at = k;
      return out;
    }
    running = std::move(next);
  }
  throw Error(ErrorCode::NotStabilized,
              "annihilator images at " + describe(target) + " did not stabilize within " +
                  std::to_string(schedule.size()) + " schedule levels");
}

std::vector<TruncRingCtx> doubling_schedule(const TruncRingCtx& start, std::size_t max_n, const BigInt& max_m) {
  std::vector<TruncRingCtx> out{start};
  TruncRingCtx cur = start;
  while (true) {
    std::size_t n = cur.n * 2 <= max_n ? cur.n * 2 : cur.n;
    BigInt m = cur.m * 2 <= max_m ? BigInt(cur.m * 2) : cur.m;
    if (n == cur.n && m == cur.m) break;
    cur = TruncRingCtx(n, m);
    out.push_back(cur);
  }
  return out;
}

std::vector<long> unit_residues(std::size_t n) {
  if (n == 1) return {1};
  std::vector<long> out;
  const long nn = static_cast<long>(n);
  for (long v = 1; v < nn; ++v)
    if (std::gcd(v, nn) == 1) out.push_back(v);
  return out;
}

}  // namespace alexlab
