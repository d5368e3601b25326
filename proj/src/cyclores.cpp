#include <alexlab/cyclores.hpp>

#include <alexlab/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace alexlab {

namespace {

void require_nonzero(const IntPoly& f, const char* what) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, std::string(what) + " of the zero polynomial");
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

BigInt cyclic_resultant(const IntPoly& f, std::size_t n) {
  require_nonzero(f, "cyclic resultant");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic resultant level must be >= 1");
  return resultant(f, IntPoly::cyclic_modulus(n));
}

CycResSeq cyclic_resultants(const IntPoly& f, std::size_t bound) {
  CycResSeq seq{f, {}};
  seq.values.reserve(bound);
  for (std::size_t n = 1; n <= bound; ++n) seq.values.push_back(cyclic_resultant(f, n));
  return seq;
}

std::string_view check_status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::VanishingResultant: return "vanishing_resultant";
  }
  return "fail";
}

OrderCheck judge_order(std::size_t n, BigInt res, FinAbGroup group) {
  OrderCheck out;
  out.n = n;
  out.resultant = std::move(res);
  out.group = std::move(group);
  if (out.resultant == 0) {
    out.passed = out.group.rank >= 1;
    out.status = out.passed ? CheckStatus::VanishingResultant : CheckStatus::Fail;
  } else {
    auto order = out.group.order();
    out.passed = order && *order == abs(out.resultant);
    out.status = out.passed ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return out;
}

OrderCheck weber_check(const IntPoly& f, std::size_t n) {
  require_nonzero(f, "weber_check");
  TruncRingCtx ctx(n, 0);
  RingElem gen = reduce(f, ctx);
  return judge_order(n, cyclic_resultant(f, n), quotient_group(std::span(&gen, 1), ctx));
}

StripResult strip_common_cyclotomic(const IntPoly& f, const IntPoly& g) {
  require_nonzero(f, "strip_common_cyclotomic");
  require_nonzero(g, "strip_common_cyclotomic");
  StripResult out{f, g, {}};
  while (true) {
    auto df = cyclotomic_divisors(out.f);
    auto dg = cyclotomic_divisors(out.g);
    std::vector<unsigned long> common;
    std::set_intersection(df.begin(), df.end(), dg.begin(), dg.end(), std::back_inserter(common));
    if (common.empty()) break;
    for (unsigned long m : common) {
      const IntPoly phi = cyclotomic(static_cast<long>(m));
      out.f = exact_div(out.f, phi);
      out.g = exact_div(out.g, phi);
      out.stripped.push_back(m);
    }
  }
  std::sort(out.stripped.begin(), out.stripped.end());
  return out;
}

bool equal_up_to_unit(const IntPoly& f, const IntPoly& g) {
  require_nonzero(f, "equal_up_to_unit");
  require_nonzero(g, "equal_up_to_unit");
  return normalize_unit(f).canonical == normalize_unit(g).canonical;
}

std::size_t default_fried_bound(const IntPoly& f, const IntPoly& g) {
  return 4 * static_cast<std::size_t>(std::max(0L, f.degree()) + std::max(0L, g.degree())) + 12;
}

FriedReport fried_verify(const IntPoly& f, const IntPoly& g, std::size_t bound) {
  require_nonzero(f, "fried_verify");
  require_nonzero(g, "fried_verify");
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "sequence bound must be >= 1");
  FriedReport out;
  out.bound = bound;
  for (std::size_t n = 1; n <= bound; ++n) {
    BigInt a = abs(cyclic_resultant(f, n));
    BigInt b = abs(cyclic_resultant(g, n));
    if (a != b) {
      out.agree = false;
      out.first_mismatch = FriedMismatch{n, std::move(a), std::move(b)};
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ReconstructionReport reconstruct_reciprocal(std::span<const BigInt> abs_values, std::size_t max_degree,
                                            const BigInt& max_height) {
  if (abs_values.empty()) throw Error(ErrorCode::EmptySequence, "no cyclic resultant values given");
  if (max_height < 1) throw Error(ErrorCode::InvalidArgument, "height bound must be >= 1");
  ReconstructionReport out;
  out.bound = abs_values.size();
  out.max_degree = max_degree;
  out.max_height = max_height;
  for (std::size_t n = 1; n <= abs_values.size(); ++n)
    if (abs_values[n - 1] == 0) out.vanishing_levels.push_back(n);

  const long h = max_height.get_si();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    // Free coefficients a_0 .. a_{d/2}; a_0 is both constant and leading term.
    const std::size_t free = d / 2 + 1;
    std::vector<long> half(free, -h);
    half[0] = 1;
    auto advance = [&]() {
      for (std::size_t k = free; k-- > 0;) {
        if (half[k] < h) {
          ++half[k];
          return true;
        }
        half[k] = k == 0 ? 1 : -h;
      }
      return false;
    };
    do {
      std::vector<BigInt> c(d + 1);
      for (std::size_t i = 0; i < free; ++i) {
        c[i] = half[i];
        c[d - i] = half[i];
      }
      IntPoly cand(std::move(c));
      ++out.enumerated;
      bool match = true;
      for (std::size_t n = 1; n <= abs_values.size() && match; ++n)
        match = abs(cyclic_resultant(cand, n)) == abs_values[n - 1];
      if (match) out.candidates.push_back(std::move(cand));
    } while (advance());
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_divisor_closed(std::span<const std::size_t> levels) {
  std::set<std::size_t> s(levels.begin(), levels.end());
  if (s.count(0)) return false;
  for (std::size_t n : s)
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0 && !s.count(d)) return false;
  return true;
}

std::vector<std::size_t> divisor_closure(std::span<const std::size_t> levels) {
  std::set<std::size_t> s;
  for (std::size_t n : levels) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level 0 is not allowed");
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) s.insert(d);
  }
  return {s.begin(), s.end()};
}

std::vector<std::size_t> levels_up_to(std::size_t max) {
  std::vector<std::size_t> out(max);
  std::iota(out.begin(), out.end(), std::size_t{1});
  return out;
}

namespace {

long residue(long v, std::size_t n) {
  const long nn = static_cast<long>(n);
  long r = v % nn;
  return r < 0 ? r + nn : r;
}

// Depth-first search for one residue v mod lcm(levels) with v mod n in V_n
// for every level n.
bool find_family(const std::vector<const LevelMatch*>& order, std::size_t idx, const BigInt& r, const BigInt& m,
                 BigInt& out_r, BigInt& out_m) {
  if (idx == order.size()) {
    out_r = r;
    out_m = m;
    return true;
  }
  const LevelMatch& level = *order[idx];
  const BigInt n = static_cast<unsigned long>(level.n);
  const BigInt g = gcd_of(m, n);
  const BigInt next_m = m / g * n;
  for (long u : level.units) {
    const BigInt target = residue(u, level.n);
    if (!divides(g, BigInt(target - mod_nonneg(r, g)))) continue;
    BigInt x = r;
    while (mod_nonneg(x, n) != target) x += m;
    if (find_family(order, idx + 1, mod_nonneg(x, next_m), next_m, out_r, out_m)) return true;
  }
  return false;
}

}  // namespace

TwistMatchReport profinite_ideal_match(const IntPoly& f, const IntPoly& g, std::span<const std::size_t> levels,
                                       const BigInt& modulus) {
  require_nonzero(f, "profinite_ideal_match");
  require_nonzero(g, "profinite_ideal_match");
  if (!is_divisor_closed(levels)) {
    throw Error(ErrorCode::NonDivisorClosedLevels, "levels must contain every divisor of each level");
  }
  TwistMatchReport out;
  std::set<std::size_t> sorted(levels.begin(), levels.end());
  out.levels.assign(sorted.begin(), sorted.end());
  out.modulus = modulus;
  out.family_modulus = 1;

  for (std::size_t n : out.levels) {
    TruncRingCtx ctx(n, modulus);
    const IdealLattice fi = ideal_lattice(reduce(f, ctx));
    const IdealLattice gi = ideal_lattice(reduce(g, ctx));
    LevelMatch lm;
    lm.n = n;
    for (long v : unit_residues(n))
      if (ideal_equal(twist(fi, v), gi)) lm.units.push_back(v);
    out.per_level.push_back(std::move(lm));
  }

  // Residue maps V_n -> V_d along divisibility.
  for (auto& lm : out.per_level) {
    for (const auto& lower : out.per_level) {
      if (lower.n >= lm.n || lm.n % lower.n != 0) continue;
      for (long v : lm.units) {
        const long r = lower.n == 1 ? 1 : residue(v, lower.n);
        if (std::find(lower.units.begin(), lower.units.end(), r) == lower.units.end()) {
          lm.maps_into_divisors = false;
        }
      }
    }
  }

  for (const auto& lm : out.per_level) {
    if (lm.units.empty()) {
      out.witness_level = lm.n;
      break;
    }
  }
  const bool maps_ok = std::all_of(out.per_level.begin(), out.per_level.end(),
                                   [](const LevelMatch& lm) { return lm.maps_into_divisors; });
  if (!out.witness_level && maps_ok) {
    std::vector<const LevelMatch*> order;
    for (const auto& lm : out.per_level) order.push_back(&lm);
    std::sort(order.begin(), order.end(), [](const LevelMatch* a, const LevelMatch* b) { return a->n > b->n; });
    BigInt r, m;
    if (find_family(order, 0, BigInt(0), BigInt(1), r, m)) {
      out.family_residue = m == 1 ? BigInt(1) : r;
      out.family_modulus = m;
    }
  }
  out.compatible = !out.witness_level && maps_ok && out.family_residue.has_value();
  return out;
}

// ---------------------------------------------------------------------------

std::pair<IntPoly, IntPoly> fried_pair(unsigned long p, unsigned long q) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw Error(ErrorCode::InvalidArgument, "Fried pair needs two distinct primes");
  }
  auto phi = [](unsigned long m) { return cyclotomic(static_cast<long>(m)); };
  IntPoly f = phi(p * q) * phi(p * p * q) * phi(p * q * q);
  IntPoly g = phi(p * p * q * q) * phi(p * q) * phi(p * q);
  return {std::move(f), std::move(g)};
}

std::optional<QuotientDifference> first_quotient_difference(const IntPoly& f, const IntPoly& g,
                                                            std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    TruncRingCtx ctx(n, 0);
    RingElem fe = reduce(f, ctx);
    RingElem ge = reduce(g, ctx);
    FinAbGroup a = quotient_group(std::span(&fe, 1), ctx);
    FinAbGroup b = quotient_group(std::span(&ge, 1), ctx);
    if (!(a == b)) return QuotientDifference{n, std::move(a), std::move(b)};
  }
  return std::nullopt;
}

}  // namespace alexlab
