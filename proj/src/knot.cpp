#include <alexlab/knot.hpp>

#include <alexlab/error.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alexlab {

// ---------------------------------------------------------------------------
// Braids

BraidWord parse_braid(const std::string& text) {
  BraidWord b;
  std::istringstream in(text);
  std::string tok;
  int max_index = 0;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) {
      throw Error(ErrorCode::SyntaxError, "bad braid token '" + tok + "'");
    }
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw Error(ErrorCode::SyntaxError, "bad braid token '" + tok + "'");
    }
    if (tok.size() > 7) throw Error(ErrorCode::IndexOutOfRange, "generator index too large in '" + tok + "'");
    const int idx = std::stoi(tok.substr(1));
    if (idx < 1) throw Error(ErrorCode::IndexOutOfRange, "generator index must be >= 1 in '" + tok + "'");
    max_index = std::max(max_index, idx);
    b.letters.push_back(tok[0] == 's' ? idx : -idx);
  }
  b.strands = static_cast<std::size_t>(max_index) + 1;
  return b;
}

std::string to_string(const BraidWord& b) {
  std::string out;
  for (int l : b.letters) {
    if (!out.empty()) out += ' ';
    out += (l > 0 ? 's' : 'S') + std::to_string(std::abs(l));
  }
  return out;
}

std::size_t closure_components(const BraidWord& b) {
  std::vector<std::size_t> perm(b.strands);
  for (std::size_t i = 0; i < b.strands; ++i) perm[i] = i;
  for (int l : b.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(b.strands, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

namespace {

void require_knot(const BraidWord& b) {
  for (int l : b.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || i >= b.strands) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  }
  const std::size_t c = closure_components(b);
  if (c != 1) {
    throw Error(ErrorCode::NotAKnot, "closure of '" + to_string(b) + "' has " + std::to_string(c) + " components");
  }
}

LaurentPoly lp(long c, long e) { return LaurentPoly(IntPoly{c}, e); }

// Reduced Burau image of one letter, (k-1) x (k-1).
LaurentMatrix reduced_burau_letter(int letter, std::size_t k) {
  const std::size_t dim = k - 1;
  LaurentMatrix m = laurent_identity(dim);
  const long i = std::abs(letter);
  const long b = i - 1;
  const long a = b - 1;
  const long c = b + 1;
  const auto sb = static_cast<std::size_t>(b);
  if (letter > 0) {
    m[sb][sb] = lp(-1, 1);
    if (a >= 0) m[static_cast<std::size_t>(a)][sb] = lp(1, 1);
    if (c < static_cast<long>(dim)) m[static_cast<std::size_t>(c)][sb] = lp(1, 0);
  } else {
    m[sb][sb] = lp(-1, -1);
    if (a >= 0) m[static_cast<std::size_t>(a)][sb] = lp(1, 0);
    if (c < static_cast<long>(dim)) m[static_cast<std::size_t>(c)][sb] = lp(1, -1);
  }
  return m;
}

// Unreduced Burau image of one letter, k x k.
LaurentMatrix burau_letter(int letter, std::size_t k) {
  LaurentMatrix m = laurent_identity(k);
  const auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
  if (letter > 0) {
    m[i][i] = LaurentPoly(IntPoly{1, -1}, 0);
    m[i][i + 1] = lp(1, 1);
    m[i + 1][i] = lp(1, 0);
    m[i + 1][i + 1] = LaurentPoly{};
  } else {
    m[i][i] = LaurentPoly{};
    m[i][i + 1] = lp(1, 0);
    m[i + 1][i] = lp(1, -1);
    m[i + 1][i + 1] = LaurentPoly(IntPoly{-1, 1}, -1);
  }
  return m;
}

IntPoly geometric_sum(std::size_t k) {
  return IntPoly(std::vector<BigInt>(k, BigInt(1)));
}

}  // namespace

IntPoly burau_alexander(const BraidWord& b) {
  require_knot(b);
  const std::size_t k = b.strands;
  LaurentMatrix rho = laurent_identity(k - 1);
  for (int l : b.letters) rho = rho * reduced_burau_letter(l, k);
  for (std::size_t i = 0; i + 1 < k; ++i) rho[i][i] = rho[i][i] - lp(1, 0);
  const IntPoly det = poly_determinant(clear_denominators(rho));
  if (det.is_zero()) throw Error(ErrorCode::InternalDivisibilityFailure, "vanishing Burau determinant");
  IntPoly quotient;
  try {
    quotient = exact_div(det, geometric_sum(k));
  } catch (const Error&) {
    throw Error(ErrorCode::InternalDivisibilityFailure,
                "Burau determinant " + to_string(det) + " not divisible by 1 + ... + t^" + std::to_string(k - 1));
  }
  return normalize_unit(quotient).canonical;
}

PolyMatrix burau_presentation(const BraidWord& b) {
  require_knot(b);
  const std::size_t k = b.strands;
  LaurentMatrix m = laurent_identity(k);
  for (int l : b.letters) m = m * burau_letter(l, k);
  LaurentMatrix minor(k - 1, std::vector<LaurentPoly>(k - 1));
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = 0; j + 1 < k; ++j) minor[i][j] = (i == j ? lp(1, 0) : LaurentPoly{}) - m[i][j];
  return clear_denominators(minor);
}

AlexanderData alexander_from_braid(const BraidWord& b) {
  AlexanderData data;
  data.delta = burau_alexander(b);
  data.presentation = burau_presentation(b);
  data.source = KnotSource::Braid;
  const IntPoly det = poly_determinant(data.presentation);
  if (det.is_zero() || normalize_unit(det).canonical != data.delta) {
    throw Error(ErrorCode::InternalDivisibilityFailure,
                "Burau presentation determinant " + to_string(det) + " disagrees with " + to_string(data.delta));
  }
  return data;
}

// ---------------------------------------------------------------------------
// Seifert matrices

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (v_.rows() != v_.cols()) throw Error(ErrorCode::NotASeifertMatrix, "Seifert matrix must be square");
  if (v_.rows() % 2 != 0) throw Error(ErrorCode::NotASeifertMatrix, "Seifert matrix must have even size");
  IntMatrix form = v_;
  for (std::size_t i = 0; i < v_.rows(); ++i)
    for (std::size_t j = 0; j < v_.cols(); ++j) form(i, j) -= v_(j, i);
  if (determinant(form) != 1) throw Error(ErrorCode::NotASeifertMatrix, "det(V - V^T) must be 1");
}

PolyMatrix seifert_presentation(const IntMatrix& v) {
  const std::size_t n = v.rows();
  PolyMatrix q(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = IntPoly(std::vector<BigInt>{v(i, j), -v(j, i)});
  return q;
}

AlexanderData alexander_from_seifert(const SeifertMatrix& v) {
  AlexanderData data;
  data.presentation = seifert_presentation(v.entries());
  const IntPoly det = poly_determinant(data.presentation);
  data.delta = normalize_unit(det).canonical;
  data.source = KnotSource::Seifert;
  return data;
}

std::string_view knot_source_name(KnotSource s) noexcept {
  switch (s) {
    case KnotSource::Braid: return "braid";
    case KnotSource::Seifert: return "seifert";
    case KnotSource::Table: return "table";
  }
  return "table";
}

// ---------------------------------------------------------------------------
// Branched covers

IntMatrix cover_relation_matrix(const PolyMatrix& q, std::size_t n) {
  const std::size_t size = q.size();
  IntMatrix rel(size * n, size * n);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<BigInt> folded(n, BigInt(0));
      const IntPoly& p = q[i][j];
      for (std::size_t e = 0; e < p.size(); ++e) folded[e % n] += p.coeffs()[e];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) rel(i * n + a, j * n + (a + c) % n) = folded[c];
    }
  return rel;
}

FinAbGroup branched_cover_homology(const AlexanderData& data, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cover degree must be >= 1");
  return FinAbGroup::cokernel(cover_relation_matrix(data.presentation, n));
}

OrderCheck fox_formula_check(const AlexanderData& data, std::size_t n) {
  return judge_order(n, cyclic_resultant(data.delta, n), branched_cover_homology(data, n));
}

// ---------------------------------------------------------------------------

AlexanderData alexander_from_table(const KnotEntry& entry) {
  std::vector<std::vector<long>> rows = entry.seifert;
  IntMatrix v = rows.empty() ? IntMatrix(0, 0) : IntMatrix::from_rows(rows);
  AlexanderData data = alexander_from_seifert(SeifertMatrix(std::move(v)));
  const IntPoly golden(std::vector<BigInt>(entry.delta_coeffs.begin(), entry.delta_coeffs.end()));
  if (data.delta != golden) {
    throw Error(ErrorCode::InternalDivisibilityFailure, "table entry " + entry.name + " disagrees with its golden polynomial");
  }
  data.source = KnotSource::Table;
  data.name = entry.name;
  return data;
}

const KnotEntry* find_knot(std::string_view name) {
  for (const auto& e : knot_table())
    if (e.name == name) return &e;
  return nullptr;
}

AlexanderData resolve_knot(const KnotInput& input) {
  struct Visitor {
    AlexanderData operator()(const TableKnot& t) const {
      const KnotEntry* e = find_knot(t.name);
      if (!e) throw Error(ErrorCode::InvalidArgument, "unknown knot '" + t.name + "'");
      return alexander_from_table(*e);
    }
    AlexanderData operator()(const BraidWord& b) const { return alexander_from_braid(b); }
    AlexanderData operator()(const SeifertMatrix& v) const { return alexander_from_seifert(v); }
  };
  return std::visit(Visitor{}, input);
}

PipelineReport theorem_pipeline(const AlexanderData& j, const AlexanderData& k, std::span<const std::size_t> levels,
                                const BigInt& modulus) {
  PipelineReport r;
  r.j = j;
  r.k = k;
  r.twists = profinite_ideal_match(j.delta, k.delta, levels, modulus);
  r.stripped = strip_common_cyclotomic(j.delta, k.delta);
  r.fried = fried_verify(r.stripped.f, r.stripped.g, default_fried_bound(r.stripped.f, r.stripped.g));
  r.equal = equal_up_to_unit(j.delta, k.delta);
  r.consistent = r.twists.compatible == r.equal;
  return r;
}

}  // namespace alexlab
