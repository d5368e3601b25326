#pragma once

// Knot ingestion (braid words, Seifert matrices, the bundled table),
// Alexander polynomials with square presentation matrices, homology of
// branched cyclic covers, and the Alexander-level comparison pipeline.

#include <alexlab/bigpoly.hpp>
#include <alexlab/cyclores.hpp>
#include <alexlab/intmatrix.hpp>
#include <alexlab/polymatrix.hpp>
#include <alexlab/quotring.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace alexlab {

/// Letters are signed generator indices: +i for sigma_i, -i for its inverse.
struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Tokens "s<i>" and "S<i>" separated by whitespace; strands = 1 + max index.
BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& b);

/// Cycle count of the closure permutation (1 means a knot).
std::size_t closure_components(const BraidWord& b);

class SeifertMatrix {
 public:
  /// Throws NotASeifertMatrix unless square, even-sized, with det(V - V^T) = 1.
  explicit SeifertMatrix(IntMatrix v);
  const IntMatrix& entries() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.rows(); }

 private:
  IntMatrix v_;
};

enum class KnotSource { Braid, Seifert, Table };
std::string_view knot_source_name(KnotSource s) noexcept;

struct AlexanderData {
  IntPoly delta;             // canonical unit-normal form
  PolyMatrix presentation;   // square, det = delta up to a unit
  KnotSource source = KnotSource::Seifert;
  std::string name;
};

/// Reduced Burau route: det(rho(b) - I) / (1 + t + ... + t^(k-1)), normalized.
IntPoly burau_alexander(const BraidWord& b);

/// (I - B(b)) for the unreduced Burau matrix with its last row and column
/// deleted; a square presentation of the Alexander module of the closure.
PolyMatrix burau_presentation(const BraidWord& b);

AlexanderData alexander_from_braid(const BraidWord& b);
AlexanderData alexander_from_seifert(const SeifertMatrix& v);

/// V - t V^T
PolyMatrix seifert_presentation(const IntMatrix& v);

/// nq x nq integer relation matrix: every entry of Q replaced by its n x n
/// block of multiplication in Z[t]/(t^n - 1), blocks laid out row-major.
IntMatrix cover_relation_matrix(const PolyMatrix& q, std::size_t n);

FinAbGroup branched_cover_homology(const AlexanderData& data, std::size_t n);

/// Cover homology against |R(delta, t^n - 1)| with the shared pass rule.
OrderCheck fox_formula_check(const AlexanderData& data, std::size_t n);

struct KnotEntry {
  std::string name;
  std::string braid;
  std::vector<std::vector<long>> seifert;
  std::vector<long> delta_coeffs;  // ascending, canonical
};

std::span<const KnotEntry> knot_table();
const KnotEntry* find_knot(std::string_view name);
/// Seifert presentation and golden polynomial of a table entry.
AlexanderData alexander_from_table(const KnotEntry& entry);

/// A knot named in the table, given by a braid, or by a Seifert matrix.
struct TableKnot {
  std::string name;
};
using KnotInput = std::variant<TableKnot, BraidWord, SeifertMatrix>;

AlexanderData resolve_knot(const KnotInput& input);

struct PipelineReport {
  AlexanderData j;
  AlexanderData k;
  TwistMatchReport twists;
  StripResult stripped;
  FriedReport fried;
  bool equal = false;       // deltas agree up to a unit
  bool consistent = false;  // twist-family verdict agrees with `equal`
};

PipelineReport theorem_pipeline(const AlexanderData& j, const AlexanderData& k,
                                std::span<const std::size_t> levels, const BigInt& modulus);

}  // namespace alexlab
