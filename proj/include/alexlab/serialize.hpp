#pragma once

// JSON records for every value and report the CLI emits. Big integers are
// always decimal strings. Key order is fixed, so output is byte-stable.

#include <alexlab/bigpoly.hpp>
#include <alexlab/cyclores.hpp>
#include <alexlab/knot.hpp>
#include <alexlab/quotring.hpp>

#include <json.hpp>

#include <vector>

namespace alexlab {

using Json = nlohmann::ordered_json;

Json big_array(const std::vector<BigInt>& values);
std::vector<BigInt> big_array_from_json(const Json& j);

Json to_json(const IntPoly& f);
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const RingElem& x);
RingElem ring_elem_from_json(const Json& j);
Json to_json(const IdealLattice& ideal);
IdealLattice ideal_from_json(const Json& j);
Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

/// Sequence file: {N, abs_values}.
Json sequence_file(const std::vector<BigInt>& abs_values);
std::vector<BigInt> sequence_from_json(const Json& j);

Json to_json(const OrderCheck& c);
Json to_json(const StripResult& s);
Json to_json(const FriedReport& r);
Json to_json(const ReconstructionReport& r);
Json to_json(const TwistMatchReport& r);
Json to_json(const AlexanderData& d);
Json to_json(const PipelineReport& r);
Json to_json(const StableImage& s);

/// Knot table file: array of {name, braid, seifert, delta_coeffs}.
Json knot_table_json(std::span<const KnotEntry> table);
std::vector<KnotEntry> knot_table_from_json(const Json& j);

}  // namespace alexlab
