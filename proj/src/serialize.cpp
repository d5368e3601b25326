#include <alexlab/serialize.hpp>

#include <alexlab/error.hpp>

namespace alexlab {

namespace {

template <typename F>
auto guarded(const char* what, F&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed ") + what + ": " + e.what());
  }
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  throw Error(ErrorCode::SyntaxError, "expected an integer or decimal string");
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json big_array(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_decimal(v));
  return a;
}

std::vector<BigInt> big_array_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::SyntaxError, "expected an array of integers");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from_json(x));
  return out;
}

Json to_json(const IntPoly& f) { return to_json(LaurentPoly(f, 0)); }

Json to_json(const LaurentPoly& f) {
  Json j;
  j["coeffs"] = big_array(f.body.coeffs());
  j["lowest_deg"] = f.body.is_zero() ? 0 : f.low_degree;
  j["text"] = to_string(f);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded("polynomial record", [&] {
    return LaurentPoly(IntPoly(big_array_from_json(j.at("coeffs"))), j.value("lowest_deg", 0L));
  });
}

Json to_json(const RingElem& x) {
  Json j;
  j["n"] = x.ctx().n;
  j["m"] = to_decimal(x.ctx().m);
  j["coeffs"] = big_array(x.coeffs());
  return j;
}

RingElem ring_elem_from_json(const Json& j) {
  return guarded("ring element record", [&] {
    TruncRingCtx ctx(j.at("n").get<std::size_t>(), big_from_json(j.at("m")));
    return RingElem(ctx, big_array_from_json(j.at("coeffs")));
  });
}

Json to_json(const IdealLattice& ideal) {
  Json j;
  j["n"] = ideal.ctx.n;
  j["m"] = to_decimal(ideal.ctx.m);
  Json rows = Json::array();
  for (const auto& r : ideal.basis.row_data()) rows.push_back(big_array(r));
  j["hnf"] = std::move(rows);
  return j;
}

IdealLattice ideal_from_json(const Json& j) {
  return guarded("ideal record", [&] {
    TruncRingCtx ctx(j.at("n").get<std::size_t>(), big_from_json(j.at("m")));
    IntMatrix basis(0, ctx.n);
    for (const auto& r : j.at("hnf")) basis.append_row(big_array_from_json(r));
    // Re-canonicalize so hand-written records compare correctly.
    return IdealLattice{ctx, hermite_normal_form(basis, ctx.m)};
  });
}

Json to_json(const FinAbGroup& g) {
  Json j;
  j["rank"] = g.rank;
  j["invariant_factors"] = big_array(g.invariant_factors);
  return j;
}

FinAbGroup group_from_json(const Json& j) {
  return guarded("group record", [&] {
    FinAbGroup g;
    g.rank = j.at("rank").get<std::size_t>();
    g.invariant_factors = big_array_from_json(j.at("invariant_factors"));
    return g;
  });
}

Json sequence_file(const std::vector<BigInt>& abs_values) {
  Json j;
  j["N"] = abs_values.size();
  j["abs_values"] = big_array(abs_values);
  return j;
}

std::vector<BigInt> sequence_from_json(const Json& j) {
  return guarded("sequence file", [&] {
    auto values = big_array_from_json(j.at("abs_values"));
    if (j.contains("N") && j.at("N").get<std::size_t>() != values.size()) {
      throw Error(ErrorCode::SyntaxError, "sequence file N does not match the number of values");
    }
    for (const auto& v : values)
      if (v < 0) throw Error(ErrorCode::SyntaxError, "sequence values must be absolute values");
    return values;
  });
}

Json to_json(const OrderCheck& c) {
  Json j;
  j["n"] = c.n;
  j["resultant"] = to_decimal(c.resultant);
  j["abs_resultant"] = to_decimal(abs(c.resultant));
  j["group"] = to_json(c.group);
  auto order = c.group.order();
  j["group_order"] = order ? Json(to_decimal(*order)) : Json(nullptr);
  j["status"] = std::string(check_status_name(c.status));
  j["passed"] = c.passed;
  return j;
}

Json to_json(const StripResult& s) {
  Json j;
  j["f"] = to_json(s.f);
  j["g"] = to_json(s.g);
  j["stripped"] = s.stripped;
  return j;
}

Json to_json(const FriedReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["agree"] = r.agree;
  if (r.first_mismatch) {
    Json m;
    m["n"] = r.first_mismatch->n;
    m["abs_f"] = to_decimal(r.first_mismatch->abs_f);
    m["abs_g"] = to_decimal(r.first_mismatch->abs_g);
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["evidence_only"] = true;
  j["note"] = r.agree ? "absolute cyclic resultants agree for every n <= bound; this is evidence, not a proof"
                      : "absolute cyclic resultants differ";
  return j;
}

Json to_json(const ReconstructionReport& r) {
  Json j;
  j["N"] = r.bound;
  j["deg_max"] = r.max_degree;
  j["height_max"] = to_decimal(r.max_height);
  Json c = Json::array();
  for (const auto& p : r.candidates) c.push_back(to_json(p));
  j["candidates"] = std::move(c);
  j["enumerated"] = r.enumerated;
  j["vanishing_levels"] = r.vanishing_levels;
  j["nonvanishing_hypothesis_holds"] = r.vanishing_levels.empty();
  if (r.vanishing_levels.empty()) {
    j["note"] = "all values nonzero: within the bounds the candidate set is the reconstruction";
  } else {
    j["note"] = "uniqueness hypothesis void: the sequence vanishes at n = " + std::to_string(r.vanishing_levels.front()) +
                "; candidates need not be unique";
  }
  j["finite_level_only"] = true;
  return j;
}

Json to_json(const TwistMatchReport& r) {
  Json j;
  j["finite_level_only"] = true;
  j["levels"] = r.levels;
  j["modulus"] = to_decimal(r.modulus);
  Json per = Json::array();
  for (const auto& lm : r.per_level) {
    Json l;
    l["n"] = lm.n;
    l["candidates"] = lm.units;
    l["maps_into_divisors"] = lm.maps_into_divisors;
    per.push_back(std::move(l));
  }
  j["per_level"] = std::move(per);
  j["compatible"] = r.compatible;
  j["witness_level"] = optional_size(r.witness_level);
  if (r.family_residue) {
    Json f;
    f["residue"] = to_decimal(*r.family_residue);
    f["modulus"] = to_decimal(r.family_modulus);
    j["family"] = std::move(f);
  } else {
    j["family"] = nullptr;
  }
  return j;
}

Json to_json(const AlexanderData& d) {
  Json j;
  j["name"] = d.name.empty() ? Json(nullptr) : Json(d.name);
  j["source"] = std::string(knot_source_name(d.source));
  j["delta"] = to_json(d.delta);
  Json q = Json::array();
  for (const auto& row : d.presentation) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(big_array(p.coeffs()));
    q.push_back(std::move(r));
  }
  j["presentation"] = std::move(q);
  return j;
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["finite_level_only"] = true;
  j["J"] = to_json(r.j);
  j["K"] = to_json(r.k);
  j["twist_match"] = to_json(r.twists);
  j["strip"] = to_json(r.stripped);
  j["fried"] = to_json(r.fried);
  j["verdict"] = r.equal ? "equal" : "distinct";
  j["consistent"] = r.consistent;
  if (!r.consistent) {
    j["warning"] = "INCONSISTENT: twist-family verdict disagrees with the polynomial comparison";
  }
  return j;
}

Json to_json(const StableImage& s) {
  Json j;
  j["image"] = to_json(s.image);
  j["is_zero"] = s.image.is_zero();
  j["stabilized_at"] = s.stabilized_at;
  Json trace = Json::array();
  for (const auto& step : s.trace) {
    Json t;
    t["n"] = step.level.n;
    t["m"] = to_decimal(step.level.m);
    t["image_size"] = to_decimal(step.image_size);
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  j["finite_level_only"] = true;
  return j;
}

Json knot_table_json(std::span<const KnotEntry> table) {
  Json a = Json::array();
  for (const auto& e : table) {
    Json j;
    j["name"] = e.name;
    j["braid"] = e.braid;
    j["seifert"] = e.seifert;
    Json d = Json::array();
    for (long c : e.delta_coeffs) d.push_back(std::to_string(c));
    j["delta_coeffs"] = std::move(d);
    a.push_back(std::move(j));
  }
  return a;
}

std::vector<KnotEntry> knot_table_from_json(const Json& j) {
  return guarded("knot table", [&] {
    std::vector<KnotEntry> out;
    for (const auto& e : j) {
      KnotEntry k;
      k.name = e.at("name").get<std::string>();
      k.braid = e.at("braid").get<std::string>();
      k.seifert = e.at("seifert").get<std::vector<std::vector<long>>>();
      for (const auto& c : big_array_from_json(e.at("delta_coeffs"))) k.delta_coeffs.push_back(c.get_si());
      out.push_back(std::move(k));
    }
    return out;
  });
}

}  // namespace alexlab
