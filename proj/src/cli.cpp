#include <alexlab/cli.hpp>

#include <alexlab/cyclores.hpp>
#include <alexlab/error.hpp>
#include <alexlab/knot.hpp>
#include <alexlab/quotring.hpp>
#include <alexlab/serialize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace alexlab::cli {

namespace {

struct CheckFailed {
  Json report;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

BigInt parse_modulus(const std::string& text) {
  BigInt m = parse_decimal(text);
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 0");
  return m;
}

SeifertMatrix parse_seifert(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::SyntaxError, "Seifert matrix must be a JSON array of integer rows");
  }
  if (!j.is_array()) throw Error(ErrorCode::SyntaxError, "Seifert matrix must be a JSON array of integer rows");
  if (j.empty()) return SeifertMatrix(IntMatrix(0, 0));
  const std::size_t n = j.size();
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = big_array_from_json(j[i]);
    if (row.size() != n) throw Error(ErrorCode::NotASeifertMatrix, "Seifert matrix must be square");
    for (std::size_t k = 0; k < n; ++k) v(i, k) = row[k];
  }
  return SeifertMatrix(std::move(v));
}

/// "braid:<word>", "seifert:<json rows>", or a table name.
KnotInput parse_knot_spec(const std::string& spec) {
  if (spec.starts_with("braid:")) return parse_braid(spec.substr(6));
  if (spec.starts_with("seifert:")) return parse_seifert(spec.substr(8));
  return TableKnot{spec};
}

AlexanderData resolve_spec(const std::string& spec) {
  AlexanderData d = resolve_knot(parse_knot_spec(spec));
  if (d.name.empty()) d.name = spec;
  return d;
}

std::vector<std::size_t> parse_levels(const std::string& text, std::size_t cap) {
  std::vector<std::size_t> raw;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw Error(ErrorCode::SyntaxError, "bad level '" + item + "'");
    raw.push_back(std::stoul(item));
  }
  if (raw.empty()) throw Error(ErrorCode::SyntaxError, "no levels given");
  for (std::size_t n : raw)
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "level 0 is not allowed");
  // A single number means 1..max.
  if (raw.size() == 1 && text.find(',') == std::string::npos) raw = levels_up_to(raw.front());
  std::erase_if(raw, [cap](std::size_t n) { return n > cap; });
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "every level exceeds the cap " + std::to_string(cap));
  return divisor_closure(raw);
}

Json group_record(const FinAbGroup& g) {
  Json j = to_json(g);
  auto order = g.order();
  j["order"] = order ? Json(to_decimal(*order)) : Json(nullptr);
  return j;
}

}  // namespace

std::size_t levels_cap() {
  const char* v = std::getenv("ALEXLAB_LEVELS_MAX");
  if (!v || !*v) return 12;
  char* end = nullptr;
  const unsigned long n = std::strtoul(v, &end, 10);
  if (*end != '\0' || n == 0) return 12;
  return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomials, cyclic resultants and finite group-ring layers", "alexlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::function<Json()> action;

  // poly
  std::string braid_text, seifert_text, knot_name;
  auto* poly = app.add_subcommand("poly", "Alexander polynomial from a braid, a Seifert matrix or a table knot");
  auto* o_braid = poly->add_option("--braid", braid_text, "braid word, e.g. \"s1 S2 s1 S2\"");
  auto* o_seif = poly->add_option("--seifert", seifert_text, "Seifert matrix as JSON rows");
  auto* o_knot = poly->add_option("--knot", knot_name, "table knot name");
  o_braid->excludes(o_seif)->excludes(o_knot);
  o_seif->excludes(o_knot);
  poly->callback([&] {
    action = [&]() -> Json {
      AlexanderData d;
      if (*o_braid) {
        d = alexander_from_braid(parse_braid(braid_text));
      } else if (*o_seif) {
        d = alexander_from_seifert(parse_seifert(seifert_text));
      } else if (*o_knot) {
        d = resolve_knot(TableKnot{knot_name});
      } else {
        throw Error(ErrorCode::InvalidArgument, "poly needs one of --braid, --seifert, --knot");
      }
      Json j = to_json(d);
      j["delta_coeffs"] = big_array(d.delta.coeffs());
      j["reciprocal"] = is_reciprocal(d.delta);
      j["value_at_1"] = to_decimal(d.delta.evaluate(BigInt(1)));
      return j;
    };
  });

  // cyclic-resultants
  std::string poly_text;
  std::size_t max_n = 0;
  auto* cr = app.add_subcommand("cyclic-resultants", "R(f, t^n - 1) for n = 1..max-n");
  cr->add_option("--poly", poly_text, "polynomial, e.g. \"t^2 - 3t + 1\"")->required();
  cr->add_option("--max-n", max_n, "largest n")->required()->check(CLI::Range(1, 100000));
  cr->callback([&] {
    action = [&]() -> Json {
      const IntPoly f = parse_poly(poly_text);
      const CycResSeq seq = cyclic_resultants(f, max_n);
      Json j;
      j["poly"] = to_json(f);
      j["max_n"] = max_n;
      j["values"] = big_array(seq.values);
      std::vector<BigInt> abs_values;
      for (const auto& v : seq.values) abs_values.push_back(abs(v));
      j["abs_values"] = big_array(abs_values);
      return j;
    };
  });

  // branched-homology
  std::string bh_knot;
  std::size_t bh_n = 0;
  auto* bh = app.add_subcommand("branched-homology", "H_1 of the n-fold branched cyclic cover");
  bh->add_option("--knot", bh_knot, "table name, braid:<word> or seifert:<rows>")->required();
  bh->add_option("--n", bh_n, "cover degree")->required()->check(CLI::Range(1, 1000));
  bh->callback([&] {
    action = [&]() -> Json {
      const AlexanderData d = resolve_spec(bh_knot);
      const OrderCheck c = fox_formula_check(d, bh_n);
      Json j;
      j["knot"] = d.name;
      j["source"] = std::string(knot_source_name(d.source));
      j["n"] = bh_n;
      j["rank"] = c.group.rank;
      j["invariant_factors"] = big_array(c.group.invariant_factors);
      auto order = c.group.order();
      j["order"] = order ? Json(to_decimal(*order)) : Json(nullptr);
      j["fox_check"] = to_json(c);
      if (!c.passed) throw CheckFailed{j};
      return j;
    };
  });

  // weber-check
  std::string wc_poly;
  std::size_t wc_n = 0;
  auto* wc = app.add_subcommand("weber-check", "Compare Z[t]/(t^n - 1, f) with |R(f, t^n - 1)|");
  wc->add_option("--poly", wc_poly, "polynomial")->required();
  wc->add_option("--n", wc_n, "level")->required()->check(CLI::Range(1, 1000));
  wc->callback([&] {
    action = [&]() -> Json {
      const IntPoly f = parse_poly(wc_poly);
      const OrderCheck c = weber_check(f, wc_n);
      Json j;
      j["poly"] = to_json(f);
      j["check"] = to_json(c);
      if (!c.passed) throw CheckFailed{j};
      return j;
    };
  });

  // compare
  std::vector<std::string> knots;
  std::string levels_text = "12";
  std::string cmp_modulus = "0";
  auto* cmp = app.add_subcommand("compare", "Compare two knots level by level");
  cmp->add_option("knots", knots, "two knot specs (table name, braid:<word>, seifert:<rows>)")
      ->required()
      ->expected(2);
  cmp->add_option("--levels", levels_text, "largest level, or a comma list (divisor closure is taken)");
  cmp->add_option("--modulus", cmp_modulus, "coefficient modulus, 0 for integers");
  cmp->callback([&] {
    action = [&]() -> Json {
      const std::size_t cap = levels_cap();
      const auto levels = parse_levels(levels_text, cap);
      const AlexanderData a = resolve_spec(knots.at(0));
      const AlexanderData b = resolve_spec(knots.at(1));
      const PipelineReport r = theorem_pipeline(a, b, levels, parse_modulus(cmp_modulus));
      Json j = to_json(r);
      j["levels_cap"] = cap;
      if (!r.consistent) throw CheckFailed{j};
      return j;
    };
  });

  // fried-pair
  unsigned long fp_p = 2, fp_q = 3;
  std::size_t fp_max_n = 60, fp_witness = 36;
  auto* fp = app.add_subcommand("fried-pair", "Equal cyclic resultants, distinct quotient groups");
  fp->add_option("--p", fp_p, "first prime")->capture_default_str();
  fp->add_option("--q", fp_q, "second prime")->capture_default_str();
  fp->add_option("--max-n", fp_max_n, "resultant comparison bound")->capture_default_str()->check(CLI::Range(1, 10000));
  fp->add_option("--witness-max", fp_witness, "largest level searched for a quotient difference")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  fp->callback([&] {
    action = [&]() -> Json {
      const auto [f, g] = fried_pair(fp_p, fp_q);
      Json j;
      j["p"] = fp_p;
      j["q"] = fp_q;
      j["F"] = to_json(f);
      j["G"] = to_json(g);
      j["resultants"] = to_json(fried_verify(f, g, fp_max_n));
      j["witness_max"] = fp_witness;
      if (auto w = first_quotient_difference(f, g, fp_witness)) {
        Json wj;
        wj["n"] = w->n;
        wj["F_group"] = group_record(w->f_group);
        wj["G_group"] = group_record(w->g_group);
        j["quotient_witness"] = std::move(wj);
      } else {
        j["quotient_witness"] = nullptr;
      }
      j["finite_level_only"] = true;
      return j;
    };
  });

  // reconstruct
  std::string seq_file;
  std::size_t deg_max = 0;
  long height_max = 0;
  auto* rc = app.add_subcommand("reconstruct", "Reciprocal polynomials matching |R(f, t^n - 1)|");
  rc->add_option("--seq-file", seq_file, "JSON file {N, abs_values}")->required();
  rc->add_option("--deg-max", deg_max, "degree bound")->required()->check(CLI::Range(0, 12));
  rc->add_option("--height-max", height_max, "coefficient height bound")->required()->check(CLI::Range(1, 1000));
  rc->callback([&] {
    action = [&]() -> Json {
      std::ifstream in(seq_file);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + seq_file);
      Json file;
      try {
        file = Json::parse(in);
      } catch (const nlohmann::json::exception&) {
        throw Error(ErrorCode::SyntaxError, "sequence file is not valid JSON");
      }
      const auto values = sequence_from_json(file);
      return to_json(reconstruct_reciprocal(values, deg_max, BigInt(height_max)));
    };
  });

  // ring
  auto* ring = app.add_subcommand("ring", "Ideals in Z/m[t]/(t^n - 1)");
  ring->require_subcommand(1);

  std::size_t ie_n = 0;
  std::string ie_m = "0", ie_f, ie_g;
  long ie_v = 1;
  auto* ie = ring->add_subcommand("ideal-equal", "Is (f(t^v)) = (g(t))?");
  ie->add_option("--n", ie_n, "truncation degree")->required()->check(CLI::Range(1, 1000));
  ie->add_option("--modulus", ie_m, "coefficient modulus, 0 for integers");
  ie->add_option("--f", ie_f, "first generator")->required();
  ie->add_option("--g", ie_g, "second generator")->required();
  ie->add_option("--twist", ie_v, "apply t -> t^v to f first")->capture_default_str();
  ie->callback([&] {
    action = [&]() -> Json {
      const TruncRingCtx ctx(ie_n, parse_modulus(ie_m));
      const IdealLattice a = twist(ideal_lattice(reduce(parse_laurent(ie_f), ctx)), ie_v);
      const IdealLattice b = ideal_lattice(reduce(parse_laurent(ie_g), ctx));
      Json j;
      j["twist"] = ie_v;
      j["f_ideal"] = to_json(a);
      j["g_ideal"] = to_json(b);
      j["equal"] = ideal_equal(a, b);
      return j;
    };
  });

  std::size_t an_n = 0;
  std::string an_m = "0", an_poly;
  auto* an = ring->add_subcommand("annihilator", "Ann(f) in Z/m[t]/(t^n - 1)");
  an->add_option("--n", an_n, "truncation degree")->required()->check(CLI::Range(1, 1000));
  an->add_option("--modulus", an_m, "coefficient modulus, 0 for integers");
  an->add_option("--poly", an_poly, "element")->required();
  an->callback([&] {
    action = [&]() -> Json {
      const TruncRingCtx ctx(an_n, parse_modulus(an_m));
      const RingElem x = reduce(parse_laurent(an_poly), ctx);
      const IdealLattice ann = annihilator(x);
      Json j;
      j["element"] = to_json(x);
      j["annihilator"] = to_json(ann);
      j["is_zero"] = ann.is_zero();
      return j;
    };
  });

  std::string ml_poly, ml_target_m = "2", ml_max_m = "128";
  std::size_t ml_target_n = 2, ml_max_n = 32;
  auto* ml = ring->add_subcommand("ml-test", "Stable image of annihilators pushed down to a target layer");
  ml->add_option("--poly", ml_poly, "polynomial")->required();
  ml->add_option("--target-n", ml_target_n, "target truncation degree")->capture_default_str()->check(CLI::Range(1, 1000));
  ml->add_option("--target-m", ml_target_m, "target modulus (> 0)")->capture_default_str();
  ml->add_option("--max-n", ml_max_n, "schedule cap on n")->capture_default_str()->check(CLI::Range(1, 1000));
  ml->add_option("--max-m", ml_max_m, "schedule cap on m")->capture_default_str();
  ml->callback([&] {
    action = [&]() -> Json {
      const IntPoly f = parse_poly(ml_poly);
      const TruncRingCtx target(ml_target_n, parse_modulus(ml_target_m));
      const auto schedule = doubling_schedule(target, ml_max_n, parse_modulus(ml_max_m));
      Json j;
      j["poly"] = to_json(f);
      try {
        Json s = to_json(stable_annihilator_image(f, target, schedule));
        j["stabilized"] = true;
        j.update(s);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStabilized) throw;
        j["stabilized"] = false;
        j["finite_level_only"] = true;
        j["message"] = e.what();
        throw CheckFailed{j};
      }
      return j;
    };
  });

  // knots
  auto* kn = app.add_subcommand("knots", "Dump the bundled knot table");
  kn->callback([&] { action = [] { return knot_table_json(knot_table()); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  }

  if (!action) {
    err << "error: no subcommand given\n";
    return kInputError;
  }
  try {
    emit(out, action());
    return kOk;
  } catch (const CheckFailed& f) {
    emit(out, f.report);
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  }
}

}  // namespace alexlab::cli
