#include "parastack/report.hpp"

#include <sstream>

namespace parastack {

using nlohmann::json;

json dim_vector_to_json(const DimVector& v) {
  json flags = json::array();
  for (const auto& row : v.rows()) flags.push_back(row);
  return json{{"rank", v.rank()}, {"flags", std::move(flags)}};
}

namespace {

std::int64_t get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& get_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace

DimVector dim_vector_from_json(const json& j, const WeightType& wt) {
  const std::int64_t rank = get_int(get_field(j, "rank"), "rank");
  const json& flags = get_field(j, "flags");
  if (!flags.is_array()) throw ParseError("flags must be an array of arrays");
  Rows rows;
  rows.reserve(flags.size());
  for (const json& row : flags) {
    if (!row.is_array()) throw ParseError("flags must be an array of arrays");
    std::vector<std::int64_t> entries;
    entries.reserve(row.size());
    for (const json& x : row) entries.push_back(get_int(x, "flag entry"));
    rows.push_back(std::move(entries));
  }
  return validate(rank, std::move(rows), wt);
}

json problem_to_json(const ProblemSpec& ps) {
  return json{{"genus", ps.genus},
              {"weights", ps.weights.flag_lens()},
              {"alpha", dim_vector_to_json(ps.alpha)}};
}

ProblemSpec parse_problem(const json& j) {
  const std::int64_t genus = get_int(get_field(j, "genus"), "genus");
  if (genus < 0) throw ParseError("genus must be nonnegative");
  const json& weights = get_field(j, "weights");
  if (!weights.is_array()) throw ParseError("weights must be an array");
  std::vector<int> lens;
  lens.reserve(weights.size());
  for (const json& w : weights) lens.push_back(static_cast<int>(get_int(w, "flag length")));
  WeightType wt = WeightType::of(std::move(lens));
  DimVector alpha = dim_vector_from_json(get_field(j, "alpha"), wt);
  return ProblemSpec{static_cast<int>(genus), std::move(wt), std::move(alpha)};
}

namespace {

void check_witness(const DimResult& r, const ProblemSpec& ps, std::int64_t recomputed_at_witness,
                   const char* what) {
  if (r.value.has_value() != r.witness.has_value()) {
    throw InternalInconsistency(std::string(what) + ": value and witness presence disagree");
  }
  if (!r.value) return;
  if (recomputed_at_witness != *r.value) {
    throw InternalInconsistency(std::string(what) + ": witness does not reproduce the maximum");
  }
  if (sum_parts(*r.witness) != ps.alpha) {
    throw InternalInconsistency(std::string(what) + ": witness parts do not sum to alpha");
  }
}

}  // namespace

Report make_report(const ProblemSpec& ps) {
  StackDims d = stack_dims(ps.alpha, ps.genus);
  Verdict v = decide(ps.alpha, ps.genus);

  check_witness(d.nilpotent, ps,
                d.nilpotent.witness ? nilpotent_objective(*d.nilpotent.witness, ps.genus) : 0,
                "dim_nilp");
  check_witness(d.pairs, ps, d.pairs.witness ? pairs_objective(*d.pairs.witness, ps.genus) : 0,
                "dim_pairs");
  check_witness(d.inertia_excess, ps,
                d.inertia_excess.witness ? pairs_objective(*d.inertia_excess.witness, ps.genus) : 0,
                "dim_inertia_excess");

  if (d.inertia_excess.value.has_value() != v.margin.has_value()) {
    throw InternalInconsistency("margin presence disagrees with the inertia locus");
  }
  if (v.margin) {
    const std::int64_t expected = checked_sub(checked_sub(*d.inertia_excess.value, 1), d.bun);
    if (*v.margin != expected) throw InternalInconsistency("margin does not match the dimensions");
    const Classification cls = *v.margin < 0   ? Classification::AlmostVeryGood
                               : *v.margin > 0 ? Classification::NotAlmostGood
                                               : Classification::AlmostGoodOnly;
    if (cls != v.classification) throw InternalInconsistency("classification violates the margin rule");
  } else if (v.classification != Classification::AlmostVeryGood) {
    throw InternalInconsistency("empty inertia locus must classify almost-very-good");
  }
  return Report{ps, std::move(d), std::move(v)};
}

namespace {

json opt_to_json(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json witness_to_json(const std::optional<Decomposition>& w) {
  if (!w) return json(nullptr);
  json parts = json::array();
  for (const DimVector& part : w->parts) parts.push_back(dim_vector_to_json(part));
  return parts;
}

std::string opt_to_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "null";
}

std::string witness_to_text(const std::optional<Decomposition>& w) {
  return w ? to_string(*w) : "null";
}

}  // namespace

json report_to_json(const Report& r) {
  return json{{"input", problem_to_json(r.input)},
              {"dim_bun", r.dims.bun},
              {"dim_nilp", opt_to_json(r.dims.nilpotent.value)},
              {"dim_pairs", opt_to_json(r.dims.pairs.value)},
              {"dim_inertia_excess", opt_to_json(r.dims.inertia_excess.value)},
              {"verdict", classification_name(r.verdict.classification)},
              {"margin", opt_to_json(r.verdict.margin)},
              {"witness", witness_to_json(r.verdict.witness)}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "genus               " << r.input.genus << '\n'
     << "weights             " << to_string(r.input.weights) << '\n'
     << "alpha               " << to_string(r.input.alpha) << '\n'
     << "dim_bun             " << r.dims.bun << '\n'
     << "dim_nilp            " << opt_to_text(r.dims.nilpotent.value) << '\n'
     << "dim_pairs           " << opt_to_text(r.dims.pairs.value) << '\n'
     << "dim_inertia_excess  " << opt_to_text(r.dims.inertia_excess.value) << '\n'
     << "verdict             " << classification_name(r.verdict.classification) << '\n'
     << "margin              " << opt_to_text(r.verdict.margin) << '\n'
     << "witness             " << witness_to_text(r.verdict.witness) << '\n';
  return os.str();
}

json dims_to_json(const ProblemSpec& ps, const StackDims& d) {
  const auto result = [](const DimResult& r) {
    return json{{"value", opt_to_json(r.value)}, {"witness", witness_to_json(r.witness)}};
  };
  return json{{"input", problem_to_json(ps)},
              {"dim_bun", d.bun},
              {"dim_nilp", result(d.nilpotent)},
              {"dim_pairs", result(d.pairs)},
              {"dim_inertia_excess", result(d.inertia_excess)}};
}

std::string dims_to_text(const ProblemSpec& ps, const StackDims& d) {
  std::ostringstream os;
  os << "genus               " << ps.genus << '\n'
     << "weights             " << to_string(ps.weights) << '\n'
     << "alpha               " << to_string(ps.alpha) << '\n'
     << "dim_bun             " << d.bun << '\n'
     << "dim_nilp            " << opt_to_text(d.nilpotent.value) << "  witness "
     << witness_to_text(d.nilpotent.witness) << '\n'
     << "dim_pairs           " << opt_to_text(d.pairs.value) << "  witness "
     << witness_to_text(d.pairs.witness) << '\n'
     << "dim_inertia_excess  " << opt_to_text(d.inertia_excess.value) << "  witness "
     << witness_to_text(d.inertia_excess.witness) << '\n';
  return os.str();
}

json scan_row_to_json(const ScanRow& row) {
  return json{{"genus", row.genus},
              {"weights", row.alpha.weight_type().flag_lens()},
              {"alpha", dim_vector_to_json(row.alpha)},
              {"verdict", classification_name(row.verdict.classification)},
              {"margin", opt_to_json(row.verdict.margin)}};
}

std::string scan_row_to_text(const ScanRow& row) {
  std::ostringstream os;
  os << "g=" << row.genus << " w=" << to_string(row.alpha.weight_type())
     << " alpha=" << to_string(row.alpha)
     << " verdict=" << classification_name(row.verdict.classification)
     << " margin=" << opt_to_text(row.verdict.margin);
  return os.str();
}

}  // namespace parastack
