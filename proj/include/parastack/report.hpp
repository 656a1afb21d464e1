#ifndef PARASTACK_REPORT_HPP
#define PARASTACK_REPORT_HPP

#include <string>

#include <json.hpp>

#include "parastack/dims.hpp"
#include "parastack/goodness.hpp"
#include "parastack/scan.hpp"

namespace parastack {

/// Input could not be mapped to a valid problem; the CLI exits 1.
struct ParseError : Error { using Error::Error; };

/// A computed report failed its own consistency checks; the CLI exits 2.
struct InternalInconsistency : Error { using Error::Error; };

/// The (genus, weight type, dimension vector) triple a command acts on.
struct ProblemSpec {
  int genus = 0;
  WeightType weights;
  DimVector alpha;

  bool operator==(const ProblemSpec&) const = default;
};

nlohmann::json dim_vector_to_json(const DimVector& v);
DimVector dim_vector_from_json(const nlohmann::json& j, const WeightType& wt);

nlohmann::json problem_to_json(const ProblemSpec& ps);

/// Parses {"genus": g, "weights": [w...], "alpha": {"rank": r, "flags": [[..]..]}}.
/// Shape and monotonicity failures surface as the core error types;
/// structural JSON problems as ParseError.
ProblemSpec parse_problem(const nlohmann::json& j);

struct Report {
  ProblemSpec input;
  StackDims dims;
  Verdict verdict;
};

/// Computes every dimension and the verdict, then re-derives each
/// reported maximum from its witness and the margin from its parts;
/// any disagreement raises InternalInconsistency.
Report make_report(const ProblemSpec& ps);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

nlohmann::json dims_to_json(const ProblemSpec& ps, const StackDims& d);
std::string dims_to_text(const ProblemSpec& ps, const StackDims& d);

nlohmann::json scan_row_to_json(const ScanRow& row);
std::string scan_row_to_text(const ScanRow& row);

}  // namespace parastack

#endif
