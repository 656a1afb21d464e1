#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parastack/decomp.hpp"
#include "parastack/oracle.hpp"
#include "parastack/report.hpp"

using nlohmann::json;
using namespace parastack;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

std::vector<int> parse_genus_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad genus value: " + item);
    }
  }
  if (out.empty()) throw ParseError("genus list must not be empty");
  return out;
}

std::optional<int> max_parts_option(int raw) {
  if (raw == 0) return std::nullopt;  // 0 means unbounded
  return raw;
}

int run_decide(const std::string& input, const std::string& format) {
  const ProblemSpec ps = parse_problem(parse_json(read_input(input)));
  const Report report = make_report(ps);
  if (format == "json") {
    std::cout << report_to_json(report).dump() << '\n';
  } else {
    std::cout << report_to_text(report);
  }
  return 0;
}

int run_dims(const std::string& input, const std::string& format) {
  const ProblemSpec ps = parse_problem(parse_json(read_input(input)));
  const StackDims d = stack_dims(ps.alpha, ps.genus);
  if (format == "json") {
    std::cout << dims_to_json(ps, d).dump() << '\n';
  } else {
    std::cout << dims_to_text(ps, d);
  }
  return 0;
}

int run_decomps(const std::string& input, const std::string& format, int min_parts,
                int max_parts_raw) {
  const json j = parse_json(read_input(input));
  const json& weights = j.contains("weights") ? j.at("weights") : json::array();
  if (!weights.is_array()) throw ParseError("weights must be an array");
  std::vector<int> lens;
  for (const json& w : weights) {
    if (!w.is_number_integer()) throw ParseError("flag length must be an integer");
    lens.push_back(w.get<int>());
  }
  const WeightType wt = WeightType::of(lens);
  if (!j.contains("alpha")) throw ParseError("missing field \"alpha\"");
  const DimVector target = dim_vector_from_json(j.at("alpha"), wt);

  // Buffer so that a failing input produces no partial output.
  std::ostringstream out;
  for_each_decomposition(target, min_parts, max_parts_option(max_parts_raw),
                         [&](const Decomposition& d) {
                           if (format == "json") {
                             json parts = json::array();
                             for (const DimVector& part : d.parts) {
                               parts.push_back(dim_vector_to_json(part));
                             }
                             out << json{{"parts", std::move(parts)}}.dump() << '\n';
                           } else {
                             out << to_string(d) << '\n';
                           }
                           return true;
                         });
  std::cout << out.str();
  return 0;
}

int run_euler(const std::string& input, const std::string& format) {
  const json j = parse_json(read_input(input));
  if (!j.contains("weights")) throw ParseError("missing field \"weights\"");
  if (!j.at("weights").is_array()) throw ParseError("weights must be an array");
  std::vector<int> lens;
  for (const json& w : j.at("weights")) {
    if (!w.is_number_integer()) throw ParseError("flag length must be an integer");
    lens.push_back(w.get<int>());
  }
  const WeightType wt = WeightType::of(lens);
  if (!j.contains("a") || !j.contains("b")) throw ParseError("need both \"a\" and \"b\"");
  const DimVector a = dim_vector_from_json(j.at("a"), wt);
  const DimVector b = dim_vector_from_json(j.at("b"), wt);
  const std::int64_t value = euler_form(a, b);
  if (format == "json") {
    std::cout << json{{"weights", wt.flag_lens()},
                      {"a", dim_vector_to_json(a)},
                      {"b", dim_vector_to_json(b)},
                      {"value", value}}
                     .dump()
              << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int run_scan(std::int64_t max_rank, int max_points, int max_flag_len,
             const std::string& genus_spec, const std::string& format, bool list,
             bool assert_remark38, bool serial, const std::string& filter) {
  std::optional<Classification> wanted;
  if (!filter.empty()) {
    wanted = classification_from_name(filter);
    if (!wanted) throw ParseError("unknown verdict filter: " + filter);
  }
  const GridBounds bounds{max_rank, max_points, max_flag_len};
  const std::vector<int> genus_list = parse_genus_list(genus_spec);
  const std::vector<ScanRow> rows = serial ? run_scan_serial(bounds, genus_list)
                                           : run_scan_parallel(bounds, genus_list);

  std::map<int, std::map<Classification, std::int64_t>> counts;
  for (const ScanRow& row : rows) ++counts[row.genus][row.verdict.classification];

  std::ostringstream out;
  if (list) {
    for (const ScanRow& row : rows) {
      if (wanted && row.verdict.classification != *wanted) continue;
      if (format == "json") {
        out << scan_row_to_json(row).dump() << '\n';
      } else {
        out << scan_row_to_text(row) << '\n';
      }
    }
  }
  if (format == "json") {
    json summary = json::array();
    for (const auto& [g, by_cls] : counts) {
      std::int64_t total = 0;
      for (const auto& [cls, n] : by_cls) total += n;
      const auto count_of = [&](Classification c) {
        auto it = by_cls.find(c);
        return it == by_cls.end() ? 0 : it->second;
      };
      summary.push_back(json{{"genus", g},
                             {"instances", total},
                             {"almost_very_good", count_of(Classification::AlmostVeryGood)},
                             {"almost_good_only", count_of(Classification::AlmostGoodOnly)},
                             {"not_almost_good", count_of(Classification::NotAlmostGood)}});
    }
    out << json{{"summary", std::move(summary)}, {"total", rows.size()}}.dump() << '\n';
  } else {
    out << "genus  instances  almost-very-good  almost-good-only  not-almost-good\n";
    char line[128];
    for (const auto& [g, by_cls] : counts) {
      std::int64_t total = 0;
      for (const auto& [cls, n] : by_cls) total += n;
      const auto count_of = [&](Classification c) {
        auto it = by_cls.find(c);
        return it == by_cls.end() ? 0 : it->second;
      };
      std::snprintf(line, sizeof line, "%5d  %9lld  %16lld  %16lld  %15lld\n", g,
                    static_cast<long long>(total),
                    static_cast<long long>(count_of(Classification::AlmostVeryGood)),
                    static_cast<long long>(count_of(Classification::AlmostGoodOnly)),
                    static_cast<long long>(count_of(Classification::NotAlmostGood)));
      out << line;
    }
  }
  std::cout << out.str();

  if (assert_remark38) {
    const std::vector<std::string> violations = remark38_violations(rows);
    if (!violations.empty()) {
      for (const std::string& v : violations) std::cerr << "assertion violated: " << v << '\n';
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether the moduli stack of quasi-parabolic bundles with a "
      "given genus, weight type, and dimension vector is almost good or "
      "almost very good, with exact integer margins and witness "
      "decompositions."};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "human";
  int min_parts = 1;
  int max_parts = 0;
  std::int64_t max_rank = 2;
  int max_points = 0;
  int max_flag_len = 1;
  std::string genus_spec = "0";
  std::string filter;
  bool list = false;
  bool assert_remark38 = false;
  bool serial = false;

  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input JSON file, or - for stdin")
        ->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
  };

  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "classify one instance and print the margin and witness");
  add_io(decide_cmd);

  CLI::App* dims_cmd = app.add_subcommand(
      "dims", "print the four stack dimensions with their witnesses");
  add_io(dims_cmd);

  CLI::App* decomps_cmd = app.add_subcommand(
      "decomps", "stream the decompositions of alpha into positive parts");
  add_io(decomps_cmd);
  decomps_cmd->add_option("--min-parts", min_parts, "fewest parts per decomposition")
      ->capture_default_str();
  decomps_cmd->add_option("--max-parts", max_parts, "most parts per decomposition (0 = unbounded)")
      ->capture_default_str();

  CLI::App* euler_cmd = app.add_subcommand(
      "euler", "evaluate the Euler form on the vectors \"a\" and \"b\"");
  add_io(euler_cmd);

  CLI::App* scan_cmd = app.add_subcommand(
      "scan",
      "classify every instance within the given bounds and print per-verdict "
      "counts; a flag point is counted as nontrivial when some stored entry "
      "lies strictly between 0 and the rank");
  scan_cmd->add_option("--max-rank", max_rank, "largest rank to scan")->capture_default_str();
  scan_cmd->add_option("--max-points", max_points, "largest number of marked points")
      ->capture_default_str();
  scan_cmd->add_option("--max-flag-len", max_flag_len, "largest flag length per point")
      ->capture_default_str();
  scan_cmd->add_option("--genus", genus_spec, "comma-separated genus list")
      ->capture_default_str();
  scan_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  scan_cmd->add_option("--filter", filter,
                       "with --list, print only instances with this verdict");
  scan_cmd->add_flag("--list", list, "print every classified instance");
  scan_cmd->add_flag("--assert-remark38", assert_remark38,
                     "exit 2 unless every genus >= 2 instance is almost very good, every "
                     "genus 1 instance with a nontrivial flag point is at least almost "
                     "good, and every genus 1 instance with two nontrivial flag points "
                     "is almost very good");
  scan_cmd->add_flag("--serial", serial, "use the serial engine instead of OpenMP");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide_cmd->parsed()) return run_decide(input, format);
    if (dims_cmd->parsed()) return run_dims(input, format);
    if (decomps_cmd->parsed()) {
      return run_decomps(input, format, min_parts, max_parts);
    }
    if (euler_cmd->parsed()) return run_euler(input, format);
    if (scan_cmd->parsed()) {
      return run_scan(max_rank, max_points, max_flag_len, genus_spec, format, list,
                      assert_remark38, serial, filter);
    }
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
