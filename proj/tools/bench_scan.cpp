// Times the serial reference scan against the OpenMP engine on one grid
// and checks that both produce identical rows.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "parastack/scan.hpp"

using namespace parastack;

namespace {

template <typename Fn>
double best_of(int repeat, const Fn& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

std::vector<int> parse_genus(const std::string& spec) {
  std::vector<int> out;
  std::string item;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!item.empty()) out.push_back(std::stoi(item));
      item.clear();
    } else {
      item += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t max_rank = 4;
  int max_points = 3;
  int max_flag_len = 3;
  std::string genus_spec = "0,1,2,3";
  int repeat = 3;

  CLI::App app{"benchmark: serial vs OpenMP classification of a full grid"};
  app.add_option("--max-rank", max_rank)->capture_default_str();
  app.add_option("--max-points", max_points)->capture_default_str();
  app.add_option("--max-flag-len", max_flag_len)->capture_default_str();
  app.add_option("--genus", genus_spec)->capture_default_str();
  app.add_option("--repeat", repeat, "timed runs per engine; best is kept")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const GridBounds bounds{max_rank, max_points, max_flag_len};
  const std::vector<int> genus_list = parse_genus(genus_spec);

  const std::vector<ScanRow> serial_rows = run_scan_serial(bounds, genus_list);
  const std::vector<ScanRow> parallel_rows = run_scan_parallel(bounds, genus_list);
  if (serial_rows != parallel_rows) {
    std::fprintf(stderr, "engines disagree: %zu vs %zu rows\n", serial_rows.size(),
                 parallel_rows.size());
    return 1;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("instances: %zu   threads: %d\n", serial_rows.size(), threads);

  const double serial_ms =
      best_of(repeat, [&] { run_scan_serial(bounds, genus_list); });
  const double parallel_ms =
      best_of(repeat, [&] { run_scan_parallel(bounds, genus_list); });

  std::printf("serial    %10.1f ms\n", serial_ms);
  std::printf("parallel  %10.1f ms   (x%.2f)\n", parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
  return 0;
}
