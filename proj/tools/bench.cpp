// Benchmark comparing the serial reference kernels against the
// OpenMP-parallel ones on root-system coroot configurations.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "curv/matroid.hpp"
#include "curv/rootsys.hpp"
#include "curv/squarefree.hpp"

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

template <class F>
double time_ms(F&& f) {
  double t0 = now_ms();
  f();
  return now_ms() - t0;
}

void bench_one(const std::string& label, bool algebra) {
  auto rs = curv::build_root_system(label);
  auto cfg = curv::coroot_configuration(rs);
  curv::Matroid matroid(cfg);
  matroid.circuits();  // shared by both paths, excluded from the timing

  curv::GradedCount serial, parallel;
  double ts = time_ms([&] { serial = matroid.graded_counts_serial(); });
  double tp = time_ms([&] { parallel = matroid.graded_counts(); });
  std::printf("%-4s matroid   serial %9.2f ms   parallel %9.2f ms   %s\n",
              label.c_str(), ts, tp,
              serial == parallel ? "match" : "MISMATCH");

  if (algebra) {
    curv::GradedCount aserial, aparallel;
    double as = time_ms([&] { aserial = curv::algebra_graded_dims_serial(cfg); });
    double ap = time_ms([&] { aparallel = curv::algebra_graded_dims(cfg); });
    std::printf("%-4s algebra   serial %9.2f ms   parallel %9.2f ms   %s\n",
                label.c_str(), as, ap,
                aserial == aparallel ? "match" : "MISMATCH");
  }
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled\n");
#endif
  std::vector<std::string> labels = {"A3", "B3", "D4"};
  bool big = argc > 1 && std::string(argv[1]) == "--big";
  if (big) labels.push_back("F4");
  for (const auto& label : labels)
    bench_one(label, label != "F4");
  return 0;
}
