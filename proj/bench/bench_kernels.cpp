// Timing comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fss/labels.hpp"
#include "fss/lattice.hpp"
#include "fss/linalg.hpp"
#include "fss/qarith.hpp"

using namespace fss;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

CMat random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMat m(n, n);
  for (auto& v : m.data()) v = cplx(u(rng), u(rng));
  return m;
}

void bench_matmul(int n, int reps) {
  CMat A = random_matrix(n, 1), B = random_matrix(n, 2);
  auto t0 = clk::now();
  CMat C1 = matmul_serial(A, B);
  for (int r = 1; r < reps; ++r) C1 = matmul_serial(A, B);
  double serial = ms_since(t0) / reps;
  t0 = clk::now();
  CMat C2 = matmul(A, B);
  for (int r = 1; r < reps; ++r) C2 = matmul(A, B);
  double parallel = ms_since(t0) / reps;
  double gflops = 8.0 * n * double(n) * n / (parallel * 1e6);
  std::printf("matmul %4dx%-4d  serial %9.2f ms  omp %9.2f ms  (x%.2f, %.2f GF/s)  diff %.1e\n",
              n, n, serial, parallel, serial / parallel, gflops,
              max_abs_diff(C1, C2));
}

void bench_weights(int N, int ell, int reps) {
  RootOfUnityContext ctx(N, ell);
  std::vector<Partition> labels = brauer_members_all(ctx);
  // widen the batch so the parallel map has real work
  std::vector<Partition> batch;
  for (int r = 0; r < 2000; ++r)
    batch.push_back(labels[r % labels.size()]);
  auto t0 = clk::now();
  WeightTable t1 = build_weight_table_serial(ctx, WeightKind::brauer, batch);
  for (int r = 1; r < reps; ++r)
    t1 = build_weight_table_serial(ctx, WeightKind::brauer, batch);
  double serial = ms_since(t0) / reps;
  t0 = clk::now();
  WeightTable t2 = build_weight_table(ctx, WeightKind::brauer, batch);
  for (int r = 1; r < reps; ++r)
    t2 = build_weight_table(ctx, WeightKind::brauer, batch);
  double parallel = ms_since(t0) / reps;
  double diff = 0.0;
  for (size_t i = 0; i < t1.entries.size(); ++i)
    diff = std::max(diff,
                    std::fabs(t1.entries[i].second - t2.entries[i].second));
  std::printf("weights (N=%d,ell=%d) x%-5zu serial %9.2f ms  omp %9.2f ms  (x%.2f)  diff %.1e\n",
              N, ell, batch.size(), serial, parallel, serial / parallel, diff);
}

void bench_smatrix(int k, int ell, int reps) {
  LatticePair pair{k, {LatticeName::Q, 1.0}, {LatticeName::Zk, 1.0 / ell}};
  auto t0 = clk::now();
  SMatrix s1 = s_matrix_serial(pair, SignChar::eps);
  for (int r = 1; r < reps; ++r) s1 = s_matrix_serial(pair, SignChar::eps);
  double serial = ms_since(t0) / reps;
  t0 = clk::now();
  SMatrix s2 = s_matrix(pair, SignChar::eps);
  for (int r = 1; r < reps; ++r) s2 = s_matrix(pair, SignChar::eps);
  double parallel = ms_since(t0) / reps;
  double diff = 0.0;
  for (size_t i = 0; i < s1.entries.size(); ++i)
    diff = std::max(diff, std::abs(s1.entries[i] - s2.entries[i]));
  std::printf("s-matrix k=%d ell=%-3d %3dx%-3d serial %9.2f ms  omp %9.2f ms  (x%.2f)  diff %.1e\n",
              k, ell, s1.nrows, s1.ncols, serial, parallel, serial / parallel,
              diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  bench_matmul(256, 5);
  bench_matmul(512, 3);
  bench_matmul(1024, 1);
  bench_weights(5, 24, 5);
  bench_smatrix(2, 12, 3);
  bench_smatrix(3, 8, 1);
  return 0;
}
