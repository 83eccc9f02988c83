// Timing harness for the two kernels that carry OpenMP pragmas, against
// their serial twins. Equality of results is asserted on every run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "qtoda/detpoly.hpp"
#include "qtoda/laxtoda.hpp"
#include "qtoda/linalg.hpp"
#include "qtoda/rootdata.hpp"

using namespace qtoda;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RatMatrix random_system(size_t n, std::uint64_t seed, std::vector<Rat>& rhs) {
  std::mt19937_64 rng(seed);
  auto entry = [&rng]() {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 7) + 1;
    return rat(num, den);
  };
  RatMatrix A(n, std::vector<Rat>(n));
  rhs.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) A[i][j] = entry();
    rhs[i] = entry();
  }
  return A;
}

void bench_linear_solve(size_t n, std::uint64_t seed) {
  std::vector<Rat> rhs;
  const RatMatrix A = random_system(n, seed, rhs);

  auto t0 = std::chrono::steady_clock::now();
  const LinearSolution serial = linear_solve_serial(A, rhs);
  const double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const LinearSolution parallel = linear_solve(A, rhs);
  const double tp = seconds_since(t0);

  const bool same = serial.feasible == parallel.feasible &&
                    serial.particular == parallel.particular &&
                    serial.nullspace == parallel.nullspace;
  std::printf("linear_solve  n=%zu      serial %8.4fs  parallel %8.4fs  speedup %5.2fx  identical %s\n",
              n, ts, tp, ts / tp, same ? "yes" : "NO");
  if (!same) std::exit(1);
}

void bench_char_poly(Family fam, int rank) {
  const LaxMatrix m = build_lax(build_root_system(fam, rank));

  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Polynomial> serial = char_poly_det_serial(m.entries);
  const double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const std::vector<Polynomial> parallel = char_poly_det(m.entries);
  const double tp = seconds_since(t0);

  const bool same = serial == parallel;
  std::printf("char_poly_det %s%d (%zux%zu) serial %8.4fs  parallel %8.4fs  speedup %5.2fx  identical %s\n",
              family_name(fam), rank, m.entries.size(), m.entries.size(), ts, tp, ts / tp,
              same ? "yes" : "NO");
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  size_t n = 160;
  std::uint64_t seed = 42;
  if (argc > 1) n = static_cast<size_t>(std::strtoul(argv[1], nullptr, 10));
  if (argc > 2) seed = std::strtoull(argv[2], nullptr, 10);

  bench_linear_solve(n, seed);
  bench_linear_solve(n / 2, seed + 1);
  bench_char_poly(Family::A, 5);
  bench_char_poly(Family::B, 3);
  bench_char_poly(Family::B, 4);
  return 0;
}
