// Times the serial and OpenMP zero-coupling scans over the 16-D
// algebra and checks they agree. Usage: zd_bench [repeats].

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "zd/scan.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  if (repeats < 1) {
    std::cerr << "usage: zd_bench [repeats >= 1]\n";
    return 2;
  }

  const zd::CDAlgebra alg = zd::build_algebra(4);
  std::cout << "16-D plane-pair scan, " << repeats << " repeats\n";

  zd::ScanResult serial, parallel;
  double serial_best = 1e30, parallel_best = 1e30;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = Clock::now();
    serial = zd::scan_zero_couplings_serial(alg);
    serial_best = std::min(serial_best, seconds_since(t0));

    t0 = Clock::now();
    parallel = zd::scan_zero_couplings_parallel(alg);
    parallel_best = std::min(parallel_best, seconds_since(t0));
  }

  if (!(serial == parallel)) {
    std::cerr << "mismatch between serial and parallel scans\n";
    return 1;
  }

  std::cout << "couplings " << serial.couplings.size() << ", edges "
            << serial.edges << ", triangles " << serial.triangles << "\n";
  std::cout << "serial   best " << serial_best * 1e3 << " ms\n";
  std::cout << "parallel best " << parallel_best * 1e3 << " ms (speedup "
            << serial_best / parallel_best << "x)\n";
  return 0;
}
