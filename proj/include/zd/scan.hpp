#pragma once
// Brute-force completeness scan: test every pair of two-unit planes in
// the 16-D algebra, all four diagonal signings, for exact zero
// products. Works from raw element arithmetic only, so it serves as an
// independent oracle for the structured zero-divisor enumeration. Two
// kernels share one result type: a serial reference and an OpenMP
// variant parallel over the first plane index (identical output, both
// deterministic).

#include <cstddef>
#include <vector>

#include "zd/cdalgebra.hpp"
#include "zd/zerodiv.hpp"

namespace zd {

struct ScanResult {
  std::vector<Coupling> couplings;  // every zero product found, sorted
  std::vector<Assessor> planes;     // distinct planes involved, sorted
  std::size_t edges = 0;            // distinct unordered plane pairs
  std::size_t triangles = 0;        // 3-cliques in the edge graph
  std::size_t rule1_closed = 0;     // triangles obeying o1^o2=o3, o1^S2=S3
  bool exogamous = true;  // every plane found pairs i < 8 with j in 9..15
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

ScanResult scan_zero_couplings_serial(const CDAlgebra& alg);
ScanResult scan_zero_couplings_parallel(const CDAlgebra& alg);

}  // namespace zd
