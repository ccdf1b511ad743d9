#include "zd/scan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zd {
namespace {

std::vector<Assessor> all_planes() {
  std::vector<Assessor> planes;
  for (unsigned i = 1; i < 16; ++i)
    for (unsigned j = i + 1; j < 16; ++j) planes.push_back({i, j});
  return planes;
}

// All zero products between diagonals of planes[p] and any later plane.
std::vector<Coupling> scan_from(const CDAlgebra& alg,
                                const std::vector<Assessor>& planes,
                                std::size_t p) {
  std::vector<Coupling> found;
  for (std::size_t q = p + 1; q < planes.size(); ++q)
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1}) {
        const Element d1 = Element::basis(planes[p].o) +
                           Element::basis(planes[p].S, s1);
        const Element d2 = Element::basis(planes[q].o) +
                           Element::basis(planes[q].S, s2);
        if (mul(alg, d1, d2).is_zero())
          found.push_back({{planes[p], s1}, {planes[q], s2}});
      }
  return found;
}

ScanResult summarize(std::vector<Coupling> couplings) {
  ScanResult r;
  std::sort(couplings.begin(), couplings.end());
  r.couplings = std::move(couplings);

  std::set<Assessor> planes;
  std::set<std::pair<Assessor, Assessor>> edges;
  for (const Coupling& c : r.couplings) {
    planes.insert(c.lhs.a);
    planes.insert(c.rhs.a);
    edges.insert({c.lhs.a, c.rhs.a});
    if (c.lhs.a.o >= 8 || c.lhs.a.S < 9 || c.rhs.a.o >= 8 || c.rhs.a.S < 9)
      r.exogamous = false;
  }
  r.planes.assign(planes.begin(), planes.end());
  r.edges = edges.size();

  const auto linked = [&](const Assessor& a, const Assessor& b) {
    return edges.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  for (auto i = r.planes.begin(); i != r.planes.end(); ++i)
    for (auto j = std::next(i); j != r.planes.end(); ++j) {
      if (!linked(*i, *j)) continue;
      for (auto k = std::next(j); k != r.planes.end(); ++k) {
        if (!linked(*i, *k) || !linked(*j, *k)) continue;
        ++r.triangles;
        if (k->o == (i->o ^ j->o) && k->S == (i->o ^ j->S)) ++r.rule1_closed;
      }
    }
  return r;
}

}  // namespace

ScanResult scan_zero_couplings_serial(const CDAlgebra& alg) {
  if (alg.dim_exp() != 4)
    throw std::invalid_argument("scan requires the dim_exp = 4 algebra");
  const auto planes = all_planes();
  std::vector<Coupling> found;
  for (std::size_t p = 0; p < planes.size(); ++p) {
    auto part = scan_from(alg, planes, p);
    found.insert(found.end(), part.begin(), part.end());
  }
  return summarize(std::move(found));
}

ScanResult scan_zero_couplings_parallel(const CDAlgebra& alg) {
  if (alg.dim_exp() != 4)
    throw std::invalid_argument("scan requires the dim_exp = 4 algebra");
  const auto planes = all_planes();
  std::vector<std::vector<Coupling>> parts(planes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long p = 0; p < long(planes.size()); ++p)
    parts[p] = scan_from(alg, planes, std::size_t(p));
  std::vector<Coupling> found;
  for (const auto& part : parts)
    found.insert(found.end(), part.begin(), part.end());
  return summarize(std::move(found));
}

}  // namespace zd
