#include <stdexcept>

#include "biset/burnside.hpp"
#include "biset/center.hpp"

namespace biset {

HeckeResult hecke_connectedness(const GroupPtr& gp, const std::vector<ElementSet>& stabilizers,
                                const CoefficientRing& ring) {
  const FiniteGroup& G = *gp;
  int n = G.order();
  HeckeResult result;
  // points of X: (stabilizer index, coset id)
  std::vector<std::vector<int>> coset_of;
  std::vector<std::pair<int, Elem>> points;
  std::vector<int> offset;
  for (const auto& H : stabilizers) {
    if (!is_subgroup(G, H)) throw std::invalid_argument("stabilizer is not a subgroup");
    unsigned long index = static_cast<unsigned long>(n / H.size());
    for (auto p : prime_divisors(index))
      if (!ring.is_non_unit(p)) result.in_hypothesis = false;
    std::vector<int> id(n, -1);
    offset.push_back(int(points.size()));
    int count = 0;
    for (Elem g = 0; g < n; ++g) {
      if (id[g] >= 0) continue;
      for (Elem h : H.members()) id[G.mul(g, h)] = count;
      points.push_back({int(coset_of.size()), g});
      ++count;
    }
    coset_of.push_back(std::move(id));
  }
  int N = int(points.size());
  auto act = [&](Elem g, int x) {
    auto [s, rep] = points[x];
    return offset[s] + coset_of[s][G.mul(g, rep)];
  };
  std::vector<int> orbit(std::size_t(N) * N, -1);
  std::vector<std::pair<int, int>> orbit_rep;
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      if (orbit[std::size_t(x) * N + y] >= 0) continue;
      int id = int(orbit_rep.size());
      orbit_rep.push_back({x, y});
      for (Elem g = 0; g < n; ++g) orbit[std::size_t(act(g, x)) * N + act(g, y)] = id;
    }
  int m = int(orbit_rep.size());
  std::vector<std::vector<Term>> products(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        auto [x, z] = orbit_rep[c];
        long count = 0;
        for (int y = 0; y < N; ++y)
          if (orbit[std::size_t(x) * N + y] == a && orbit[std::size_t(y) * N + z] == b) ++count;
        if (count) products[std::size_t(a) * m + b].push_back({c, count});
      }
  RVector one(m);
  for (int x = 0; x < N; ++x) one[orbit[std::size_t(x) * N + x]] = 1;
  SparseAlgebra alg(m, products, one);
  auto dec = center_oracle(alg);
  auto search = connectedness_search(dec.primitive_idempotents, ring);
  result.dimension = m;
  result.num_primitive_idempotents = int(dec.primitive_idempotents.size());
  result.connected = search.connected;
  return result;
}

}  // namespace biset
