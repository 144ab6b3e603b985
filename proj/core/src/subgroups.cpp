#include "biset/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "biset/homomorphisms.hpp"
#include "biset/rational.hpp"

namespace biset {

std::shared_ptr<const SubgroupLattice> SubgroupLattice::build(GroupPtr gp, int max_order) {
  const FiniteGroup& G = *gp;
  if (G.order() > max_order) {
    throw CapacityError("subgroup lattice: |" + G.name() + "| = " + std::to_string(G.order()) +
                        " exceeds limit " + std::to_string(max_order));
  }
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group_ = gp;
  int n = G.order();

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  std::vector<ElementSet> cyclic;
  auto add = [&](ElementSet s) {
    if (seen.emplace(s, int(found.size())).second) found.push_back(std::move(s));
  };
  for (Elem x = 0; x < n; ++x) {
    Elem gens[1] = {x};
    ElementSet c = generate(G, gens);
    if (!seen.count(c)) cyclic.push_back(c);
    add(std::move(c));
  }
  std::vector<Elem> cyclic_gen;
  for (const auto& c : cyclic) {
    Elem best = 0;
    for (Elem x : c.members())
      if (G.element_order(x) == c.size()) {
        best = x;
        break;
      }
    cyclic_gen.push_back(best);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t k = 0; k < cyclic.size(); ++k) {
      if (cyclic[k].subset_of(found[i])) continue;
      add(join(G, found[i], cyclic_gen[k]));
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });
  lat->subgroups_ = std::move(found);
  int m = int(lat->subgroups_.size());
  for (int i = 0; i < m; ++i) {
    lat->index_.emplace(lat->subgroups_[i], i);
    lat->orders_.push_back(lat->subgroups_[i].size());
    lat->gens_.push_back(generating_sequence(G, lat->subgroups_[i]));
  }

  lat->conj_class_.assign(m, -1);
  lat->transporter_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    if (lat->conj_class_[i] >= 0) continue;
    int c = int(lat->class_members_.size());
    lat->class_members_.push_back({});
    for (Elem g = 0; g < n; ++g) {
      int j = lat->index_.at(conjugate(G, g, lat->subgroups_[i]));
      if (lat->conj_class_[j] < 0) {
        lat->conj_class_[j] = c;
        lat->transporter_[j] = g;
        lat->class_members_[c].push_back(j);
      }
    }
    std::sort(lat->class_members_[c].begin(), lat->class_members_[c].end());
  }
  for (int i = 0; i < m; ++i) {
    lat->normalizer_.push_back(lat->index_.at(biset::normalizer(G, lat->subgroups_[i])));
    lat->centralizer_.push_back(lat->index_.at(biset::centralizer(G, lat->subgroups_[i])));
  }
  int nc = lat->num_conj_classes();
  lat->iso_class_.assign(nc, -1);
  for (int c = 0; c < nc; ++c) {
    if (lat->iso_class_[c] >= 0) continue;
    int k = int(lat->iso_members_.size());
    lat->iso_members_.push_back({c});
    lat->iso_class_[c] = k;
    const auto& a = lat->subgroups_[lat->class_rep(c)];
    for (int d = c + 1; d < nc; ++d) {
      if (lat->iso_class_[d] >= 0) continue;
      const auto& b = lat->subgroups_[lat->class_rep(d)];
      if (a.size() != b.size()) continue;
      if (find_isomorphism(gp, a, gp, b)) {
        lat->iso_class_[d] = k;
        lat->iso_members_[k].push_back(d);
      }
    }
  }
  return lat;
}

int SubgroupLattice::index_of(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> SubgroupLattice::conj_class_reps() const {
  std::vector<int> out;
  for (int c = 0; c < num_conj_classes(); ++c) out.push_back(class_rep(c));
  return out;
}

std::vector<int> SubgroupLattice::iso_class_reps() const {
  std::vector<int> out;
  for (int k = 0; k < num_iso_classes(); ++k) out.push_back(iso_rep(k));
  return out;
}

std::vector<int> SubgroupLattice::subgroups_of(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (subgroups_[j].subset_of(subgroups_[i])) out.push_back(j);
  return out;
}

ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& h) {
  std::vector<Elem> comms;
  auto gens = generating_sequence(g, h);
  ElementSet seen(g.order());
  for (Elem a : h.members())
    for (Elem b : h.members()) {
      Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen.contains(c)) {
        seen.insert(c);
        comms.push_back(c);
      }
    }
  return generate(g, comms);
}

bool is_solvable(const FiniteGroup& g) {
  ElementSet d = g.all();
  while (d.size() > 1) {
    ElementSet next = derived_subgroup(g, d);
    if (next.size() == d.size()) return false;
    d = std::move(next);
  }
  return true;
}

namespace {

bool is_pi_number(unsigned long n, const std::vector<unsigned long>& primes) {
  for (unsigned long p : prime_divisors(n))
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) return false;
  return true;
}

// Whether U/N is solvable, via the derived series taken modulo N.
bool quotient_solvable(const FiniteGroup& g, const ElementSet& u, const ElementSet& nrm) {
  ElementSet d = u;
  auto ngens = generating_sequence(g, nrm);
  while (d.size() > nrm.size()) {
    ElementSet dd = derived_subgroup(g, d);
    auto gens = generating_sequence(g, dd);
    gens.insert(gens.end(), ngens.begin(), ngens.end());
    ElementSet next = generate(g, gens);
    if (next.size() == d.size()) return false;
    d = std::move(next);
  }
  return true;
}

}  // namespace

int pi_residual(const SubgroupLattice& lat, int u, const std::vector<unsigned long>& primes) {
  const FiniteGroup& G = lat.group();
  const ElementSet& U = lat.subgroup(u);
  ElementSet result = U;
  for (int j : lat.subgroups_of(u)) {
    const ElementSet& N = lat.subgroup(j);
    if (!is_normal(G, N, U)) continue;
    if (!is_pi_number(static_cast<unsigned long>(U.size() / N.size()), primes)) continue;
    if (!quotient_solvable(G, U, N)) continue;
    result = result.intersect(N);
  }
  return lat.index_of(result);
}

bool is_pi_perfect(const SubgroupLattice& lat, int u, const std::vector<unsigned long>& primes) {
  return pi_residual(lat, u, primes) == u;
}

}  // namespace biset
