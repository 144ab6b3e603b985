#include "biset/burnside.hpp"

#include <stdexcept>

namespace biset {

BurnsideRing::BurnsideRing(LatticePtr lat) : lat_(std::move(lat)) {
  const FiniteGroup& G = lat_->group();
  int r = rank();
  marks_.assign(r, std::vector<long>(r, 0));
  for (int h = 0; h < r; ++h) {
    const auto& hgens = lat_->generators(lat_->class_rep(h));
    for (int k = 0; k < r; ++k) {
      const ElementSet& K = lat_->subgroup(lat_->class_rep(k));
      long count = 0;
      for (Elem g = 0; g < G.order(); ++g) {
        bool inside = true;
        for (Elem x : hgens)
          if (!K.contains(G.conj(G.inv(g), x))) {
            inside = false;
            break;
          }
        if (inside) ++count;
      }
      marks_[h][k] = count / K.size();
    }
  }
}

BurnsideElement BurnsideRing::basis(int cls) const {
  BurnsideElement e{RVector(rank())};
  e.coords[cls] = 1;
  return e;
}

RVector BurnsideRing::marks(const BurnsideElement& a) const {
  int r = rank();
  RVector m(r);
  for (int h = 0; h < r; ++h)
    for (int k = 0; k < r; ++k)
      if (marks_[h][k] && sgn(a.coords[k])) m[h] += marks_[h][k] * a.coords[k];
  return m;
}

BurnsideElement BurnsideRing::from_marks(const RVector& m) const {
  // marks_[h][k] != 0 only when h <= k in the class order: back substitution
  int r = rank();
  RVector x(r);
  for (int h = r - 1; h >= 0; --h) {
    Rational s = m[h];
    for (int k = h + 1; k < r; ++k)
      if (marks_[h][k]) s -= marks_[h][k] * x[k];
    x[h] = s / marks_[h][h];
  }
  return {x};
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  RVector ma = marks(a), mb = marks(b);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] *= mb[i];
  return from_marks(ma);
}

BurnsideElement BurnsideRing::multiply_bruteforce(int h, int k) const {
  const FiniteGroup& G = lat_->group();
  const ElementSet& H = lat_->subgroup(lat_->class_rep(h));
  const ElementSet& K = lat_->subgroup(lat_->class_rep(k));
  int n = G.order();
  auto cosets = [&](const ElementSet& S) {
    std::vector<int> id(n, -1);
    std::vector<Elem> reps;
    for (Elem g = 0; g < n; ++g) {
      if (id[g] >= 0) continue;
      for (Elem s : S.members()) id[G.mul(g, s)] = int(reps.size());
      reps.push_back(g);
    }
    return std::make_pair(id, reps);
  };
  auto [hid, hreps] = cosets(H);
  auto [kid, kreps] = cosets(K);
  int nh = int(hreps.size()), nk = int(kreps.size());
  std::vector<bool> seen(std::size_t(nh) * nk, false);
  BurnsideElement out{RVector(rank())};
  for (int p = 0; p < nh * nk; ++p) {
    if (seen[p]) continue;
    ElementSet stab(n);
    for (Elem g = 0; g < n; ++g) {
      int x = hid[G.mul(g, hreps[p / nk])], y = kid[G.mul(g, kreps[p % nk])];
      seen[std::size_t(x) * nk + y] = true;
      if (x == p / nk && y == p % nk) stab.insert(g);
    }
    out.coords[lat_->conj_class(lat_->index_of(stab))] += 1;
  }
  return out;
}

BurnsideElement BurnsideRing::idempotent(int cls) const {
  RVector m(rank());
  m[cls] = 1;
  return from_marks(m);
}

std::vector<int> BurnsideRing::residual_classes(const std::vector<unsigned long>& primes) const {
  std::vector<int> out;
  for (int c = 0; c < rank(); ++c) out.push_back(lat_->conj_class(pi_residual(*lat_, lat_->class_rep(c), primes)));
  return out;
}

BurnsideElement BurnsideRing::epsilon_pi(int cls, const std::vector<unsigned long>& primes) const {
  if (!is_pi_perfect(*lat_, lat_->class_rep(cls), primes)) throw std::invalid_argument("epsilon_pi: subgroup is not pi-perfect");
  auto res = residual_classes(primes);
  RVector m(rank());
  for (int c = 0; c < rank(); ++c)
    if (res[c] == cls) m[c] = 1;
  return from_marks(m);
}

BurnsideElement BurnsideRing::epsilon_hat_pi(int iso_cls, const std::vector<unsigned long>& primes) const {
  auto res = residual_classes(primes);
  RVector m(rank());
  for (int c = 0; c < rank(); ++c)
    if (lat_->iso_class(res[c]) == iso_cls) m[c] = 1;
  return from_marks(m);
}

}  // namespace biset
