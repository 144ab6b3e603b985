#include "biset/positivity.hpp"

#include <complex>

namespace biset {

namespace {

ElementSet product_set(const FiniteGroup& g, const ElementSet& x, const ElementSet& y) {
  ElementSet s(g.order());
  auto ym = y.members();
  for (Elem a : x.members())
    for (Elem b : ym) s.insert(g.mul(a, b));
  return s;
}

ElementSet left_translate(const FiniteGroup& g, Elem a, const ElementSet& x) {
  ElementSet s(g.order());
  for (Elem b : x.members()) s.insert(g.mul(a, b));
  return s;
}

}  // namespace

PositivityReport positivity_sweep(const SubgroupLattice& lat, double tol) {
  const FiniteGroup& g = lat.group();
  const int n = g.order();
  PositivityReport r;
  r.group = g.name();

  RationalCharacterTable table(lat.group_ptr());
  std::vector<std::vector<Rational>> exact;
  for (int i = 0; i < table.num_orbits(); ++i) exact.push_back(table.values(i));
  std::vector<std::vector<std::complex<double>>> numeric;
  for (const auto& psi : table.irreducibles()) {
    std::vector<std::complex<double>> v(n);
    for (Elem x = 0; x < n; ++x) v[x] = psi(x).to_complex();
    numeric.push_back(std::move(v));
  }

  auto fail = [&](std::string msg) {
    ++r.failures;
    if (r.counterexamples.size() < 8) r.counterexamples.push_back(std::move(msg));
  };
  // One value per character: exact ones first, then the complex irreducibles.
  const int ne = int(exact.size()), nc = int(numeric.size());
  auto evaluate = [&](const ElementSet& s, std::vector<Rational>& q, std::vector<std::complex<double>>& c) {
    q.assign(ne, Rational(0));
    c.assign(nc, {0.0, 0.0});
    for (Elem x : s.members()) {
      for (int i = 0; i < ne; ++i) q[i] += exact[i][x];
      for (int i = 0; i < nc; ++i) c[i] += numeric[i][x];
    }
  };
  auto nonzero = [&](const std::complex<double>& z) { return std::abs(z) > tol; };

  const int m = lat.size();
  std::vector<std::vector<Rational>> sub_q(m);
  std::vector<std::vector<std::complex<double>>> sub_c(m);
  for (int b = 0; b < m; ++b) evaluate(lat.subgroup(b), sub_q[b], sub_c[b]);

  std::vector<Rational> q;
  std::vector<std::complex<double>> c;
  for (int b = 0; b < m; ++b) {
    const ElementSet& B = lat.subgroup(b);
    for (Elem a = 0; a < n; ++a) {
      if (B.contains(a)) continue;
      evaluate(left_translate(g, a, B), q, c);
      for (int i = 0; i < ne; ++i, ++r.coset_checks)
        if (sgn(q[i]) && !sgn(sub_q[b][i]))
          fail("coset: orbit " + std::to_string(i) + " B=" + std::to_string(b) + " a=" + std::to_string(a));
      for (int i = 0; i < nc; ++i, ++r.coset_checks)
        if (nonzero(c[i]) && !nonzero(sub_c[b][i]))
          fail("coset: irreducible " + std::to_string(i) + " B=" + std::to_string(b) + " a=" + std::to_string(a));
    }
  }

  std::vector<Rational> bc_q;
  std::vector<std::complex<double>> bc_c;
  for (int b = 0; b < m; ++b)
    for (int cc = 0; cc < m; ++cc) {
      const ElementSet& B = lat.subgroup(b);
      const ElementSet& C = lat.subgroup(cc);
      evaluate(product_set(g, B, C), bc_q, bc_c);
      for (int i = 0; i < ne; ++i, ++r.nonnegative_checks)
        if (sgn(bc_q[i]) < 0)
          fail("BC: orbit " + std::to_string(i) + " B=" + std::to_string(b) + " C=" + std::to_string(cc));
      for (int i = 0; i < nc; ++i, ++r.nonnegative_checks)
        if (bc_c[i].real() < -tol || std::abs(bc_c[i].imag()) > tol)
          fail("BC: irreducible " + std::to_string(i) + " B=" + std::to_string(b) + " C=" + std::to_string(cc));
      // BaC only depends on the double coset of a
      ElementSet done(n);
      for (Elem a = 0; a < n; ++a) {
        if (done.contains(a)) continue;
        ElementSet bac = product_set(g, B, left_translate(g, a, C));
        for (Elem x : bac.members()) done.insert(x);
        evaluate(bac, q, c);
        for (int i = 0; i < ne; ++i, ++r.double_coset_checks)
          if (sgn(q[i]) && !sgn(bc_q[i]))
            fail("BaC: orbit " + std::to_string(i) + " B=" + std::to_string(b) + " C=" + std::to_string(cc) +
                 " a=" + std::to_string(a));
        for (int i = 0; i < nc; ++i, ++r.double_coset_checks)
          if (nonzero(c[i]) && !nonzero(bc_c[i]))
            fail("BaC: irreducible " + std::to_string(i) + " B=" + std::to_string(b) + " C=" + std::to_string(cc) +
                 " a=" + std::to_string(a));
      }
    }
  return r;
}

}  // namespace biset
