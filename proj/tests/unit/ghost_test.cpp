#include <vector>

#include "biset/blocks.hpp"
#include "biset/ghost.hpp"
#include "biset/verify.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Context;
using testing::Q;

RVector Basis(int dim, int i) {
  RVector v(dim);
  v[i] = 1;
  return v;
}

TEST(InjOrbitBasisTest, OrbitCounts) {
  // Orbits of G on injections U -> G are Aut(U) x conjugacy classes of images, up to Aut_G(V).
  auto ctx = Context("S3");
  const auto& lat = ctx->lattice();
  for (int k = 0; k < lat.num_iso_classes(); ++k) {
    InjOrbitBasis b = build_inj_orbits(*ctx, k);
    int expected = 0;
    for (int c : lat.iso_members(k)) {
      int v = lat.class_rep(c);
      expected += ctx->aut(v).aut()->order() / ctx->aut_g(v).size();
    }
    EXPECT_EQ(b.size(), expected) << k;
    EXPECT_EQ(b.block_start.back(), b.size());
  }
}

TEST(GhostSpaceTest, SigmaOfOneIsIdentity) {
  for (const char* name : {"C2", "S3", "C2xC2", "Q8"}) {
    const auto& gs = Context(name)->ghost();
    EXPECT_EQ(gs.sigma(gs.algebra().one()), gs.identity()) << name;
  }
}

TEST(GhostSpaceTest, SigmaIsMultiplicativeAndInjective) {
  for (const char* name : {"S3", "C2xC2", "D8", "A4"}) {
    const auto& gs = Context(name)->ghost();
    const auto& alg = gs.algebra();
    int d = alg.dimension();
    for (int i = 0; i < d; ++i) {
      GhostElement si = gs.sigma(Basis(d, i));
      EXPECT_TRUE(gs.is_equivariant(si));
      EXPECT_EQ(gs.sigma_inverse(si), Basis(d, i));
      for (int j = 0; j < d; ++j)
        ASSERT_EQ(gs.sigma(alg.multiply(Basis(d, i), Basis(d, j))), si * gs.sigma(Basis(d, j)))
            << name << " " << alg.descriptor(i) << " " << alg.descriptor(j);
    }
  }
}

TEST(GhostSpaceTest, NonEquivariantMatrixHasNoPreimage) {
  const auto& gs = Context("C2xC2")->ghost();
  GhostElement x = gs.zero();
  int c = gs.num_components() - 1;
  ASSERT_GT(x.parts[c].rows(), 1);
  x.parts[c](0, 1) = 1;
  EXPECT_FALSE(gs.is_equivariant(x));
  EXPECT_THROW(gs.sigma_inverse(x), InconsistencyError);
}

TEST(GhostSpaceTest, IdempotentOfC2) {
  // e_(C2,1) = [C2 x C2 / Delta(C2)] - 1/2 [C2 x C2 / Delta(1)]
  auto ctx = Context("C2");
  auto pairs = compute_EG(*ctx);
  ASSERT_EQ(pairs.size(), 2u);
  const EGPair& top = pairs.back();
  EXPECT_EQ(ctx->lattice().order(top.u), 2);
  EXPECT_EQ(bifree_idempotent(*ctx, top), (RVector{Q(-1, 2), 1}));
  EXPECT_EQ(bifree_idempotent(*ctx, pairs.front()), (RVector{Q(1, 2), 0}));
}

TEST(GhostSpaceTest, EchiIsAnIdempotentInTheImage) {
  for (const char* name : {"S3", "C2xC2", "Q8"}) {
    auto ctx = Context(name);
    const auto& gs = ctx->ghost();
    for (const auto& p : compute_EG(*ctx)) {
      int c = p.iso_cls;
      const auto& b = gs.basis(c);
      for (int block = 0; block < int(b.blocks.size()); ++block) {
        GhostElement e = gs.echi(c, p.chi, block);
        EXPECT_EQ(e * e, e);
        EXPECT_TRUE(gs.is_equivariant(e));
        RVector x = gs.sigma_inverse(e);
        EXPECT_EQ(x, bifree_idempotent(*ctx, p, block)) << name << " " << p.label;
      }
    }
  }
}

TEST(GhostSpaceTest, RhoFormula) {
  for (const char* name : {"C4", "S3", "C2xC2", "D8"}) {
    SuiteResult r = verify_rho(*Context(name));
    EXPECT_TRUE(r.pass) << name << ": " << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_GT(r.checks, 0);
  }
}

TEST(GhostSpaceTest, RhoIsMultiplicative) {
  // rho(sigma(xy)) is the triple product of rho(sigma(x)) and rho(sigma(y)).
  for (const char* name : {"S3", "C2xC2"}) {
    const auto& gs = Context(name)->ghost();
    const auto& alg = gs.algebra();
    int d = alg.dimension();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        RVector x = Basis(d, i), y = Basis(d, j);
        EXPECT_EQ(gs.rho(gs.sigma(alg.multiply(x, y))),
                  triple_multiply(alg, gs.rho(gs.sigma(x)), gs.rho(gs.sigma(y))));
      }
  }
}

TEST(GhostSpaceTest, VerifySuitePasses) {
  for (const char* name : {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8", "A4", "C12"}) {
    SuiteResult r = verify_ghost(*Context(name));
    EXPECT_TRUE(r.pass) << name;
  }
}

}  // namespace
}  // namespace biset
