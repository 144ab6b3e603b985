#include "biset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>

#include "biset/blocks.hpp"
#include "biset/ghost.hpp"
#include "biset/parallel.hpp"
#include "biset/positivity.hpp"

namespace biset {

void SuiteResult::fail(std::string what) {
  pass = false;
  if (counterexamples.size() < 10) counterexamples.push_back(std::move(what));
}

namespace {

std::vector<Term> canonical(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  t.erase(std::remove_if(t.begin(), t.end(), [](const Term& x) { return x.coeff == 0; }), t.end());
  return t;
}

RVector basis_vector(int d, int i) {
  RVector e(d);
  e[i] = 1;
  return e;
}

SuiteResult timed(const char* suite, const GroupContext& ctx, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.suite = suite;
  r.group = ctx.group().name();
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

SuiteResult verify_mult(const GroupContext& ctx) {
  return timed("mult", ctx, [&](SuiteResult& r) {
    AlgebraPtr alg = ctx.algebra(BisetTag::LeftFree);
    const int d = alg->dimension();
    std::mutex mu;
    parallel_for(d * d, [&](int ij) {
      int i = ij / d, j = ij % d;
      auto a = canonical(alg->multiply_star(i, j));
      auto b = canonical(alg->multiply_bruteforce(i, j));
      bool same = a.size() == b.size();
      for (std::size_t k = 0; same && k < a.size(); ++k) same = a[k].index == b[k].index && a[k].coeff == b[k].coeff;
      std::lock_guard lock(mu);
      ++r.checks;
      if (!same) r.fail(alg->descriptor(i) + " * " + alg->descriptor(j));
    });
  });
}

SuiteResult verify_ghost(const GroupContext& ctx) {
  return timed("ghost", ctx, [&](SuiteResult& r) {
    const GhostSpace& gs = ctx.ghost();
    const BisetAlgebra& alg = gs.algebra();
    const int d = alg.dimension();
    std::vector<GhostElement> img(d);
    parallel_for(d, [&](int i) { img[i] = gs.sigma(basis_vector(d, i)); });
    for (int i = 0; i < d; ++i) {
      ++r.checks;
      if (!gs.is_equivariant(img[i])) r.fail("not equivariant: " + alg.descriptor(i));
      ++r.checks;
      if (gs.sigma_inverse(img[i]) != basis_vector(d, i)) r.fail("round trip: " + alg.descriptor(i));
    }
    ++r.checks;
    if (!(gs.sigma(alg.one()) == gs.identity())) r.fail("sigma(1) is not the identity");
    std::mutex mu;
    parallel_for(d * d, [&](int ij) {
      int i = ij / d, j = ij % d;
      bool ok = gs.sigma(alg.multiply(basis_vector(d, i), basis_vector(d, j))) == img[i] * img[j];
      std::lock_guard lock(mu);
      ++r.checks;
      if (!ok) r.fail("sigma(b_i b_j): " + alg.descriptor(i) + " * " + alg.descriptor(j));
    });
    // injective: the flattened images are independent
    int cols = 0;
    for (const auto& p : img[0].parts) cols += p.rows() * p.cols();
    RMatrix m(d, cols);
    for (int i = 0; i < d; ++i) {
      int c = 0;
      for (const auto& p : img[i].parts)
        for (int a = 0; a < p.rows(); ++a)
          for (int b = 0; b < p.cols(); ++b) m(i, c++) = p(a, b);
    }
    ++r.checks;
    if (rank(std::move(m)) != d) r.fail("sigma is not injective");
  });
}

SuiteResult verify_bp_lemma(const GroupContext& ctx) {
  return timed("bp", ctx, [&](SuiteResult& r) {
    const auto& lat = ctx.lattice();
    const BurnsideRing& b = ctx.burnside();
    AlgebraPtr alg = ctx.algebra(BisetTag::Bifree);
    for (int h = 0; h < b.rank(); ++h) {
      BurnsideElement a = b.basis(h);
      RVector marks = b.marks(a);
      RVector delta_marks = alg->marks_of(alg->delta(a, b));
      for (int c = 0; c < lat.num_conj_classes(); ++c) {
        int u = lat.class_rep(c);
        int k = alg->find(twisted_diagonal(ctx.group(), identity_map(ctx.group_ptr(), lat.subgroup(u))));
        ++r.checks;
        if (delta_marks[k] != lat.order(lat.centralizer(u)) * marks[c])
          r.fail("U=" + std::to_string(u) + " a=[G/" + std::to_string(lat.class_rep(h)) + "]");
      }
    }
  });
}

SuiteResult verify_criterion(const GroupContext& ctx) {
  return timed("criterion", ctx, [&](SuiteResult& r) {
    auto pairs = compute_EG(ctx);
    const int k = int(pairs.size());
    DirectRelation direct(ctx, pairs);
    std::vector<char> by_char(std::size_t(k) * k), unreduced(std::size_t(k) * k);
    parallel_for(k * k, [&](int pq) {
      by_char[pq] = relation_character(ctx, pairs[pq / k], pairs[pq % k], true);
      unreduced[pq] = relation_character(ctx, pairs[pq / k], pairs[pq % k], false);
    });
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        std::size_t pq = std::size_t(p) * k + q;
        r.checks += 2;
        if (bool(by_char[pq]) != direct.related(p, q))
          r.fail("relation " + pairs[p].label + " ~ " + pairs[q].label + ": direct " +
                 std::to_string(direct.related(p, q)));
        if (by_char[pq] != unreduced[pq]) r.fail("reduction changes " + pairs[p].label + " ~ " + pairs[q].label);
      }
  });
}

SuiteResult verify_rho(const GroupContext& ctx) {
  return timed("rho", ctx, [&](SuiteResult& r) {
    const auto& lat = ctx.lattice();
    const GhostSpace& gs = ctx.ghost();
    const BisetAlgebra& alg = gs.algebra();
    auto pairs = compute_EG(ctx);
    for (const auto& p : pairs) {
      int nb = int(lat.iso_members(p.iso_cls).size());
      for (int b = 0; b < nb; ++b) {
        RVector via_sigma = gs.rho(gs.sigma(bifree_idempotent(ctx, p, b)));
        RVector formula = gs.rho_formula(p.iso_cls, p.chi, b);
        r.checks += 2;
        if (via_sigma != formula) r.fail("rho path " + p.label + " block " + std::to_string(b));
        if (is_zero(formula) != !sgn(outg_multiplicity(ctx, p.iso_cls, p.chi, b)))
          r.fail("nonvanishing criterion " + p.label + " block " + std::to_string(b));
      }
    }
    if (ctx.group().order() > 8) return;
    const int d = alg.dimension();
    std::vector<RVector> rho_basis(d);
    for (int i = 0; i < d; ++i) rho_basis[i] = gs.rho(gs.sigma(basis_vector(d, i)));
    std::mutex mu;
    parallel_for(d * d, [&](int ij) {
      int i = ij / d, j = ij % d;
      bool ok = gs.rho(gs.sigma(alg.multiply(basis_vector(d, i), basis_vector(d, j)))) ==
                triple_multiply(alg, rho_basis[i], rho_basis[j]);
      std::lock_guard lock(mu);
      ++r.checks;
      if (!ok) r.fail("rho(b_i b_j): " + alg.descriptor(i) + " * " + alg.descriptor(j));
    });
  });
}

SuiteResult verify_positivity(const GroupContext& ctx) {
  return timed("positivity", ctx, [&](SuiteResult& r) {
    auto rep = positivity_sweep(ctx.lattice());
    r.checks = rep.nonnegative_checks + rep.coset_checks + rep.double_coset_checks;
    for (const auto& c : rep.counterexamples) r.fail(c);
    if (!rep.ok()) r.pass = false;
  });
}

SuiteResult verify_refinement(const GroupContext& ctx) {
  return timed("refinement", ctx, [&](SuiteResult& r) {
    auto primes = prime_divisors(ctx.group().order());
    r.checks = ctx.lattice().num_iso_classes();
    for (int w : refinement_failures(ctx, primes)) r.fail("W=" + std::to_string(ctx.lattice().iso_rep(w)));
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mult", "ghost", "bp", "criterion", "rho", "positivity", "refinement"};
  return names;
}

SuiteResult run_suite(const std::string& name, const GroupContext& ctx) {
  static const std::map<std::string, SuiteResult (*)(const GroupContext&)> table{
      {"mult", verify_mult},           {"ghost", verify_ghost},
      {"bp", verify_bp_lemma},         {"criterion", verify_criterion},
      {"rho", verify_rho},             {"positivity", verify_positivity},
      {"refinement", verify_refinement}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(ctx);
}

}  // namespace biset
