#include "biset_cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "biset/blocks.hpp"
#include "biset/fusion.hpp"
#include "biset/group_context.hpp"
#include "biset/io.hpp"
#include "biset/verify.hpp"

namespace biset::cli {

using nlohmann::json;

CoefficientRing parse_coeff(const std::string& text) {
  if (text == "Q") return CoefficientRing::rationals();
  if (text == "Z") return CoefficientRing::integers();
  if (text.rfind("Z_", 0) != 0) throw std::invalid_argument("coefficient ring must be Q, Z or Z_{p,...}: " + text);
  std::string body = text.substr(2);
  for (char& c : body)
    if (c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
  std::vector<unsigned long> primes;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    unsigned long p = std::stoul(item);
    auto divs = prime_divisors(p);
    if (divs.size() != 1 || divs.front() != p) throw std::invalid_argument("not a prime: " + item);
    primes.push_back(p);
  }
  if (primes.empty()) throw std::invalid_argument("Z_pi needs at least one prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return CoefficientRing::semilocal(primes);
}

Catalog catalog_for(const RunConfig& cfg) {
  return cfg.catalog_file.empty() ? Catalog::builtin() : load_catalog(cfg.catalog_file);
}

GroupPtr resolve_group(const RunConfig& cfg) {
  if (!cfg.group.empty() && cfg.group.front() == '(')
    return build_group(entry_from_generators(cfg.group, cfg.group));
  Catalog cat = catalog_for(cfg);
  if (!cat.find(cfg.group)) throw std::invalid_argument("unknown group: " + cfg.group);
  return cat.build(cfg.group);
}

namespace {

ContextPtr context_for(const RunConfig& cfg, GroupPtr g) {
  std::optional<std::string> cache;
  if (cfg.cache_dir) cache = cfg.cache_dir->string();
  return GroupContext::create(std::move(g), kDefaultMaxOrder, cache);
}

void require_tier(const RunConfig& cfg, const FiniteGroup& g, const std::string& what) {
  if (g.order() > kFastOrder && !cfg.slow)
    throw CapacityError(what + " for |G| = " + std::to_string(g.order()) + " is slow-tier; pass --slow");
}

json checks_json(const BlockChecks& c) {
  return {{"idempotent", c.idempotent},   {"orthogonal", c.orthogonal},   {"central", c.central},
          {"sum_to_one", c.sum_to_one},   {"integrality", c.integrality}, {"primitive", c.primitive},
          {"hypothesis", c.hypothesis}};
}

}  // namespace

json cmd_blocks(const RunConfig& cfg) {
  GroupPtr g = resolve_group(cfg);
  CoefficientRing ring = parse_coeff(cfg.coeff);
  if (cfg.ring != "bifree" && cfg.ring != "leftfree") throw std::invalid_argument("ring must be bifree or leftfree");
  if (cfg.ring == "leftfree") require_tier(cfg, *g, "left-free blocks");
  auto ctx = context_for(cfg, g);
  BlockPartition bp = cfg.ring == "bifree" ? bifree_blocks(*ctx, ring) : leftfree_blocks(*ctx, ring);
  const auto& lat = ctx->lattice();

  json pairs = json::array();
  for (const auto& p : bp.pairs)
    pairs.push_back({{"label", p.label}, {"subgroup", p.u}, {"order", lat.order(p.u)}, {"chi", p.chi}});
  json relation = json::array();
  for (const auto& adj : bp.relation) relation.push_back(adj);
  json blocks = json::array();
  for (const auto& b : bp.blocks) {
    json members = json::array();
    for (int i : b.pairs) members.push_back(bp.pairs[i].label);
    blocks.push_back({{"label", b.label}, {"pairs", members}, {"idempotent", to_json(b.idempotent, *bp.algebra)}});
  }
  json checks = checks_json(bp.checks);
  if (cfg.ring == "leftfree") {
    checks["center_in_bifree"] = bp.center_in_bifree;
    checks["center_primitives"] = bp.center_primitives;
  }
  // primitivity is only a theorem under the hypothesis
  bool ok = bp.checks.idempotent && bp.checks.orthogonal && bp.checks.central && bp.checks.sum_to_one &&
            bp.checks.integrality && (bp.checks.primitive || !bp.checks.hypothesis) && bp.center_in_bifree;
  return {{"command", "blocks"}, {"group", g->name()}, {"order", g->order()},
          {"ring", cfg.ring},    {"coeff", ring.name()}, {"pairs", pairs},
          {"relation", relation}, {"blocks", blocks},  {"num_blocks", bp.blocks.size()},
          {"checks", checks},    {"ok", ok}};
}

json cmd_verify(const RunConfig& cfg) {
  GroupPtr g = resolve_group(cfg);
  require_tier(cfg, *g, "verification suites");
  auto ctx = context_for(cfg, g);
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
  json results = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    SuiteResult r = run_suite(s, *ctx);
    ok = ok && r.pass;
    results.push_back({{"suite", r.suite}, {"pass", r.pass}, {"checks", r.checks},
                       {"counterexamples", r.counterexamples}});
  }
  return {{"command", "verify"}, {"group", g->name()}, {"order", g->order()}, {"suites", results}, {"ok", ok}};
}

json cmd_fusion(const RunConfig& cfg) {
  GroupPtr g = resolve_group(cfg);
  if (cfg.p == 0) throw std::invalid_argument("fusion-center needs --p");
  CoefficientRing ring = cfg.coeff == "Q" ? CoefficientRing::integers() : parse_coeff(cfg.coeff);
  FusionSystem fs = FusionSystem::sylow(g, cfg.p);
  FusionAlgebra fa = fusion_algebra(fs);
  FusionGhost ghost(fs, fa);
  auto rep = fusion_center_connected(fs, fa, ring);
  const auto& lat = fs.context()->lattice();
  json idempotents = json::array();
  for (const auto& e : rep.primitive_idempotents) idempotents.push_back(to_json(fa.lift(e), *fa.bifree));
  json classes = json::array();
  for (const auto& cls : fs.iso_classes()) {
    json idx = json::array();
    for (long i : fusion_indices(fs, cls.front())) idx.push_back(i);
    classes.push_back({{"representative", cls.front()}, {"order", lat.order(cls.front())},
                       {"members", cls}, {"aut_f", fs.aut_f(cls.front()).size()}, {"indices", idx}});
  }
  bool homomorphism = ghost.is_multiplicative();
  bool injective = ghost.rank() == fa.dimension();
  bool ok = homomorphism && injective && (rep.connected || !rep.hypothesis);
  return {{"command", "fusion-center"},
          {"group", g->name()},
          {"order", g->order()},
          {"p", cfg.p},
          {"sylow_order", fs.s().order()},
          {"coeff", ring.name()},
          {"inner", fs.is_inner()},
          {"dimension", rep.dimension},
          {"bifree_dimension", fa.bifree->dimension()},
          {"center_dimension", rep.center_dimension},
          {"classes", classes},
          {"q_primitive_idempotents", idempotents},
          {"integral_subsets", rep.integral_subsets},
          {"hypothesis", rep.hypothesis},
          {"sigma_homomorphism", homomorphism},
          {"sigma_injective", injective},
          {"connected", rep.connected},
          {"ok", ok}};
}

json cmd_catalog_list(const RunConfig& cfg) {
  json groups = json::array();
  Catalog cat = catalog_for(cfg);
  for (const auto& e : cat.entries()) {
    json j = to_json(e);
    j["order"] = build_group(e)->order();
    groups.push_back(j);
  }
  return {{"command", "catalog list"}, {"groups", groups}, {"ok", true}};
}

}  // namespace biset::cli
