#include "biset/group_context.hpp"

#include <filesystem>

#include "biset/ghost.hpp"
#include "biset/io.hpp"

namespace biset {

std::shared_ptr<const GroupContext> GroupContext::create(GroupPtr g, int max_order,
                                                         std::optional<std::string> cache_dir) {
  auto ctx = std::shared_ptr<GroupContext>(new GroupContext());
  ctx->group_ = g;
  ctx->lattice_ = SubgroupLattice::build(g, max_order);
  ctx->burnside_ = std::make_unique<BurnsideRing>(ctx->lattice_);
  ctx->cache_dir_ = std::move(cache_dir);
  return ctx;
}

const AutData& GroupContext::aut(int sub) const {
  std::lock_guard lock(mu_);
  auto& slot = aut_[sub];
  if (!slot) slot = std::make_unique<AutData>(group_, lattice_->subgroup(sub));
  return *slot;
}

const RationalCharacterTable& GroupContext::out_table(int sub) const {
  std::lock_guard lock(mu_);
  auto& slot = out_tables_[sub];
  if (!slot) slot = std::make_unique<RationalCharacterTable>(aut(sub).out(), 1 << 20);
  return *slot;
}

const ElementSet& GroupContext::aut_g(int sub) const {
  std::lock_guard lock(mu_);
  auto it = aut_g_.find(sub);
  if (it == aut_g_.end())
    it = aut_g_.emplace(sub, aut(sub).aut_from(lattice_->subgroup(lattice_->normalizer(sub)))).first;
  return it->second;
}

const ElementSet& GroupContext::out_g(int sub) const {
  std::lock_guard lock(mu_);
  auto it = out_g_.find(sub);
  if (it == out_g_.end()) it = out_g_.emplace(sub, aut(sub).project(aut_g(sub))).first;
  return it->second;
}

const GroupMap& GroupContext::iso_from_rep(int sub) const {
  std::lock_guard lock(mu_);
  auto it = iso_.find(sub);
  if (it != iso_.end()) return it->second;
  const auto& lat = *lattice_;
  int cls = lat.conj_class(sub);
  int u = lat.iso_rep(lat.iso_class(cls));
  int v = lat.class_rep(cls);
  GroupMap m;
  if (v == sub) {
    auto iso = find_isomorphism(group_, lat.subgroup(u), group_, lat.subgroup(v));
    if (!iso) throw InconsistencyError("isomorphism class without an isomorphism");
    m = *iso;
  } else {
    const GroupMap& base = iso_from_rep(v);
    m = compose(conjugation_map(group_, lat.transporter(sub), lat.subgroup(v)), base);
  }
  return iso_.emplace(sub, std::move(m)).first->second;
}

AlgebraPtr GroupContext::algebra(BisetTag tag) const {
  std::lock_guard lock(mu_);
  auto it = algebras_.find(tag);
  if (it != algebras_.end()) return it->second;
  auto alg = BisetAlgebra::build(lattice_, tag);
  if (cache_dir_) {
    std::filesystem::path path = structure_cache_path(*cache_dir_, *alg);
    if (!load_structure(path, *alg)) save_structure(path, *alg);
  }
  algebras_.emplace(tag, alg);
  return alg;
}

const GhostSpace& GroupContext::ghost() const {
  std::lock_guard lock(mu_);
  if (!ghost_) ghost_ = std::make_shared<const GhostSpace>(*this);
  return *ghost_;
}

}  // namespace biset
