#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "biset/io.hpp"
#include "biset/parallel.hpp"
#include "biset_cli/commands.hpp"

using nlohmann::json;
namespace cli = biset::cli;

namespace {

int emit(const json& report, const std::string& output) {
  std::string text = report.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    out << text;
  }
  return report.value("ok", false) ? 0 : 1;
}

int error(const char* kind, const std::string& message, int code) {
  json j = {{"error", {{"kind", kind}, {"message", message}}}, {"ok", false}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks of single and double Burnside rings of small finite groups"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::string output;
  std::string cache_dir;
  if (const char* env = std::getenv("BISET_CACHE_DIR")) cache_dir = env;
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Structure-constant cache (default: $BISET_CACHE_DIR)");
  app.add_option("--catalog", cfg.catalog_file, "User catalog file (JSON)");
  app.add_option("--output,-o", output, "Write the report here instead of stdout");
  app.add_flag("--slow", cfg.slow, "Allow slow-tier inputs (|G| > 24)");

  auto* blocks = app.add_subcommand("blocks", "Primitive central idempotents of a double Burnside algebra");
  blocks->add_option("--group,-g", cfg.group, "Catalog name or generators like \"(1,2,3);(1,2)\"")->required();
  blocks->add_option("--ring", cfg.ring, "bifree or leftfree")->check(CLI::IsMember({"bifree", "leftfree"}));
  blocks->add_option("--coeff", cfg.coeff, "Q, Z or Z_{p,...}");

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--group,-g", cfg.group)->required();
  verify->add_option("--suite,-s", cfg.suites, "mult, ghost, bp, criterion, rho, positivity, refinement or all");

  auto* fusion = app.add_subcommand("fusion-center", "Connectedness of the center of B^F(S,S) for F = F_S(G)");
  fusion->add_option("--group,-g", cfg.group)->required();
  fusion->add_option("--p", cfg.p, "Prime; S is the first Sylow p-subgroup")->required();
  fusion->add_option("--coeff", cfg.coeff, "Z (default) or Z_{p,...}");

  auto* catalog = app.add_subcommand("catalog", "Group catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List groups");
  auto* add = catalog->add_subcommand("add", "Add a permutation group to the user catalog");
  std::string add_name, add_gens;
  int add_degree = 0;
  std::vector<std::string> add_aliases;
  add->add_option("--name", add_name)->required();
  add->add_option("--generators", add_gens, "Generators separated by ';'")->required();
  add->add_option("--degree", add_degree);
  add->add_option("--alias", add_aliases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // usage errors share the exit code of bad input
    app.exit(e);
    return 64;
  }
  biset::set_jobs(cfg.jobs);
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  if (cfg.catalog_file.empty() && cfg.cache_dir) cfg.catalog_file = *cfg.cache_dir / "catalog.json";

  try {
    if (*blocks) return emit(cli::cmd_blocks(cfg), output);
    if (*verify) return emit(cli::cmd_verify(cfg), output);
    if (*fusion) return emit(cli::cmd_fusion(cfg), output);
    if (*list) return emit(cli::cmd_catalog_list(cfg), output);
    if (*add) {
      if (cfg.catalog_file.empty()) throw std::invalid_argument("catalog add needs --catalog or a cache directory");
      auto entry = biset::entry_from_generators(add_name, add_gens, add_degree);
      entry.aliases = add_aliases;
      auto g = biset::build_group(entry);
      biset::save_user_entry(cfg.catalog_file, entry);
      return emit({{"command", "catalog add"}, {"name", add_name}, {"order", g->order()}, {"ok", true}}, output);
    }
  } catch (const biset::CapacityError& e) {
    return error("capacity", e.what(), 2);
  } catch (const biset::InconsistencyError& e) {
    return error("inconsistency", e.what(), 3);
  } catch (const std::invalid_argument& e) {
    return error("input", e.what(), 64);
  } catch (const std::out_of_range& e) {
    return error("input", e.what(), 64);
  }
  return 0;
}
