#include "tgame/registry.hpp"

#include <stdexcept>

#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/scheepers_space.hpp"
#include "tgame/tree_space.hpp"

namespace tgame {

std::unique_ptr<Space> make_space(const std::string& sel) {
  if (sel == "tree") return std::make_unique<TreeSpace>();
  if (sel == "fan") return std::make_unique<FanSpace>();
  if (sel == "scheepers") return std::make_unique<ScheepersSpace>();
  const std::string prefix = "partition:k=";
  if (sel.rfind(prefix, 0) == 0) {
    std::string num = sel.substr(prefix.size());
    std::size_t used = 0;
    std::uint64_t k = 0;
    try {
      k = std::stoull(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || num[0] == '-' || k < 1)
      throw std::invalid_argument("partition space needs k >= 1: '" + sel + "'");
    return std::make_unique<PartitionSpace>(PartitionConfig{k});
  }
  throw std::invalid_argument("unknown space '" + sel + "' (tree | fan | partition:k=K | scheepers)");
}

std::string space_selector(const Space& space) {
  if (const auto* x = dynamic_cast<const PartitionSpace*>(&space)) return "partition:k=" + std::to_string(x->k());
  return space.name();
}

std::unique_ptr<OneStrategy> make_core_one(const std::string& name) {
  if (name == "branch") return one_branch_strategy();
  if (name == "fatbranch") return one_fatbranch_strategy();
  if (name == "fin") return one_fin_strategy();
  return nullptr;
}

std::unique_ptr<TwoStrategy> make_core_two(const std::string& name) {
  if (name == "pair") return two_pair_strategy();
  if (name == "markov") return markov_two_strategy();
  if (name == "eub") return two_eub_strategy();
  return nullptr;
}

std::vector<std::string> core_one_names() { return {"branch", "fatbranch", "fin"}; }
std::vector<std::string> core_two_names() { return {"pair", "markov", "eub"}; }

}  // namespace tgame
