#include "nakamoto/consensus/forks.hpp"

#include <nlohmann/json.hpp>

namespace nakamoto::consensus {

ForkReport detect_forks(const std::map<std::string, ChainView>& views) {
  ForkReport r;
  std::map<Digest, ForkTip> tips;
  std::vector<ChainNode::Ptr> nodes;
  bool any_empty = false;
  for (const auto& [who, view] : views) {
    if (view.empty()) {
      any_empty = true;
      continue;
    }
    auto [it, fresh] = tips.try_emplace(view.tip()->digest());
    if (fresh) {
      it->second.digest = view.tip()->digest();
      it->second.height = view.tip()->height();
      it->second.total_difficulty = view.tip()->total_difficulty();
      nodes.push_back(view.tip());
    }
    it->second.participants.push_back(who);
  }
  if (tips.size() + (any_empty ? 1 : 0) <= 1) return r;
  for (auto& [d, t] : tips) r.tips.push_back(std::move(t));
  if (!any_empty && !nodes.empty()) {
    ChainNode::Ptr a = nodes.front();
    for (std::size_t i = 1; i < nodes.size() && a; ++i) a = common_ancestor(a, nodes[i]);
    if (a) r.common_ancestor_height = a->height();
  }
  return r;
}

std::string ForkReport::json(const std::string& time) const {
  nlohmann::ordered_json j;
  j["event"] = "fork-report";
  j["time"] = time;
  j["common_ancestor_height"] =
      common_ancestor_height ? nlohmann::ordered_json(*common_ancestor_height) : nlohmann::ordered_json(nullptr);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : tips) {
    nlohmann::ordered_json o;
    o["tip"] = t.digest.hex();
    o["height"] = t.height;
    o["total_difficulty"] = t.total_difficulty.str();
    o["participants"] = t.participants;
    arr.push_back(std::move(o));
  }
  j["tips"] = std::move(arr);
  return j.dump();
}

}  // namespace nakamoto::consensus
