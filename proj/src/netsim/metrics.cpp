#include "nakamoto/netsim/metrics.hpp"

#include <nlohmann/json.hpp>

namespace nakamoto::netsim {

namespace {

using nlohmann::ordered_json;

std::string units(const ledger::Amount& a, const ledger::MoneyProfile& p) { return (a.to_rat() * p.quantum).str(); }

ordered_json time(std::optional<SimTime> t) { return t ? ordered_json(format_time(*t)) : ordered_json(nullptr); }

}  // namespace

std::vector<std::string> metrics_json_lines(const Metrics& m, const ledger::MoneyProfile& p,
                                            const std::optional<std::string>& attack_kind) {
  std::vector<std::string> out;
  for (const auto& t : m.transactions) {
    ordered_json latency = nullptr;
    if (t.included) latency = format_time(*t.included - t.submitted);
    out.push_back(ordered_json{{"type", "tx"}, {"label", t.label}, {"id", t.tx}, {"submitted", format_time(t.submitted)},
                               {"included", time(t.included)}, {"latency", latency}}
                      .dump());
  }
  for (const auto& f : m.forks)
    out.push_back(
        ordered_json{{"type", "fork"}, {"start", format_time(f.start)}, {"end", time(f.end)}, {"branches", f.branches}}
            .dump());
  for (const auto& r : m.fork_reports) {
    ordered_json j = ordered_json::parse(r);
    ordered_json line{{"type", "fork-report"}};
    for (auto it = j.begin(); it != j.end(); ++it) line[it.key()] = it.value();
    out.push_back(line.dump());
  }
  for (const auto& s : m.supply)
    out.push_back(ordered_json{{"type", "supply"}, {"time", format_time(s.time)}, {"height", s.height},
                               {"minted", units(s.minted, p)}, {"unit", p.unit}}
                      .dump());
  for (const auto& [id, e] : m.miners)
    out.push_back(ordered_json{{"type", "miner"}, {"id", id}, {"blocks", e.blocks}, {"earned", units(e.earned, p)},
                               {"unit", p.unit}}
                      .dump());
  for (const auto& s : m.services) {
    ordered_json users = ordered_json::object();
    for (const auto& [u, a] : s.per_user) users[u] = units(a, p);
    out.push_back(ordered_json{{"type", "service"}, {"id", s.id}, {"claims", units(s.claims, p)},
                               {"holdings", units(s.holdings, p)}, {"solvent", s.claims <= s.holdings},
                               {"users", users}}
                      .dump());
  }
  for (const auto& r : m.rejected) out.push_back(ordered_json{{"type", "rejected"}, {"detail", r}}.dump());
  if (m.attack) {
    const AttackOutcome& a = *m.attack;
    out.push_back(ordered_json{{"type", "attack"},
                               {"kind", attack_kind.value_or("")},
                               {"success", a.success},
                               {"reason", a.reason},
                               {"victim_acted", a.victim_acted},
                               {"acted_at", time(a.acted_at)},
                               {"resolved_at", time(a.resolved_at)},
                               {"replaced_depth", a.replaced_depth},
                               {"attacker_blocks", a.attacker_blocks},
                               {"honest_blocks", a.honest_blocks}}
                      .dump());
  }
  return out;
}

}  // namespace nakamoto::netsim
