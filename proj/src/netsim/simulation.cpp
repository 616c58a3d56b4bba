#include "nakamoto/netsim/simulation.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <variant>

#include <nlohmann/json.hpp>

#include "nakamoto/consensus/forks.hpp"
#include "nakamoto/crypto/digest.hpp"
#include "nakamoto/netsim/participant.hpp"
#include "nakamoto/netsim/participation_service.hpp"

namespace nakamoto::netsim {

using consensus::ChainNode;
using consensus::ChainView;
using consensus::Choice;
using ledger::Amount;

ScenarioConfig with_attacker_power(ScenarioConfig config, double q) {
  if (!config.attack) throw InvalidConfig("attacker power needs an attack section");
  double honest = 0;
  for (const auto& p : config.participants)
    if (p.role == Role::miner) honest += p.hash_power;
  if (honest <= 0) throw InvalidConfig("an attack needs at least one honest miner");
  for (auto& p : config.participants) {
    if (p.id == config.attack->attacker) p.hash_power = q;
    else if (p.role == Role::miner) p.hash_power = p.hash_power / honest * (1 - q);
  }
  return config;
}

namespace {

struct MineTimer {
  std::size_t node;
  std::uint64_t generation;
};
struct DeliverTip {
  std::size_t to;
  ChainNode::Ptr tip;
};
struct DeliverTx {
  std::size_t to;
  std::shared_ptr<const ledger::Transaction> tx;
};
struct RunAction {
  std::size_t index;
};
struct Heal {
  std::size_t index;
};
struct AttackStart {};
struct Stop {};

using Payload = std::variant<MineTimer, DeliverTip, DeliverTx, RunAction, Heal, AttackStart, Stop>;

struct Event {
  SimTime time;
  std::uint64_t seq;
  Payload payload;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    return a.time != b.time ? a.time > b.time : a.seq > b.seq;
  }
};

struct Node {
  const ParticipantConfig* config = nullptr;
  std::optional<KeyConstructor> keys;
  InputRole input;
  PlacementRole placement;
  double power = 0;       // normalized configured power
  double draw_power = 0;  // power used to draw blocks
  crypto::Rng rng;
  std::uint64_t generation = 0;
  std::optional<ledger::Block> pending;  // hashcash work in progress
  ChainNode::Ptr pending_parent;
};

struct PendingPayout {
  ledger::TxId id;
  Amount amount;
};

struct AttackState {
  std::size_t attacker = 0, victim = 0;
  std::uint64_t confirmations = 0, give_up = 0;
  std::optional<crypto::KeyPair> stash;  // receives the conflicting payment
  ledger::TxId pay, self;
  bool started = false;
  ChainNode::Ptr private_tip, last_published;
  AttackOutcome outcome;
  bool done = false;
};

std::string short_hex(const crypto::Digest& d) { return d.hex().substr(0, 16); }

class Simulation {
 public:
  Simulation(const ScenarioConfig& cfg, std::uint64_t seed, const RunOptions& opts)
      : cfg_(cfg), seed_(seed), opts_(opts), profile_(cfg.profile) {
    cfg_.validate();
    if (cfg_.mining == MiningMode::sampled) profile_.check_pow = false;
    params_ = consensus::ChoiceParams{profile_.epsilon, profile_.checkpoint};
    interval_ = cfg_.block_interval.to_double();
    latency_lo_ = from_rat(cfg_.latency.low);
    latency_hi_ = from_rat(cfg_.latency.high);
    setup();
  }

  RunResult run() {
    process();
    if (opts_.settle && !attack_) settle();
    return finish();
  }

 private:
  // ---- setup ----

  void setup() {
    crypto::Rng keys(crypto::Rng::derive_seed(seed_, 1));
    double total = 0;
    for (const auto& p : cfg_.participants) total += p.hash_power;
    nodes_.resize(cfg_.participants.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node& n = nodes_[i];
      n.config = &cfg_.participants[i];
      index_[n.config->id] = i;
      if (n.config->role != Role::indirect_user) {
        crypto::KeyPair kp = crypto::gen_keypair(keys, profile_.scheme);
        owner_[kp.address] = n.config->id;
        n.keys.emplace(kp, profile_.scheme);
      }
      n.power = n.config->hash_power / total;
      n.draw_power = n.power;
      n.rng = crypto::Rng(crypto::Rng::derive_seed(seed_, 100 + i));
    }
    if (opts_.sampling_powers) {
      if (cfg_.mining != MiningMode::sampled) throw InvalidConfig("tilted sampling needs sampled mining");
      for (auto& n : nodes_) {
        auto it = opts_.sampling_powers->find(n.config->id);
        if (it != opts_.sampling_powers->end()) n.draw_power = it->second;
        if (n.power > 0 && n.draw_power <= 0) throw InvalidConfig("sampling power of '" + n.config->id + "' must be positive");
      }
    }

    for (const auto& p : cfg_.participants)
      if (p.role == Role::participation_service) services_.emplace(p.id, ParticipationService(p.id));
    for (const auto& p : cfg_.participants)
      if (p.role == Role::indirect_user) services_.at(p.service).add_user(p.id);

    if (cfg_.attack) {
      AttackState a;
      a.attacker = index_.at(cfg_.attack->attacker);
      a.victim = index_.at(cfg_.attack->victim);
      a.confirmations = cfg_.attack->confirmations;
      a.give_up = cfg_.attack->give_up_deficit;
      a.stash = crypto::gen_keypair(keys, profile_.scheme);
      attack_ = std::move(a);
    }

    // Genesis: the attacker's when there is one (it funds the double spend),
    // otherwise the first miner's.
    std::size_t g = 0;
    if (attack_) {
      g = attack_->attacker;
    } else {
      while (nodes_[g].power <= 0) ++g;
    }
    ledger::Block genesis = nodes_[g].keys->block(ledger::LedgerState(), profile_, {}, cfg_.difficulty);
    ChainNode::Ptr root = extend(nullptr, genesis);
    mined_at_[root->digest()] = 0;
    miner_of_[root->digest()] = g;
    for (auto& n : nodes_) n.input = InputRole(ChainView(root), params_);
    trace("genesis " + nodes_[g].config->id + " " + short_hex(root->digest()));
    after_view_change();

    for (std::size_t i = 0; i < nodes_.size(); ++i) start_mining(i);
    for (std::size_t i = 0; i < cfg_.actions.size(); ++i) push(from_rat(cfg_.actions[i].at), RunAction{i});
    if (attack_) push(0, AttackStart{});
    push(from_rat(cfg_.stop.time), Stop{});
  }

  ChainNode::Ptr extend(const ChainNode::Ptr& parent, const ledger::Block& b) {
    auto r = ChainNode::extend(parent, b, profile_);
    if (auto* rej = std::get_if<ledger::BlockRejection>(&r))
      throw std::logic_error("simulation assembled an invalid block: " + rej->detail);
    return std::get<ChainNode::Ptr>(std::move(r));
  }

  // ---- plumbing ----

  void push(SimTime t, Payload p) { queue_.push(Event{t, seq_++, std::move(p)}); }

  void trace(const std::string& line) {
    std::string full = std::to_string(now_) + " " + line;
    digest_.update(full);
    digest_.update(std::string_view("\n"));
    if (opts_.keep_trace) trace_lines_.push_back(std::move(full));
  }

  SimTime latency() { return draw_uniform(latency_rng_, latency_lo_, latency_hi_); }

  bool reachable(std::size_t from, std::size_t to) const {
    return !partitioned_ || group_[from] == group_[to];
  }

  bool attacking(std::size_t i) const { return attack_ && attack_->started && i == attack_->attacker; }
  bool honest(std::size_t i) const { return !(attack_ && i == attack_->attacker); }

  ChainNode::Ptr work_tip(std::size_t i) const {
    return attacking(i) ? attack_->private_tip : nodes_[i].input.view().tip();
  }

  void broadcast_tip(std::size_t from, const ChainNode::Ptr& tip) {
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (j != from && reachable(from, j)) push(now_ + latency(), DeliverTip{j, tip});
  }

  void send_tx(std::size_t from, const std::shared_ptr<const ledger::Transaction>& tx) {
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (j != from && reachable(from, j)) push(now_ + latency(), DeliverTx{j, tx});
  }

  void submit(std::size_t from, const ledger::Transaction& tx, const std::string& label) {
    nodes_[from].placement.place(tx);
    auto shared = std::make_shared<const ledger::Transaction>(tx);
    send_tx(from, shared);
    ledger::TxId id = ledger::tx_id(tx);
    tracked_.push_back(id);
    metrics_.transactions.push_back(TxLatency{label, id.hex(), now_, std::nullopt});
    trace("tx " + nodes_[from].config->id + " " + short_hex(id) + " " + label);
  }

  // ---- mining ----

  void start_mining(std::size_t i) {
    Node& n = nodes_[i];
    ++n.generation;
    n.pending.reset();
    n.pending_parent.reset();
    if (halted_ || n.draw_power <= 0) return;
    if (cfg_.mining == MiningMode::sampled) {
      push(now_ + draw_exponential(n.rng, interval_ / n.draw_power), MineTimer{i, n.generation});
      return;
    }
    ChainNode::Ptr parent = work_tip(i);
    ledger::Block b = n.keys->block(parent->state(), profile_, n.placement.candidates(parent->state(), profile_),
                                    cfg_.difficulty);
    // Hash rate per tick is power * difficulty / interval, so the solve takes
    // attempts * interval / (power * difficulty) ticks.
    double attempts = static_cast<double>(b.step.solution.s) + 1;
    double ticks = attempts * interval_ / (n.power * static_cast<double>(cfg_.difficulty));
    SimTime delay = std::max<SimTime>(1, static_cast<SimTime>(std::ceil(ticks * static_cast<double>(kTick))));
    n.pending = std::move(b);
    n.pending_parent = parent;
    push(now_ + delay, MineTimer{i, n.generation});
  }

  void on_mine(const MineTimer& t) {
    Node& n = nodes_[t.node];
    if (halted_ || t.generation != n.generation) return;
    ChainNode::Ptr parent;
    ledger::Block b;
    if (cfg_.mining == MiningMode::sampled) {
      parent = work_tip(t.node);
      b = n.keys->block(parent->state(), profile_, n.placement.candidates(parent->state(), profile_), cfg_.difficulty);
    } else {
      parent = n.pending_parent;
      b = std::move(*n.pending);
    }
    ChainNode::Ptr node = extend(parent, b);
    mined_at_[node->digest()] = now_;
    miner_of_[node->digest()] = t.node;
    ++metrics_.blocks_mined;
    log_weight_ += std::log(n.power / n.draw_power);
    trace("mine " + n.config->id + " " + std::to_string(node->height()) + " " + short_hex(node->digest()));

    // Sampled clocks are memoryless, so the next block is drawn right away
    // whatever happens to the tip; hashcash work restarts below.
    bool hashcash = cfg_.mining == MiningMode::hashcash;
    if (!hashcash) start_mining(t.node);
    if (attacking(t.node)) {
      ++attack_->outcome.attacker_blocks;
      attack_->private_tip = node;
      if (hashcash) start_mining(t.node);
      check_attack();
      return;
    }
    if (attack_) ++attack_->outcome.honest_blocks;
    Choice c = n.input.offer(node);
    if (c.kind == Choice::Kind::extend || c.kind == Choice::Kind::replace) view_changed(t.node, c);
    else if (hashcash) start_mining(t.node);  // stale side block
  }

  // ---- views ----

  void on_deliver_tip(const DeliverTip& d) {
    Node& n = nodes_[d.to];
    Choice c = n.input.offer(d.tip);
    if (c.kind != Choice::Kind::extend && c.kind != Choice::Kind::replace) return;
    if (attacking(d.to)) {
      check_attack();
      return;
    }
    view_changed(d.to, c);
  }

  void view_changed(std::size_t i, const Choice& c) {
    Node& n = nodes_[i];
    const ChainNode::Ptr& tip = n.input.view().tip();
    trace("adopt " + n.config->id + " " + Choice::name(c.kind) + " " + std::to_string(tip->height()) + " " +
          short_hex(tip->digest()) + (c.depth ? " depth " + std::to_string(c.depth) : ""));
    broadcast_tip(i, tip);
    if (cfg_.mining == MiningMode::hashcash) start_mining(i);
    if (attack_ && i == attack_->victim) check_victim(c);
    after_view_change();
  }

  std::vector<ChainNode::Ptr> honest_tips() const {
    std::vector<ChainNode::Ptr> tips;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!honest(i)) continue;
      const ChainNode::Ptr& t = nodes_[i].input.view().tip();
      bool dup = false;
      for (const auto& u : tips) dup = dup || u == t;
      if (!dup) tips.push_back(t);
    }
    return tips;
  }

  void after_view_change() {
    std::uint64_t top = 0;
    ChainNode::Ptr best;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!honest(i)) continue;
      const ChainNode::Ptr& t = nodes_[i].input.view().tip();
      if (!best || t->height() > top) {
        best = t;
        top = t->height();
      }
    }
    if (!sampled_any_ || top > supply_height_) {
      sampled_any_ = true;
      supply_height_ = top;
      if (opts_.track_forks) metrics_.supply.push_back(SupplySample{now_, top, best->state().minted_total()});
    }
    if (cfg_.stop.blocks && top + 1 >= *cfg_.stop.blocks && !halted_) halt();
    if (opts_.track_forks) track_forks();
  }

  // Branches among honest tips: tips that no other honest tip descends from.
  void track_forks() {
    std::vector<ChainNode::Ptr> tips = honest_tips();
    std::size_t leaves = 0;
    for (const auto& t : tips) {
      bool covered = false;
      for (const auto& u : tips)
        if (u != t && u->height() > t->height() && ChainView(u).at(t->height()) == t) covered = true;
      if (!covered) ++leaves;
    }
    bool open = !metrics_.forks.empty() && !metrics_.forks.back().end;
    if (leaves > 1) {
      if (!open) metrics_.forks.push_back(ForkSpan{now_, std::nullopt, leaves});
      else metrics_.forks.back().branches = std::max(metrics_.forks.back().branches, leaves);
    } else if (open) {
      metrics_.forks.back().end = now_;
    }
  }

  // ---- actions ----

  void on_action(const RunAction& r) {
    if (halted_) return;
    const Action& a = cfg_.actions[r.index];
    std::string label = "actions[" + std::to_string(r.index) + "]";
    if (const auto* t = std::get_if<TransferAction>(&a.what)) {
      transfer(label, *t);
    } else if (const auto* p = std::get_if<PartitionAction>(&a.what)) {
      group_.assign(nodes_.size(), static_cast<int>(p->groups.size()));
      for (std::size_t g = 0; g < p->groups.size(); ++g)
        for (const auto& id : p->groups[g]) group_[index_.at(id)] = static_cast<int>(g);
      partitioned_ = true;
      trace("partition " + label);
      push(from_rat(p->heal), Heal{r.index});
    } else {
      service(label, std::get<ServiceAction>(a.what));
    }
  }

  void reject(const std::string& label, const std::string& why) {
    metrics_.rejected.push_back(label + ": " + why);
    trace("reject " + label + " " + why);
  }

  void transfer(const std::string& label, const TransferAction& t) {
    std::size_t from = index_.at(t.from);
    Amount amount, fee = profile_.min_fee;
    try {
      amount = profile_.units(t.amount);
      if (t.fee) fee = profile_.units(*t.fee);
    } catch (const std::exception& e) {
      reject(label, e.what());
      return;
    }
    Node& n = nodes_[from];
    ledger::Transaction tx =
        n.keys->transfer({ledger::Entry{nodes_[index_.at(t.to)].keys->address(), amount}}, fee,
                         ledger::random_nonce(nonce_rng_));
    if (auto why = ledger::validate_transaction(n.input.view().state(), tx, profile_)) {
      reject(label, ledger::to_string(*why));
      return;
    }
    submit(from, tx, label);
  }

  Amount holdings(const std::string& service_id) {
    std::size_t s = index_.at(service_id);
    const ledger::LedgerState& st = nodes_[s].input.view().state();
    Amount h = st.balance(nodes_[s].keys->address());
    auto& pend = payouts_[service_id];
    std::vector<PendingPayout> still;
    for (const auto& p : pend) {
      if (st.tx_height(p.id)) continue;
      still.push_back(p);
      h = h < p.amount ? Amount() : h - p.amount;
    }
    pend = still;
    return h;
  }

  void service(const std::string& label, const ServiceAction& s) {
    ParticipationService& svc = services_.at(s.service);
    std::size_t si = index_.at(s.service);
    try {
      Amount amount = profile_.units(s.amount);
      Amount onchain = holdings(s.service);
      switch (s.op) {
        case ServiceAction::Op::deposit:
          svc.deposit(s.user, amount, onchain);
          trace("service deposit " + s.service + " " + s.user + " " + amount.str());
          break;
        case ServiceAction::Op::transfer:
          svc.transfer(s.user, s.to, amount, onchain);
          trace("service transfer " + s.service + " " + s.user + " " + s.to + " " + amount.str());
          break;
        case ServiceAction::Op::withdraw: {
          ServicePayout p = svc.withdraw(s.user, amount, nodes_[index_.at(s.to)].keys->address(), profile_.min_fee,
                                         onchain);
          ledger::Transaction tx = nodes_[si].keys->transfer({p.output}, p.fee, ledger::random_nonce(nonce_rng_));
          payouts_[s.service].push_back(PendingPayout{ledger::tx_id(tx), amount});
          trace("service withdraw " + s.service + " " + s.user + " " + amount.str());
          submit(si, tx, label);
          break;
        }
      }
      svc.check(holdings(s.service));
    } catch (const std::exception& e) {
      reject(label, e.what());
    }
  }

  void on_heal(const Heal& h) {
    if (opts_.track_forks) {
      std::map<std::string, ChainView> views;
      for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (honest(i)) views.emplace(nodes_[i].config->id, nodes_[i].input.view());
      metrics_.fork_reports.push_back(consensus::detect_forks(views).json(format_time(now_)));
    }
    partitioned_ = false;
    trace("heal actions[" + std::to_string(h.index) + "]");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (attacking(i)) continue;
      broadcast_tip(i, nodes_[i].input.view().tip());
      for (const auto& tx : nodes_[i].placement.pool()) send_tx(i, std::make_shared<const ledger::Transaction>(tx));
    }
  }

  void on_deliver_tx(const DeliverTx& d) {
    if (!nodes_[d.to].placement.place(*d.tx)) return;
    if (attack_ && attack_->started && d.to == attack_->victim && attack_->confirmations == 0 &&
        ledger::tx_id(*d.tx) == attack_->pay)
      act();
  }

  // ---- attack ----

  void on_attack_start() {
    AttackState& a = *attack_;
    Node& atk = nodes_[a.attacker];
    Amount balance = atk.input.view().state().balance(atk.keys->address());
    if (balance <= profile_.min_fee) {
      resolve(false, "no-funds");
      return;
    }
    Amount amount = balance - profile_.min_fee;
    ledger::Transaction pay = atk.keys->transfer({ledger::Entry{nodes_[a.victim].keys->address(), amount}},
                                                 profile_.min_fee, ledger::random_nonce(nonce_rng_));
    ledger::Transaction self = atk.keys->transfer({ledger::Entry{a.stash->address, amount}}, profile_.min_fee,
                                                  ledger::random_nonce(nonce_rng_));
    a.pay = ledger::tx_id(pay);
    a.self = ledger::tx_id(self);
    a.private_tip = atk.input.view().tip();
    a.started = true;
    // The private branch carries the conflicting payment; placing it first
    // keeps the public one out of the attacker's blocks.
    atk.placement.place(self);
    trace("attack-start " + atk.config->id + " " + nodes_[a.victim].config->id);
    submit(a.attacker, pay, "attack:pay");
    if (cfg_.mining == MiningMode::hashcash) start_mining(a.attacker);
  }

  void check_attack() {
    AttackState& a = *attack_;
    if (a.done) return;
    const ChainView& pub = nodes_[a.attacker].input.view();
    ChainView priv(a.private_tip);
    if (pub.length() >= priv.length() + a.give_up) {
      resolve(false, "gave-up");
      return;
    }
    bool confirmed = a.confirmations == 0 || consensus::confirmations(pub, a.pay) >= a.confirmations;
    if (!confirmed || a.private_tip == a.last_published) return;
    Choice c = consensus::choose(pub, priv, params_);
    if (c.kind != Choice::Kind::extend && c.kind != Choice::Kind::replace) return;
    a.last_published = a.private_tip;
    trace("publish " + nodes_[a.attacker].config->id + " " + std::to_string(a.private_tip->height()));
    broadcast_tip(a.attacker, a.private_tip);
  }

  void act() {
    AttackState& a = *attack_;
    if (a.outcome.victim_acted) return;
    a.outcome.victim_acted = true;
    a.outcome.acted_at = now_;
    trace("act " + nodes_[a.victim].config->id);
  }

  void check_victim(const Choice& c) {
    AttackState& a = *attack_;
    if (!a.started || a.done) return;
    const ChainView& v = nodes_[a.victim].input.view();
    bool stolen = v.state().tx_height(a.self).has_value();
    if (!a.outcome.victim_acted && !stolen && a.confirmations > 0 &&
        consensus::confirmations(v, a.pay) >= a.confirmations)
      act();
    if (!stolen) return;
    if (!a.outcome.victim_acted) {
      resolve(false, "premature");
      return;
    }
    a.outcome.replaced_depth = c.depth;
    resolve(true, "replaced");
  }

  void resolve(bool success, const std::string& reason) {
    AttackState& a = *attack_;
    a.done = true;
    a.outcome.success = success;
    a.outcome.reason = reason;
    a.outcome.resolved_at = now_;
    trace("attack " + reason);
  }

  // ---- loop ----

  void halt() {
    halted_ = true;
    trace("halt");
  }

  void process() {
    while (!queue_.empty()) {
      if (attack_ && attack_->done) break;
      Event e = queue_.top();
      queue_.pop();
      now_ = std::max(now_, e.time);
      std::visit(
          [&](auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, MineTimer>) on_mine(p);
            else if constexpr (std::is_same_v<T, DeliverTip>) on_deliver_tip(p);
            else if constexpr (std::is_same_v<T, DeliverTx>) on_deliver_tx(p);
            else if constexpr (std::is_same_v<T, RunAction>) on_action(p);
            else if constexpr (std::is_same_v<T, Heal>) on_heal(p);
            else if constexpr (std::is_same_v<T, AttackStart>) on_attack_start();
            else {
              if (!halted_) halt();
              if (attack_ && !attack_->done) resolve(false, "horizon");
            }
          },
          e.payload);
      if (halted_ && !opts_.settle) break;
    }
  }

  // After the stop: messages drain; an exact tie between honest tips is
  // broken by the strongest honest miner extending its own tip.
  void settle() {
    std::size_t strongest = nodes_.size();
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].power > 0 && (strongest == nodes_.size() || nodes_[i].power > nodes_[strongest].power))
        strongest = i;
    for (int round = 0; round < 100 && !partitioned_; ++round) {
      process();
      if (honest_tips().size() == 1) return;
      Node& n = nodes_[strongest];
      ChainNode::Ptr parent = n.input.view().tip();
      ledger::Block b = n.keys->block(parent->state(), profile_, n.placement.candidates(parent->state(), profile_),
                                      cfg_.difficulty);
      now_ += 1;
      ChainNode::Ptr node = extend(parent, b);
      mined_at_[node->digest()] = now_;
      miner_of_[node->digest()] = strongest;
      ++metrics_.blocks_mined;
      trace("tie-break " + n.config->id + " " + std::to_string(node->height()) + " " + short_hex(node->digest()));
      Choice c = n.input.offer(node);
      view_changed(strongest, c);
    }
    process();
  }

  RunResult finish() {
    RunResult r;
    r.seed = seed_;
    r.end = now_;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      r.views.emplace(nodes_[i].config->id, nodes_[i].input.view());
      if (nodes_[i].keys) r.addresses.emplace(nodes_[i].config->id, nodes_[i].keys->address());
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!honest(i)) continue;
      const ChainView& v = nodes_[i].input.view();
      if (r.reference.empty() || v.total_difficulty() > r.reference.total_difficulty()) r.reference = v;
    }
    r.converged = !partitioned_ && honest_tips().size() == 1;
    if (opts_.track_forks && !metrics_.forks.empty() && !metrics_.forks.back().end && r.converged)
      metrics_.forks.back().end = now_;

    for (ChainNode::Ptr n = r.reference.tip(); n; n = n->parent()) {
      auto m = miner_of_.find(n->digest());
      std::string id = m != miner_of_.end() ? nodes_[m->second].config->id : owner_.at(n->block().step.miner);
      MinerEarnings& e = metrics_.miners[id];
      ++e.blocks;
      e.earned += n->block().step.reward + n->block().step.fees;
    }
    const ledger::LedgerState& ref = r.reference.state();
    for (std::size_t k = 0; k < tracked_.size(); ++k) {
      auto h = ref.tx_height(tracked_[k]);
      if (!h) continue;
      ChainNode::Ptr b = r.reference.at(*h);
      metrics_.transactions[k].included = mined_at_.at(b->digest());
    }
    for (auto& [id, svc] : services_) {
      std::size_t s = index_.at(id);
      metrics_.services.push_back(
          ServiceSnapshot{id, svc.total_claims(), ref.balance(nodes_[s].keys->address()), svc.claims()});
    }
    if (attack_) {
      attack_->outcome.log_weight = log_weight_;
      metrics_.attack = attack_->outcome;
    }
    r.metrics = std::move(metrics_);
    r.trace_digest = digest_.finish().hex();
    r.trace = std::move(trace_lines_);
    return r;
  }

  ScenarioConfig cfg_;
  std::uint64_t seed_;
  RunOptions opts_;
  ledger::MoneyProfile profile_;
  consensus::ChoiceParams params_;
  double interval_ = 600;
  SimTime latency_lo_ = 0, latency_hi_ = 0;

  std::vector<Node> nodes_;
  std::map<std::string, std::size_t> index_;
  std::map<ledger::Address, std::string> owner_;
  std::map<std::string, ParticipationService> services_;
  std::map<std::string, std::vector<PendingPayout>> payouts_;
  std::optional<AttackState> attack_;

  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t seq_ = 0;
  SimTime now_ = 0;
  bool halted_ = false;
  bool partitioned_ = false;
  std::vector<int> group_;

  crypto::Rng latency_rng_{crypto::Rng::derive_seed(seed_, 2)};
  crypto::Rng nonce_rng_{crypto::Rng::derive_seed(seed_, 3)};
  crypto::Sha256Stream digest_;
  std::vector<std::string> trace_lines_;
  Metrics metrics_;
  std::vector<ledger::TxId> tracked_;
  std::map<crypto::Digest, SimTime> mined_at_;
  std::map<crypto::Digest, std::size_t> miner_of_;
  double log_weight_ = 0;
  bool sampled_any_ = false;
  std::uint64_t supply_height_ = 0;
};

}  // namespace

RunResult run(const ScenarioConfig& config, std::uint64_t seed, const RunOptions& options) {
  return Simulation(config, seed, options).run();
}

std::vector<std::string> RunResult::json_lines(const ScenarioConfig& config) const {
  using nlohmann::ordered_json;
  const ledger::MoneyProfile& p = config.profile;
  std::vector<std::string> out;

  ordered_json run{{"type", "run"},
                   {"scenario", config.name},
                   {"seed", seed},
                   {"end", format_time(end)},
                   {"blocks_mined", metrics.blocks_mined},
                   {"chain_length", reference.length()},
                   {"total_difficulty", reference.total_difficulty().str()},
                   {"converged", converged},
                   {"trace_digest", trace_digest}};
  out.push_back(run.dump());
  std::optional<std::string> kind;
  if (config.attack) kind = to_string(config.attack->kind);
  for (auto& line : metrics_json_lines(metrics, p, kind)) out.push_back(std::move(line));
  return out;
}

}  // namespace nakamoto::netsim
