#include "nakamoto/ledger/chain_file.hpp"

#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

namespace nakamoto::ledger {

void write_chain_dump(std::ostream& os, const std::vector<Block>& blocks) {
  for (const auto& b : blocks) {
    crypto::ByteWriter w;
    w.blob(canonical_bytes(b));
    const Bytes& out = w.bytes();
    os.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  }
}

void write_chain_dump(const std::string& path, const std::vector<Block>& blocks) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_chain_dump(os, blocks);
}

std::vector<Block> read_chain_dump(std::istream& is) {
  Bytes data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  crypto::ByteReader r(data);
  std::vector<Block> blocks;
  while (r.remaining() > 0) blocks.push_back(decode_block(r.blob()));
  return blocks;
}

std::vector<Block> read_chain_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_chain_dump(is);
}

std::string block_summary_json(const Block& b, const MoneyProfile& profile) {
  nlohmann::ordered_json j;
  j["k"] = b.k;
  j["digest"] = block_digest(b, profile.digest_length).hex();
  j["prev"] = b.prev ? nlohmann::ordered_json(b.prev->hex()) : nlohmann::ordered_json(nullptr);
  j["miner"] = b.step.miner.hex();
  j["n"] = b.step.covered;
  j["m"] = b.step.difficulty;
  j["g"] = b.step.fees.str();
  j["h"] = b.step.reward.str();
  j["s"] = b.step.solution.s;
  auto txs = nlohmann::ordered_json::array();
  for (const auto& tx : b.txs) {
    nlohmann::ordered_json t;
    t["id"] = tx_id(tx).hex();
    t["kind"] = to_string(tx.kind);
    t["fee"] = tx.fee.str();
    t["inputs"] = tx.inputs.size();
    t["outputs"] = tx.outputs.size();
    txs.push_back(std::move(t));
  }
  j["txs"] = std::move(txs);
  return j.dump();
}

}  // namespace nakamoto::ledger
