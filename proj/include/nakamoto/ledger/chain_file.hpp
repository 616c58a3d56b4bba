#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/ledger/state.hpp"
#include "nakamoto/ledger/types.hpp"

namespace nakamoto::ledger {

/// Chain dump: canonical block records, each prefixed by its length as a
/// 4-byte big-endian integer.
void write_chain_dump(std::ostream& os, const std::vector<Block>& blocks);
void write_chain_dump(const std::string& path, const std::vector<Block>& blocks);
/// Throws crypto::DecodeError on a truncated or malformed record.
std::vector<Block> read_chain_dump(std::istream& is);
std::vector<Block> read_chain_dump(const std::string& path);

/// One JSON object per block: k, digest, prev, miner, n, m, g, h, s, txs.
std::string block_summary_json(const Block& b, const MoneyProfile& profile);

}  // namespace nakamoto::ledger
