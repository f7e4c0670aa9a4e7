#include "coinbound/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace coinbound {

namespace {

constexpr Int kWordBits = 64;

}  // namespace

GeneralInstance::GeneralInstance(std::vector<Coin> coins) : coins_(std::move(coins)), total_(0) {
  if (coins_.empty()) {
    throw Error(ErrorKind::InvalidInstance, "coin list must not be empty");
  }
  for (const Coin& c : coins_) {
    if (c.denomination <= 0) {
      throw Error(ErrorKind::NonPositiveDenomination,
                  "denomination must be positive, got " + std::to_string(c.denomination));
    }
    if (c.bound < 0) {
      throw Error(ErrorKind::NegativeBound,
                  "bound must be non-negative, got " + std::to_string(c.bound));
    }
    total_ = checked_add(total_, checked_mul(c.denomination, c.bound));
  }
}

GeneralInstance::GeneralInstance(const BoundedInstance& inst)
    : GeneralInstance(std::vector<Coin>{{inst.m(), inst.max_a()}, {inst.n(), inst.max_b()}}) {}

ReachableSet::ReachableSet(Int total)
    : total_(total), words_(static_cast<std::size_t>(total / kWordBits + 1), 0) {
  words_[0] = 1;
}

bool ReachableSet::contains(Int v) const noexcept {
  if (v < 0 || v > total_) return false;
  return (words_[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U;
}

Int ReachableSet::count() const noexcept {
  Int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<Int> ReachableSet::members() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (Int v = 0; v <= total_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<Int> ReachableSet::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(total_ + 1 - count()));
  for (Int v = 0; v <= total_; ++v) {
    if (!contains(v)) out.push_back(v);
  }
  return out;
}

// bits |= bits << shift, truncated to {0..total}. Runs high to low so every
// source word is read before it is overwritten.
void ReachableSet::or_shifted(Int shift) {
  if (shift <= 0 || shift > total_) return;
  const auto word_shift = static_cast<std::size_t>(shift / kWordBits);
  const auto bit_shift = static_cast<unsigned>(shift % kWordBits);
  const std::size_t size = words_.size();
  for (std::size_t i = size; i-- > word_shift;) {
    const std::size_t src = i - word_shift;
    std::uint64_t moved = words_[src] << bit_shift;
    if (bit_shift != 0 && src > 0) moved |= words_[src - 1] >> (kWordBits - bit_shift);
    words_[i] |= moved;
  }
  const auto tail = static_cast<unsigned>((total_ + 1) % kWordBits);
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

ReachableSet reachable_set(const GeneralInstance& g, const OracleOptions& options) {
  if (g.total() > options.capacity) {
    throw Error(ErrorKind::CapacityExceeded, "oracle total " + std::to_string(g.total()) +
                                                 " exceeds capacity " +
                                                 std::to_string(options.capacity));
  }
  ReachableSet set(g.total());
  for (const Coin& coin : g.coins()) {
    switch (options.strategy) {
      case DpStrategy::ShiftOr: {
        // Passes beyond total / denomination cannot reach anything new.
        const Int passes = std::min(coin.bound, g.total() / coin.denomination);
        for (Int i = 0; i < passes; ++i) set.or_shifted(coin.denomination);
        break;
      }
      case DpStrategy::BinarySplit: {
        Int remaining = coin.bound;
        for (Int part = 1; remaining > 0; part *= 2) {
          const Int take = part < remaining ? part : remaining;
          set.or_shifted(coin.denomination * take);
          remaining -= take;
        }
        break;
      }
    }
  }
  return set;
}

Int oracle_count(const GeneralInstance& g, const OracleOptions& options) {
  return reachable_set(g, options).count();
}

std::vector<Int> oracle_gaps(const GeneralInstance& g, const OracleOptions& options) {
  return reachable_set(g, options).gaps();
}

}  // namespace coinbound
