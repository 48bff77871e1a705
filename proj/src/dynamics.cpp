#include "majnet/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "majnet/error.hpp"

namespace majnet {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::uint64_t tail_mask(std::size_t n) {
  std::size_t rem = n & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void check_sizes(const SocialNetwork& net, const Labelling& f,
                 const char* what) {
  if (f.size() != net.node_count()) {
    fail_validation(std::string(what) + ": labelling length " +
                    std::to_string(f.size()) + " does not match n=" +
                    std::to_string(net.node_count()));
  }
}

}  // namespace

Labelling::Labelling(std::size_t n, bool fill) : n_(n) {
  words_.assign(word_count(n), fill ? ~std::uint64_t{0} : 0);
  if (fill && !words_.empty()) words_.back() &= tail_mask(n);
}

Labelling Labelling::from_bits(std::size_t n, std::uint64_t bits) {
  if (n > 64) fail_validation("from_bits supports at most 64 agents");
  Labelling l(n);
  if (n > 0) l.words_[0] = bits & tail_mask(n);
  return l;
}

Labelling Labelling::from_string(const std::string& text) {
  Labelling l(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      l.set(i, true);
    } else if (text[i] != '0') {
      fail_parse("labelling text must be over {0,1}");
    }
  }
  return l;
}

std::size_t Labelling::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Labelling::all_equal() const {
  std::size_t ones = count_ones();
  return ones == 0 || ones == n_;
}

std::string Labelling::to_string() const {
  std::string text(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) text[i] = '1';
  }
  return text;
}

std::uint64_t Labelling::to_bits() const {
  if (n_ > 64) fail_validation("to_bits supports at most 64 agents");
  return words_.empty() ? 0 : words_[0];
}

bool Labelling::value_less(const Labelling& a, const Labelling& b) {
  for (std::size_t k = std::max(a.words_.size(), b.words_.size()); k-- > 0;) {
    std::uint64_t wa = k < a.words_.size() ? a.words_[k] : 0;
    std::uint64_t wb = k < b.words_.size() ? b.words_[k] : 0;
    if (wa != wb) return wa < wb;
  }
  return false;
}

std::size_t LabellingHash::operator()(const Labelling& l) const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ l.size();
  for (std::uint64_t w : l.words()) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

Labelling complement(const Labelling& f) {
  Labelling out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.set(i, !f.get(i));
  return out;
}

bool labelling_leq(const Labelling& f, const Labelling& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t k = 0; k < f.words().size(); ++k) {
    if (f.words()[k] & ~g.words()[k]) return false;
  }
  return true;
}

bool opinion_change(const SocialNetwork& net, const Labelling& f, NodeId i) {
  check_sizes(net, f, "opinion_change");
  if (i >= net.node_count()) {
    fail_validation("opinion_change: node out of range");
  }
  bool current = f.get(i);
  std::uint32_t disagree = 0, degree = 0;
  for (NodeId j : net.influencers(i)) {
    disagree += f.get(j) != current;
    ++degree;
  }
  // flip iff strictly more influencers disagree than agree
  return disagree > degree - disagree ? !current : current;
}

Labelling synchronous_update(const SocialNetwork& net, const Labelling& f) {
  check_sizes(net, f, "synchronous_update");
  const NodeId n = net.node_count();
  Labelling next(n);
  for (NodeId i = 0; i < n; ++i) {
    bool current = f.get(i);
    std::uint32_t disagree = 0, degree = 0;
    for (NodeId j : net.influencers(i)) {
      disagree += f.get(j) != current;
      ++degree;
    }
    next.set(i, disagree > degree - disagree ? !current : current);
  }
  return next;
}

bool is_stable(const SocialNetwork& net, const Labelling& f) {
  return synchronous_update(net, f) == f;
}

namespace {

// Constant-memory exact detection (Brent): find the period first, then the
// preperiod. Used only past the stored-state cap.
RunResult run_iterate_compare(const SocialNetwork& net, const Labelling& x0,
                              std::uint64_t already_explored) {
  RunResult result;
  result.states_explored = already_explored;

  std::uint64_t power = 1, lambda = 1;
  Labelling tortoise = x0;
  Labelling hare = synchronous_update(net, x0);
  ++result.states_explored;
  while (hare != tortoise) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = synchronous_update(net, hare);
    ++result.states_explored;
    ++lambda;
  }

  Labelling mu_state = x0;
  hare = x0;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = synchronous_update(net, hare);
  std::uint64_t mu = 0;
  while (mu_state != hare) {
    mu_state = synchronous_update(net, mu_state);
    hare = synchronous_update(net, hare);
    ++mu;
  }

  if (lambda == 1) {
    result.outcome = Converged{mu, std::move(mu_state)};
  } else {
    result.outcome = Cycles{mu, lambda, std::move(mu_state)};
  }
  return result;
}

}  // namespace

RunResult run(const SocialNetwork& net, const Labelling& start,
              const RunOptions& options) {
  check_sizes(net, start, "run");
  RunResult result;
  std::vector<Labelling> states{start};
  std::unordered_map<Labelling, std::uint64_t, LabellingHash> seen;
  seen.emplace(start, 0);

  while (true) {
    const Labelling& current = states.back();
    std::uint64_t t = states.size() - 1;
    if (options.max_steps && t >= *options.max_steps) {
      result.outcome = Undetermined{*options.max_steps};
      result.states_explored = states.size();
      if (options.record_trajectory) {
        result.trajectory = Trajectory{
            std::move(states), Trajectory::Terminal::kBudgetExhausted};
      }
      return result;
    }
    Labelling next = synchronous_update(net, current);
    auto it = seen.find(next);
    if (it != seen.end()) {
      std::uint64_t first_seen = it->second;
      std::uint64_t period = t + 1 - first_seen;
      if (period == 1) {
        result.outcome = Converged{first_seen, next};
      } else {
        result.outcome = Cycles{first_seen, period, states[first_seen]};
      }
      result.states_explored = states.size();
      if (options.record_trajectory) {
        states.push_back(std::move(next));  // closing state
        result.trajectory = Trajectory{
            std::move(states), period == 1
                                   ? Trajectory::Terminal::kFixedPoint
                                   : Trajectory::Terminal::kCycleClosure};
      }
      return result;
    }
    if (states.size() >= options.state_cap) {
      if (options.fail_on_cap) {
        fail_refusal("run: stored-state cap of " +
                     std::to_string(options.state_cap) + " states exceeded");
      }
      // Trajectory cannot be materialised past the cap.
      if (options.max_steps) {
        // Keep budget semantics: iterate without storing, detecting fixed
        // points only, until the budget runs out.
        Labelling cur = std::move(next);
        std::uint64_t explored = states.size();
        states.clear();
        seen.clear();
        for (std::uint64_t step = t + 1; step < *options.max_steps; ++step) {
          Labelling following = synchronous_update(net, cur);
          ++explored;
          if (following == cur) {
            result.outcome = Converged{step, std::move(cur)};
            result.states_explored = explored;
            return result;
          }
          cur = std::move(following);
        }
        result.outcome = Undetermined{*options.max_steps};
        result.states_explored = explored;
        return result;
      }
      std::uint64_t explored = states.size();
      states.clear();
      seen.clear();
      return run_iterate_compare(net, start, explored);
    }
    seen.emplace(next, t + 1);
    states.push_back(std::move(next));
  }
}

namespace {

// Influencer bitmasks for networks of at most 64 agents; lets exhaustive
// searches update whole labellings with a handful of word ops.
struct MaskedNet {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> in_mask;
  std::vector<std::uint32_t> degree;

  explicit MaskedNet(const SocialNetwork& net) : n(net.node_count()) {
    in_mask.assign(n, 0);
    degree.assign(n, 0);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j : net.influencers(i)) in_mask[i] |= std::uint64_t{1} << j;
      degree[i] = net.in_degree(i);
    }
  }

  std::uint64_t step(std::uint64_t x) const {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t ones = std::popcount(in_mask[i] & x);
      bool self = (x >> i) & 1;
      bool next = 2 * ones > degree[i] || (self && 2 * ones == degree[i]);
      out |= std::uint64_t{next} << i;
    }
    return out;
  }

  // Exact outcome from a packed state; the state space is at most 2^n.
  bool converges(std::uint64_t x0) const {
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::uint64_t x = x0;
    std::uint32_t t = 0;
    while (true) {
      auto [it, fresh] = seen.emplace(x, t);
      if (!fresh) return false;  // revisit without fixed point: cycle
      std::uint64_t next = step(x);
      if (next == x) return true;
      x = next;
      ++t;
    }
  }

  bool converges_within(std::uint64_t x0, std::uint64_t bound) const {
    std::uint64_t x = x0;
    for (std::uint64_t t = 0; t < bound; ++t) {
      std::uint64_t next = step(x);
      if (next == x) return true;
      x = next;
    }
    return step(x) == x;
  }
};

}  // namespace

std::optional<Labelling> guarantee_search(const SocialNetwork& net,
                                          const GuaranteeOptions& options) {
  const std::uint32_t n = net.node_count();
  if (n > options.exhaustive_cap || n > 63) {
    fail_refusal("guarantee_search: n=" + std::to_string(n) +
                 " exceeds the exhaustive cap of " +
                 std::to_string(std::min<std::uint32_t>(options.exhaustive_cap,
                                                        63)));
  }
  if (n == 0) return std::nullopt;

  MaskedNet masked(net);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint32_t jobs = std::max<std::uint32_t>(
      1, std::min<std::uint32_t>(options.jobs, 64));

  std::atomic<bool> found{false};
  std::mutex result_mutex;
  std::optional<std::uint64_t> best;

  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::optional<std::uint64_t> local_best;
    for (std::uint64_t g = begin; g < end; ++g) {
      if (!options.deterministic && found.load(std::memory_order_relaxed)) {
        break;
      }
      // Gray-code order over the free bits; bit 0 stays 0 and complements
      // are covered implicitly by self-duality.
      std::uint64_t candidate = (g ^ (g >> 1)) << 1;
      if (!masked.converges(candidate)) {
        if (!options.deterministic) {
          std::lock_guard<std::mutex> lock(result_mutex);
          if (!best) best = candidate;
          found.store(true, std::memory_order_relaxed);
          break;
        }
        if (!local_best || candidate < *local_best) local_best = candidate;
      }
    }
    if (options.deterministic && local_best) {
      std::lock_guard<std::mutex> lock(result_mutex);
      if (!best || *local_best < *best) best = *local_best;
    }
  };

  if (jobs == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> workers;
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (std::uint32_t w = 0; w < jobs; ++w) {
      std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
      std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
      if (begin < end) workers.emplace_back(scan, begin, end);
    }
    for (auto& worker : workers) worker.join();
  }

  if (!best) return std::nullopt;
  return Labelling::from_bits(n, *best);
}

bool verify_bound(const SocialNetwork& net, std::uint64_t bound,
                  std::uint32_t exhaustive_cap) {
  const std::uint32_t n = net.node_count();
  if (n > exhaustive_cap || n > 63) {
    fail_refusal("verify_bound: n=" + std::to_string(n) +
                 " exceeds the exhaustive cap of " +
                 std::to_string(std::min<std::uint32_t>(exhaustive_cap, 63)));
  }
  if (n == 0) return true;
  MaskedNet masked(net);
  // Self-duality: f and its complement stabilise in the same number of
  // steps, so checking the half-space with bit 0 = 0 covers everything.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 0; g < total; ++g) {
    if (!masked.converges_within(g << 1, bound)) return false;
  }
  return true;
}

}  // namespace majnet
