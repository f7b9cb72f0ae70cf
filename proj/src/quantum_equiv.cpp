#include "qlap/quantum_equiv.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qlap/error.hpp"

namespace qlap {

namespace {

// Per position pair (s<t): 2 if equal vertices, 1 if adjacent, 0 otherwise.
std::vector<std::uint8_t> pattern(const Graph& g, std::span<const Vertex> p) {
  std::vector<std::uint8_t> sig;
  sig.reserve(p.size() * (p.size() - 1) / 2);
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      sig.push_back(p[s] == p[t] ? 2 : (g.adjacent(p[s], p[t]) ? 1 : 0));
    }
  }
  return sig;
}

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t index) {
  return (bits[index >> 6] >> (index & 63)) & 1U;
}
void clear_bit(std::vector<std::uint64_t>& bits, std::size_t index) {
  bits[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
}

}  // namespace

bool base_compatible(const Graph& g, const Path& p, const Path& q) {
  if (p.vertices.size() != q.vertices.size()) {
    throw LengthMismatch("base_compatible: paths of different length");
  }
  if (!is_path(g, p.vertices) || !is_path(g, q.vertices)) {
    throw RangeError("base_compatible: argument is not a path of the graph");
  }
  return pattern(g, p.vertices) == pattern(g, q.vertices);
}

std::string to_string(KillRule rule) {
  switch (rule) {
    case KillRule::kAlive:
      return "alive";
    case KillRule::kBase:
      return "base";
    case KillRule::kReversal:
      return "reversal";
    case KillRule::kRestriction:
      return "restriction";
    case KillRule::kExtension:
      return "extension";
  }
  return "unknown";
}

std::string to_string(WitnessStatus status) {
  switch (status) {
    case WitnessStatus::kClassicallyEquivalent:
      return "classically-equivalent";
    case WitnessStatus::kClosureAlive:
      return "closure-alive";
    case WitnessStatus::kClosureKilled:
      return "closure-killed";
  }
  return "unknown";
}

ClosureFixedPoint::ClosureFixedPoint(const Graph& g, unsigned k, const ClosureOptions& options)
    : k_(k) {
  if (k == 0) throw Error("closure: k must be at least 1");
  const std::size_t top = std::min<std::size_t>(2 * static_cast<std::size_t>(k) + 1,
                                                options.max_length);

  for (std::size_t len = 0; len <= top; ++len) {
    Layer layer{PathSpace(g, len, options.path_cap), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    const auto count = layer.space.size();
    layer.bucket_of.resize(count);
    layer.slot_of.resize(count);
    std::map<std::vector<std::uint8_t>, std::size_t> bucket_ids;
    for (std::size_t i = 0; i < count; ++i) {
      auto [it, inserted] = bucket_ids.try_emplace(pattern(g, layer.space.path(i)),
                                                   layer.buckets.size());
      if (inserted) layer.buckets.emplace_back();
      layer.bucket_of[i] = it->second;
      layer.slot_of[i] = layer.buckets[it->second].size();
      layer.buckets[it->second].push_back(i);
    }
    for (const auto& b : layer.buckets) {
      const std::size_t cells = b.size() * b.size();
      layer.alive.emplace_back((cells + 63) / 64, ~std::uint64_t{0});
      layer.reason.emplace_back(cells, KillRule::kAlive);
    }
    layers_.push_back(std::move(layer));
  }

  // Neighbouring lengths: drop-first / drop-last below, one-vertex extensions above.
  for (std::size_t len = 0; len <= top; ++len) {
    Layer& layer = layers_[len];
    const auto count = layer.space.size();
    if (len > 0) {
      layer.prefix.resize(count);
      layer.suffix.resize(count);
      const PathSpace& down = layers_[len - 1].space;
      for (std::size_t i = 0; i < count; ++i) {
        const auto p = layer.space.path(i);
        layer.prefix[i] = *down.index_of(p.first(len));
        layer.suffix[i] = *down.index_of(p.last(len));
      }
    }
    if (len < top) {
      layer.right.resize(count);
      layer.left.resize(count);
      const PathSpace& up = layers_[len + 1].space;
      std::vector<Vertex> buf(len + 2);
      for (std::size_t i = 0; i < count; ++i) {
        const auto p = layer.space.path(i);
        std::copy(p.begin(), p.end(), buf.begin());
        for (Vertex v : g.neighbors(p.back())) {
          buf.back() = v;
          layer.right[i].push_back(*up.index_of(buf));
        }
        std::copy(p.begin(), p.end(), buf.begin() + 1);
        for (Vertex v : g.neighbors(p.front())) {
          buf.front() = v;
          layer.left[i].push_back(*up.index_of(buf));
        }
      }
    }
  }

  // Chaotic iteration of the (monotone) elimination rules reaches the
  // greatest fixed point whatever the visiting order.
  const bool forward = options.order == EliminationOrder::kForward;
  bool changed = true;
  while (changed) {
    changed = false;
    ++sweeps_;
    for (std::size_t step = 0; step <= top; ++step) {
      const std::size_t len = forward ? step : top - step;
      Layer& layer = layers_[len];
      for (std::size_t bi = 0; bi < layer.buckets.size(); ++bi) {
        const auto& bucket = layer.buckets[bi];
        const std::size_t b = bucket.size();
        for (std::size_t step_x = 0; step_x < b; ++step_x) {
          const std::size_t x = forward ? step_x : b - 1 - step_x;
          for (std::size_t step_y = 0; step_y < b; ++step_y) {
            const std::size_t y = forward ? step_y : b - 1 - step_y;
            if (x == y || !test_bit(layer.alive[bi], x * b + y)) continue;
            const KillRule rule = violated_rule(len, bucket[x], bucket[y]);
            if (rule != KillRule::kAlive) {
              kill(layer, bucket[x], bucket[y], rule);
              changed = true;
            }
          }
        }
      }
    }
  }

  for (auto& layer : layers_) {
    DisjointSets sets(layer.space.size());
    for (const auto& bucket : layer.buckets) {
      for (std::size_t x = 0; x < bucket.size(); ++x) {
        for (std::size_t y = x + 1; y < bucket.size(); ++y) {
          if (alive(layer, bucket[x], bucket[y])) sets.unite(bucket[x], bucket[y]);
        }
      }
    }
    layer.partition = Partition(layer.space.alpha(), sets.labels());
  }
}

bool ClosureFixedPoint::alive(const Layer& layer, std::size_t i, std::size_t j) const {
  const auto bi = layer.bucket_of[i];
  if (bi != layer.bucket_of[j]) return false;
  const auto b = layer.buckets[bi].size();
  return test_bit(layer.alive[bi], layer.slot_of[i] * b + layer.slot_of[j]);
}

void ClosureFixedPoint::kill(Layer& layer, std::size_t i, std::size_t j, KillRule rule) {
  const auto bi = layer.bucket_of[i];
  const auto b = layer.buckets[bi].size();
  const auto x = layer.slot_of[i];
  const auto y = layer.slot_of[j];
  clear_bit(layer.alive[bi], x * b + y);
  clear_bit(layer.alive[bi], y * b + x);
  layer.reason[bi][x * b + y] = rule;
  layer.reason[bi][y * b + x] = rule;
}

bool ClosureFixedPoint::extensions_matched(const Layer& up, const std::vector<std::size_t>& from,
                                           const std::vector<std::size_t>& to) const {
  return std::all_of(from.begin(), from.end(), [&](std::size_t a) {
    return std::any_of(to.begin(), to.end(), [&](std::size_t b) { return alive(up, a, b); });
  });
}

KillRule ClosureFixedPoint::violated_rule(std::size_t length, std::size_t i,
                                          std::size_t j) const {
  const Layer& layer = layers_[length];

  // Products of projections vanish together with their adjoints, which are
  // the reversed products.
  if (!alive(layer, layer.space.reverse_index(i), layer.space.reverse_index(j))) {
    return KillRule::kReversal;
  }

  // A contiguous sub-product of a non-zero product is non-zero.
  if (length > 0) {
    const Layer& down = layers_[length - 1];
    if (!alive(down, layer.prefix[i], layer.prefix[j]) ||
        !alive(down, layer.suffix[i], layer.suffix[j])) {
      return KillRule::kRestriction;
    }
  }

  // Rows of the magic unitary sum to one, so a non-zero product stays
  // non-zero for at least one choice of the appended partner vertex.
  if (length + 1 < layers_.size()) {
    const Layer& up = layers_[length + 1];
    if (!extensions_matched(up, layer.right[i], layer.right[j]) ||
        !extensions_matched(up, layer.right[j], layer.right[i]) ||
        !extensions_matched(up, layer.left[i], layer.left[j]) ||
        !extensions_matched(up, layer.left[j], layer.left[i])) {
      return KillRule::kExtension;
    }
  }
  return KillRule::kAlive;
}

bool ClosureFixedPoint::related(std::size_t length, std::size_t i, std::size_t j) const {
  const Layer& layer = layers_.at(length);
  if (i == j) return true;
  return alive(layer, i, j);
}

KillRule ClosureFixedPoint::kill_rule(std::size_t length, std::size_t i, std::size_t j) const {
  const Layer& layer = layers_.at(length);
  if (i == j) return KillRule::kAlive;
  const auto bi = layer.bucket_of[i];
  if (bi != layer.bucket_of[j]) return KillRule::kBase;
  const auto b = layer.buckets[bi].size();
  return layer.reason[bi][layer.slot_of[i] * b + layer.slot_of[j]];
}

std::size_t ClosureFixedPoint::related_pair_count(std::size_t length) const {
  const Layer& layer = layers_.at(length);
  std::size_t total = 0;
  for (const auto& bits : layer.alive) {
    for (auto word : bits) total += static_cast<std::size_t>(std::popcount(word));
  }
  // Padding bits past b*b stay set; subtract them.
  for (const auto& bucket : layer.buckets) {
    const auto cells = bucket.size() * bucket.size();
    total -= (64 - cells % 64) % 64;
  }
  return total;
}

Partition closure_partition(const Graph& g, unsigned k, std::size_t alpha,
                            const ClosureOptions& options) {
  if (alpha > 2 * static_cast<std::size_t>(k) + 1) {
    throw Error("closure_partition: alpha must not exceed 2k+1");
  }
  if (alpha > options.max_length) {
    throw Error("closure_partition: alpha exceeds the configured maximum length");
  }
  const ClosureFixedPoint closure(g, k, options);
  return closure.partition(alpha);
}

PartitionBracket bracket(const Graph& g, const PermutationGroup& group, unsigned k,
                         std::size_t alpha, const ClosureOptions& options) {
  PartitionBracket out;
  out.k = k;
  out.alpha = alpha;
  out.lower = path_orbits(g, group, alpha, options.path_cap);
  out.upper = closure_partition(g, k, alpha, options);
  out.exact = out.lower == out.upper;
  return out;
}

PartitionBracket bracket(const Graph& g, unsigned k, std::size_t alpha,
                         const ClosureOptions& options, const SearchLimits& limits) {
  return bracket(g, automorphism_group(g, limits), k, alpha, options);
}

IntegerInterval r_k_bracket(const PartitionBracket& edges) {
  if (edges.alpha != 1) throw Error("r_k_bracket: bracket must be over directed edges");
  return {edges.lower.min_block_size(), edges.upper.min_block_size()};
}

IntegerInterval r_k_bracket(const Graph& g, unsigned k, const ClosureOptions& options,
                            const SearchLimits& limits) {
  return r_k_bracket(bracket(g, k, 1, options, limits));
}

CompatibilityWitness explain_pair(const ClosureFixedPoint& closure, const Partition& lower,
                                  std::size_t length, std::size_t i, std::size_t j) {
  CompatibilityWitness w;
  const PathSpace& space = closure.space(length);
  w.p = space.path_value(i);
  w.q = space.path_value(j);
  w.rule = closure.kill_rule(length, i, j);
  w.same_upper_block = closure.partition(length).same_block(i, j);
  if (lower.same_block(i, j)) {
    w.status = WitnessStatus::kClassicallyEquivalent;
  } else if (closure.related(length, i, j)) {
    w.status = WitnessStatus::kClosureAlive;
  } else {
    w.status = WitnessStatus::kClosureKilled;
  }
  return w;
}

MonotonicityReport monotonicity_check(const Graph& g, unsigned k_max,
                                      const ClosureOptions& options,
                                      const SearchLimits& limits) {
  MonotonicityReport report;
  const auto group = automorphism_group(g, limits);
  const Partition lower = path_orbits(g, group, 1, options.path_cap);
  Partition previous;
  for (unsigned k = 1; k <= k_max; ++k) {
    const Partition upper = closure_partition(g, k, 1, options);
    MonotonicityEntry entry{k, {lower.min_block_size(), upper.min_block_size()},
                            upper.block_count()};
    if (!lower.refines(upper)) {
      report.violations.push_back("k=" + std::to_string(k) +
                                  ": orbit partition does not refine closure partition");
    }
    if (k > 1) {
      const auto& prev = report.entries.back();
      if (!upper.refines(previous)) {
        report.violations.push_back("k=" + std::to_string(k) +
                                    ": closure partition coarser than at k-1");
      }
      if (entry.r.hi > prev.r.hi) {
        report.violations.push_back("k=" + std::to_string(k) + ": r_k increased with k");
      }
    }
    report.entries.push_back(entry);
    previous = upper;
  }
  return report;
}

}  // namespace qlap
