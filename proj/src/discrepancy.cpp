#include "twins/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace twins {

const char* to_string(AlmostTwinsBranch b) {
  return b == AlmostTwinsBranch::extraction ? "extraction" : "local_search";
}

int ceil_lg2(int n) {
  if (n < 1) throw std::invalid_argument("ceil_lg2: n must be >= 1");
  return std::bit_width(static_cast<unsigned>(n - 1));
}

namespace {

bool next_colex(std::vector<int>& c, int t) {
  int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? c[i + 1] : t;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> equal_sum_pair(
    const std::vector<int>& x, int k) {
  if (k < 1) throw std::invalid_argument("equal_sum_pair: k must be >= 1");
  int t = std::min<int>(static_cast<int>(x.size()), 2 * k);
  if (k > t) return std::nullopt;
  std::unordered_map<long long, std::vector<int>> seen;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  do {
    long long sum = 0;
    for (int i : c) sum += x[i];
    auto [it, inserted] = seen.try_emplace(sum, c);
    if (!inserted) {
      // Strip the shared indices from the colliding pair.
      std::vector<int> first, second;
      std::set_difference(it->second.begin(), it->second.end(), c.begin(), c.end(),
                          std::back_inserter(first));
      std::set_difference(c.begin(), c.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(second));
      if (second < first) std::swap(first, second);
      return std::make_pair(first, second);
    }
  } while (next_colex(c, t));
  return std::nullopt;
}

std::pair<VertexSet, VertexSet> combine_blocks(const Graph& host,
                                               std::vector<BlockPair> blocks) {
  std::vector<char> used(host.vertex_count(), 0);
  for (auto& blk : blocks) {
    blk.a = canonical(blk.a);
    blk.b = canonical(blk.b);
    if (blk.a.size() != blk.b.size())
      throw std::invalid_argument("combine_blocks: block sides differ in size");
    for (const auto* side : {&blk.a, &blk.b})
      for (Vertex v : *side) {
        if (v < 0 || v >= host.vertex_count() || used[v])
          throw std::invalid_argument("combine_blocks: overlapping or out-of-range blocks");
        used[v] = 1;
      }
    blk.eps = std::llabs(degree_sum(host, blk.a) - degree_sum(host, blk.b));
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const BlockPair& l, const BlockPair& r) { return l.eps > r.eps; });
  VertexSet a, b;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& blk = blocks[i];
    bool a_heavier = degree_sum(host, blk.a) >= degree_sum(host, blk.b);
    // Odd rank: heavier side joins a. Even rank: heavier side joins b.
    const VertexSet& to_a = (i % 2 == 0) == a_heavier ? blk.a : blk.b;
    const VertexSet& to_b = (&to_a == &blk.a) ? blk.b : blk.a;
    a.insert(a.end(), to_a.begin(), to_a.end());
    b.insert(b.end(), to_b.begin(), to_b.end());
  }
  return {canonical(std::move(a)), canonical(std::move(b))};
}

std::pair<TwinPair, AlmostTwinsTrace> almost_twins_extraction(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("almost_twins_extraction: n must be >= 2");
  int k = ceil_lg2(n);
  AlmostTwinsTrace trace;
  trace.k = k;
  trace.branch = AlmostTwinsBranch::extraction;
  trace.bound = 2.0 * k * k;

  VertexSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<BlockPair> blocks;
  while (static_cast<int>(remaining.size()) >= 2) {
    int r = static_cast<int>(remaining.size());
    // Past the guaranteed range the search window widens to cover all of the
    // remainder, so a block is found whenever any equal-sum pair exists.
    int k_eff = r >= 2 * k ? k : std::min(k, (r + 1) / 2);
    std::vector<int> degs(r);
    for (int i = 0; i < r; ++i) degs[i] = g.degree(remaining[i]);
    auto hit = equal_sum_pair(degs, k_eff);
    if (!hit) {
      if (r >= 2 * k && n >= 16)
        throw std::logic_error("almost_twins_extraction: equal_sum_pair failed with >= 2k "
                               "vertices remaining");
      break;
    }
    BlockPair blk;
    for (int i : hit->first) blk.a.push_back(remaining[i]);
    for (int i : hit->second) blk.b.push_back(remaining[i]);
    VertexSet taken = canonical(blk.a);
    VertexSet tb = canonical(blk.b);
    taken.insert(taken.end(), tb.begin(), tb.end());
    taken = canonical(std::move(taken));
    VertexSet next;
    std::set_difference(remaining.begin(), remaining.end(), taken.begin(), taken.end(),
                        std::back_inserter(next));
    remaining = std::move(next);
    blocks.push_back(std::move(blk));
  }
  trace.leftover = remaining;

  Graph pruned = g.minus(trace.leftover);  // degrees of G' = g minus S
  for (auto& blk : blocks) {
    if (degree_sum(g, blk.a) != degree_sum(g, blk.b))
      throw std::logic_error("almost_twins_extraction: block degree sums differ in g");
    blk.eps = std::llabs(degree_sum(pruned, blk.a) - degree_sum(pruned, blk.b));
  }
  auto [a, b] = combine_blocks(pruned, blocks);
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const BlockPair& l, const BlockPair& r) { return l.eps > r.eps; });
  trace.blocks = std::move(blocks);

  TwinPair pair = make_twin_pair(g, std::move(a), std::move(b));
  trace.achieved_disc = pair.disc;
  if (n >= 16) {
    if (pair.disc > static_cast<long long>(trace.bound))
      throw std::logic_error("almost_twins_extraction: discrepancy bound violated");
    if (2.0 * pair.size() < n - 2.0 * std::log2(static_cast<double>(n)))
      throw std::logic_error("almost_twins_extraction: size bound violated");
  }
  return {std::move(pair), std::move(trace)};
}

std::pair<VertexSet, VertexSet> alternating_partition(const Graph& g, const VertexSet& verts) {
  if (verts.size() % 2 != 0)
    throw std::invalid_argument("alternating_partition: odd vertex count");
  VertexSet order = verts;
  std::sort(order.begin(), order.end(), [&](Vertex l, Vertex r) {
    if (g.degree(l) != g.degree(r)) return g.degree(l) > g.degree(r);
    return l < r;
  });
  VertexSet a, b;
  for (size_t i = 0; i < order.size(); ++i) (i % 2 == 0 ? a : b).push_back(order[i]);
  return {canonical(std::move(a)), canonical(std::move(b))};
}

std::pair<TwinPair, AlmostTwinsTrace> almost_twins_local_search(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("almost_twins_local_search: n must be >= 2");
  AlmostTwinsTrace trace;
  trace.k = ceil_lg2(n);
  trace.branch = AlmostTwinsBranch::local_search;
  DegreeProfile prof = degree_profile(g);
  trace.bound = (prof.max_degree - prof.min_degree + 1) / 2.0;

  Graph work = n % 2 == 0 ? g : g.minus({0});
  VertexSet verts;
  for (int v = n % 2 == 0 ? 0 : 1; v < n; ++v) verts.push_back(v);
  if (n % 2 == 1) trace.leftover = {0};

  auto [a, b] = alternating_partition(work, verts);
  long long diff = induced_edge_count(work, a) - induced_edge_count(work, b);
  while (diff != 0) {
    // Swapping av and bv changes e(A) - e(B) by d(bv) - d(av), degrees in
    // the working graph. Take the largest strict improvement, lowest
    // (av, bv) on ties.
    long long best_abs = std::llabs(diff);
    Vertex best_a = -1, best_b = -1;
    for (Vertex av : a)
      for (Vertex bv : b) {
        long long nd = std::llabs(diff - work.degree(av) + work.degree(bv));
        if (nd < best_abs) {
          best_abs = nd;
          best_a = av;
          best_b = bv;
        }
      }
    if (best_a < 0) break;
    a.erase(std::find(a.begin(), a.end(), best_a));
    b.erase(std::find(b.begin(), b.end(), best_b));
    a.push_back(best_b);
    b.push_back(best_a);
    a = canonical(std::move(a));
    b = canonical(std::move(b));
    diff = diff - work.degree(best_a) + work.degree(best_b);
  }
  if (diff != induced_edge_count(work, a) - induced_edge_count(work, b))
    throw std::logic_error("almost_twins_local_search: incremental count drifted");

  TwinPair pair = make_twin_pair(g, std::move(a), std::move(b));
  trace.achieved_disc = pair.disc;
  if (2 * pair.disc > prof.max_degree - prof.min_degree + 1)
    throw std::logic_error("almost_twins_local_search: discrepancy bound violated");
  return {std::move(pair), std::move(trace)};
}

AlmostTwinsBest almost_twins_best(const Graph& g) {
  AlmostTwinsBest best;
  auto [ep, et] = almost_twins_extraction(g);
  auto [lp, lt] = almost_twins_local_search(g);
  best.extraction = std::move(et);
  best.local_search = std::move(lt);
  if (lp.disc <= ep.disc) {
    best.pair = std::move(lp);
    best.chosen = AlmostTwinsBranch::local_search;
  } else {
    best.pair = std::move(ep);
    best.chosen = AlmostTwinsBranch::extraction;
  }
  return best;
}

}  // namespace twins
