#include "twins/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace twins {

namespace {

// Advances an ascending k-combination over [0, t) in colexicographic order.
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

std::vector<uint64_t> adjacency_masks(const Graph& g) {
  std::vector<uint64_t> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
  }
  return adj;
}

int mask_edges(const std::vector<uint64_t>& adj, uint64_t s) {
  int twice = 0;
  uint64_t rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    twice += std::popcount(adj[v] & s);
  }
  return twice / 2;
}

uint64_t combo_mask(const std::vector<int>& c, const std::vector<int>& universe) {
  uint64_t m = 0;
  for (int i : c) m |= uint64_t(1) << universe[i];
  return m;
}

VertexSet mask_to_set(uint64_t m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

}  // namespace

OracleResult exact_t(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap)
    throw std::invalid_argument("exact_t: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap) +
                                "; raise the cap only if you accept the cost");
  if (n > 62) throw std::invalid_argument("exact_t: n too large for subset enumeration");
  OracleResult res;
  res.witness = make_twin_pair(g, {}, {});
  if (n < 2) return res;
  auto adj = adjacency_masks(g);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int k = n / 2; k >= 1; --k) {
    std::vector<int> ac(k);
    std::iota(ac.begin(), ac.end(), 0);
    do {
      uint64_t amask = combo_mask(ac, all);
      int min_a = ac[0];  // colex combos keep positions ascending
      for (int i : ac) min_a = std::min(min_a, i);
      // B is drawn from vertices above min(A) and outside A, so every
      // unordered pair is visited exactly once.
      std::vector<int> pool;
      for (int v = min_a + 1; v < n; ++v)
        if (!((amask >> v) & 1)) pool.push_back(v);
      if (static_cast<int>(pool.size()) < k) continue;
      int ea = mask_edges(adj, amask);
      std::vector<int> bc(k);
      std::iota(bc.begin(), bc.end(), 0);
      do {
        uint64_t bmask = combo_mask(bc, pool);
        ++res.nodes_examined;
        if (mask_edges(adj, bmask) == ea) {
          res.t = k;
          res.witness = make_twin_pair(g, mask_to_set(amask), mask_to_set(bmask));
          return res;
        }
      } while (next_colex(bc, static_cast<int>(pool.size())));
    } while (next_colex(ac, n));
  }
  return res;
}

int exact_t_ascending(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap) throw std::invalid_argument("exact_t_ascending: n exceeds cap");
  if (n > 62) throw std::invalid_argument("exact_t_ascending: n too large");
  if (n < 2) return 0;
  auto adj = adjacency_masks(g);
  int best = 0;
  for (int k = 1; k <= n / 2; ++k) {
    bool found = false;
    // Plain double loop over subset masks; no sharing with the primary route.
    for (uint64_t am = 0; am < (uint64_t(1) << n) && !found; ++am) {
      if (std::popcount(am) != k) continue;
      int ea = mask_edges(adj, am);
      uint64_t rest = ~am & ((uint64_t(1) << n) - 1);
      for (uint64_t bm = rest; bm; bm = (bm - 1) & rest) {
        if (std::popcount(bm) != k) continue;
        if (std::countr_zero(bm) < std::countr_zero(am)) continue;
        if (mask_edges(adj, bm) == ea) {
          found = true;
          break;
        }
      }
    }
    if (found) best = k;
  }
  return best;
}

MinDiscResult min_disc_at_half(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("min_disc_at_half: n exceeds 16");
  MinDiscResult res;
  res.disc = -1;
  if (n < 2) {
    res.disc = 0;
    res.pair = make_twin_pair(g, {}, {});
    return res;
  }
  auto adj = adjacency_masks(g);
  int half = n / 2;
  auto consider = [&](uint64_t universe) {
    // Partitions of `universe` into halves; the half containing the lowest
    // vertex of the universe is A, which canonicalizes the unordered pair.
    int low = std::countr_zero(universe);
    std::vector<int> verts = mask_to_set(universe);
    std::vector<int> others;
    for (int v : verts)
      if (v != low) others.push_back(v);
    std::vector<int> c(half - 1);
    std::iota(c.begin(), c.end(), 0);
    bool more = half >= 1;
    do {
      uint64_t amask = uint64_t(1) << low;
      if (half >= 1)
        for (int i : c) amask |= uint64_t(1) << others[i];
      uint64_t bmask = universe & ~amask;
      long long d = std::llabs(static_cast<long long>(mask_edges(adj, amask)) -
                               static_cast<long long>(mask_edges(adj, bmask)));
      if (res.disc < 0 || d < res.disc) {
        res.disc = d;
        res.pair = make_twin_pair(g, mask_to_set(amask), mask_to_set(bmask));
      }
    } while (more && next_colex(c, static_cast<int>(others.size())));
  };
  uint64_t full = (uint64_t(1) << n) - 1;
  if (n % 2 == 0) {
    consider(full);
  } else {
    for (int skip = 0; skip < n; ++skip) consider(full & ~(uint64_t(1) << skip));
  }
  return res;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> balanced_halving(
    const std::vector<int>& x) {
  int m = static_cast<int>(x.size());
  int take = m / 2;  // the complement has size ceil(m/2): sizes differ by <= 1
  long long shift = 0;
  for (int v : x) shift = std::min<long long>(shift, v);
  shift = -shift;  // per-element offset making values non-negative
  std::vector<long long> y(m);
  long long total_y = 0;
  for (int i = 0; i < m; ++i) {
    y[i] = x[i] + shift;
    total_y += y[i];
  }
  long long total_x = total_y - static_cast<long long>(m) * shift;
  size_t sums = static_cast<size_t>(total_y) + 1;
  size_t words = (sums + 63) / 64;
  if (static_cast<size_t>(m + 1) * static_cast<size_t>(take + 1) * words * 8 >
      size_t(1) << 29)
    throw std::invalid_argument("balanced_halving: DP table too large");
  // reach[i][j] = bitset over sums achievable with j elements of the first i
  std::vector<std::vector<std::vector<uint64_t>>> reach(
      m + 1, std::vector<std::vector<uint64_t>>(take + 1, std::vector<uint64_t>(words, 0)));
  auto set_bit = [](std::vector<uint64_t>& bs, size_t i) { bs[i >> 6] |= uint64_t(1) << (i & 63); };
  auto get_bit = [](const std::vector<uint64_t>& bs, size_t i) {
    return (bs[i >> 6] >> (i & 63)) & 1;
  };
  set_bit(reach[0][0], 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j <= take; ++j) {
      reach[i][j] = reach[i - 1][j];
      if (j > 0) {
        const auto& prev = reach[i - 1][j - 1];
        size_t off = static_cast<size_t>(y[i - 1]);
        for (size_t w = (sums + 63) / 64; w-- > 0;) {
          uint64_t carry = 0;
          size_t word_off = off >> 6, bit_off = off & 63;
          if (w >= word_off) {
            carry = prev[w - word_off] << bit_off;
            if (bit_off && w > word_off) carry |= prev[w - word_off - 1] >> (64 - bit_off);
          }
          reach[i][j][w] |= carry;
        }
      }
    }
  }
  for (size_t s = 0; s < sums; ++s) {
    if (!get_bit(reach[m][take], s)) continue;
    long long sum_x = static_cast<long long>(s) - static_cast<long long>(take) * shift;
    if (std::llabs(total_x - 2 * sum_x) > 1) continue;
    std::vector<int> chosen;
    int j = take;
    long long cur = static_cast<long long>(s);
    for (int i = m; i > 0; --i) {
      if (get_bit(reach[i - 1][j], static_cast<size_t>(cur))) continue;  // element unused
      chosen.push_back(i - 1);
      --j;
      cur -= y[i - 1];
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> rest;
    size_t ci = 0;
    for (int i = 0; i < m; ++i) {
      if (ci < chosen.size() && chosen[ci] == i)
        ++ci;
      else
        rest.push_back(i);
    }
    return std::make_pair(chosen, rest);
  }
  return std::nullopt;
}

}  // namespace twins
