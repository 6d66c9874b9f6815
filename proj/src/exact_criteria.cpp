#include "twins/exact_criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "twins/discrepancy.hpp"
#include "twins/oracle.hpp"

namespace twins {

namespace {

// Maximum set of vertex-disjoint pairs (v, v') with d(v') = d(v) + 1.
// Left-to-right sweep: unmatched vertices of degree d-1 are matched against
// the class of degree d; exact for this path-of-classes structure.
std::vector<std::pair<Vertex, Vertex>> consecutive_pair_matching(const DegreeProfile& prof) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  VertexSet carry;
  int carry_degree = -2;
  for (const auto& [deg, verts] : prof.classes) {
    if (deg != carry_degree + 1) carry.clear();
    size_t matched = std::min(carry.size(), verts.size());
    for (size_t i = 0; i < matched; ++i) pairs.emplace_back(carry[i], verts[i]);
    carry.assign(verts.begin() + matched, verts.end());
    carry_degree = deg;
  }
  return pairs;
}

void assert_full_perfect(const Graph& g, const TwinPair& p, const char* who) {
  // Lemma bridge: a full partition with equal degree sums must recount to
  // equal induced edges; verify before returning.
  if (2 * p.size() != g.vertex_count() || p.disc != 0 || !check_twins(g, p.a, p.b).valid)
    throw std::logic_error(std::string(who) + ": constructed partition is not perfect twins");
}

}  // namespace

CriterionReport detect_criteria(const Graph& g) {
  CriterionReport rep;
  DegreeProfile prof = degree_profile(g);
  rep.min_degree = prof.min_degree;
  rep.max_degree = prof.max_degree;
  for (const auto& [deg, verts] : prof.classes)
    rep.class_sizes.emplace_back(deg, static_cast<int>(verts.size()));
  for (int d = prof.min_degree; d <= prof.max_degree; ++d)
    if (!prof.classes.count(d)) rep.missing_degrees.push_back(d);
  for (const auto& [deg, verts] : prof.classes)
    if (verts.size() % 2 == 1) ++rep.odd_class_count;
  rep.consecutive_pairs = consecutive_pair_matching(prof);
  rep.consecutive_pair_count = static_cast<int>(rep.consecutive_pairs.size());

  int n = g.vertex_count();
  if (n % 2 != 0) {
    rep.reason = "criteria target perfect twins; vertex count is odd";
    return rep;
  }
  if (n == 0) {
    rep.reason = "empty graph";
    return rep;
  }
  if (rep.missing_degrees.empty()) rep.satisfied.insert(1);
  bool all_even = true;
  for (const auto& [deg, sz] : rep.class_sizes)
    if (sz % 2 == 1) all_even = false;
  if (all_even) rep.satisfied.insert(2);
  if (n >= 90 && rep.odd_class_count > n / 2) rep.satisfied.insert(3);
  if (rep.consecutive_pair_count >= rep.max_degree - rep.min_degree) rep.satisfied.insert(4);
  return rep;
}

TwinPair perfect_twins_consecutive(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("perfect_twins_consecutive: n must be even and positive");
  if (!detect_criteria(g).satisfied.count(1))
    throw std::invalid_argument("perfect_twins_consecutive: degree set is not consecutive");
  VertexSet verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  auto [a, b] = alternating_partition(g, verts);
  long long ea = induced_edge_count(g, a), eb = induced_edge_count(g, b);
  while (ea != eb) {
    VertexSet& lighter = ea < eb ? a : b;
    VertexSet& heavier = ea < eb ? b : a;
    // Move a degree-(d+1) vertex to the lighter side in exchange for one of
    // degree d; the edge gap shrinks by exactly 1.
    Vertex pick_l = -1, pick_h = -1;
    for (Vertex lv : lighter) {
      for (Vertex hv : heavier)
        if (g.degree(hv) == g.degree(lv) + 1) {
          pick_l = lv;
          pick_h = hv;
          break;
        }
      if (pick_l >= 0) break;
    }
    if (pick_l < 0)
      throw std::logic_error("perfect_twins_consecutive: no consecutive swap available at "
                             "nonzero discrepancy");
    lighter.erase(std::find(lighter.begin(), lighter.end(), pick_l));
    heavier.erase(std::find(heavier.begin(), heavier.end(), pick_h));
    lighter.push_back(pick_h);
    heavier.push_back(pick_l);
    lighter = canonical(std::move(lighter));
    heavier = canonical(std::move(heavier));
    long long na = induced_edge_count(g, a), nb = induced_edge_count(g, b);
    if (std::llabs(na - nb) != std::llabs(ea - eb) - 1)
      throw std::logic_error("perfect_twins_consecutive: swap did not change the gap by 1");
    ea = na;
    eb = nb;
  }
  TwinPair p = make_twin_pair(g, std::move(a), std::move(b));
  assert_full_perfect(g, p, "perfect_twins_consecutive");
  return p;
}

TwinPair perfect_twins_even_classes(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("perfect_twins_even_classes: n must be even and positive");
  DegreeProfile prof = degree_profile(g);
  VertexSet a, b;
  for (const auto& [deg, verts] : prof.classes) {
    if (verts.size() % 2 != 0)
      throw std::invalid_argument("perfect_twins_even_classes: odd class at degree " +
                                  std::to_string(deg));
    a.insert(a.end(), verts.begin(), verts.begin() + verts.size() / 2);
    b.insert(b.end(), verts.begin() + verts.size() / 2, verts.end());
  }
  TwinPair p = make_twin_pair(g, std::move(a), std::move(b));
  assert_full_perfect(g, p, "perfect_twins_even_classes");
  return p;
}

TwinPair perfect_twins_odd_classes(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("perfect_twins_odd_classes: n must be even and positive");
  if (!detect_criteria(g).satisfied.count(3))
    throw std::invalid_argument("perfect_twins_odd_classes: criterion 3 does not hold");
  DegreeProfile prof = degree_profile(g);
  VertexSet a, b, leftover;
  for (const auto& [deg, verts] : prof.classes) {
    size_t half = verts.size() / 2;
    a.insert(a.end(), verts.begin(), verts.begin() + half);
    b.insert(b.end(), verts.begin() + half, verts.begin() + 2 * half);
    if (verts.size() % 2 == 1) leftover.push_back(verts.back());
  }
  std::vector<int> degs;
  for (Vertex v : leftover) degs.push_back(g.degree(v));
  auto split = balanced_halving(degs);
  if (!split) {
    std::string values;
    for (int d : degs) values += std::to_string(d) + " ";
    throw std::runtime_error("perfect_twins_odd_classes: no balanced halving of leftover "
                             "degrees { " + values + "}");
  }
  for (int i : split->first) a.push_back(leftover[i]);
  for (int i : split->second) b.push_back(leftover[i]);
  if (degree_sum(g, a) != degree_sum(g, b))
    throw std::logic_error("perfect_twins_odd_classes: parity argument failed, degree sums "
                           "differ");
  TwinPair p = make_twin_pair(g, std::move(a), std::move(b));
  assert_full_perfect(g, p, "perfect_twins_odd_classes");
  return p;
}

TwinPair perfect_twins_consecutive_pairs(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("perfect_twins_consecutive_pairs: n must be even and positive");
  DegreeProfile prof = degree_profile(g);
  int x = prof.max_degree - prof.min_degree;
  auto pairs = consecutive_pair_matching(prof);
  if (static_cast<int>(pairs.size()) < x)
    throw std::invalid_argument("perfect_twins_consecutive_pairs: fewer than Delta - delta "
                                "disjoint consecutive pairs");
  pairs.resize(x);

  std::vector<char> in_pair(n, 0);
  for (auto [v, w] : pairs) in_pair[v] = in_pair[w] = 1;
  VertexSet rest;
  for (int v = 0; v < n; ++v)
    if (!in_pair[v]) rest.push_back(v);
  auto [a, b] = alternating_partition(g, rest);
  long long gap = degree_sum(g, a) - degree_sum(g, b);
  if (gap < 0 || gap > x)
    throw std::logic_error("perfect_twins_consecutive_pairs: alternating gap out of range");
  // First x' pairs close the gap one unit each; the rest alternate.
  int xprime = static_cast<int>(gap);
  for (int i = 1; i <= x; ++i) {
    auto [v, w] = pairs[i - 1];  // d(w) = d(v) + 1
    bool v_to_a;
    if (i <= xprime)
      v_to_a = true;
    else
      v_to_a = i % 2 == 0;
    if (v_to_a) {
      a.push_back(v);
      b.push_back(w);
    } else {
      a.push_back(w);
      b.push_back(v);
    }
  }
  if (degree_sum(g, a) != degree_sum(g, b))
    throw std::logic_error("perfect_twins_consecutive_pairs: degree sums differ after pair "
                           "distribution");
  TwinPair p = make_twin_pair(g, std::move(a), std::move(b));
  assert_full_perfect(g, p, "perfect_twins_consecutive_pairs");
  return p;
}

PerfectTwinsResult find_perfect_twins(const Graph& g) {
  PerfectTwinsResult res;
  res.report = detect_criteria(g);
  struct Entry {
    int criterion;
    TwinPair (*build)(const Graph&);
  };
  // Cheapest and fully deterministic constructions first.
  const Entry order[] = {{2, perfect_twins_even_classes},
                         {1, perfect_twins_consecutive},
                         {4, perfect_twins_consecutive_pairs},
                         {3, perfect_twins_odd_classes}};
  for (const auto& entry : order) {
    if (!res.report.satisfied.count(entry.criterion)) continue;
    try {
      res.pair = entry.build(g);
      res.found = true;
      res.method = "criterion-" + std::to_string(entry.criterion);
      return res;
    } catch (const std::runtime_error&) {
      // criterion-3 halving can come up empty; fall through to the others
    }
  }
  int n = g.vertex_count();
  if (n >= 2 && n % 2 == 0) {
    auto [pair, trace] = almost_twins_local_search(g);
    if (pair.disc == 0 && 2 * pair.size() == n) {
      res.pair = std::move(pair);
      res.found = true;
      res.method = "opportunistic";
      return res;
    }
  }
  return res;
}

}  // namespace twins
