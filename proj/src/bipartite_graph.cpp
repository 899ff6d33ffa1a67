#include "seqlrc/bipartite_graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "seqlrc/error.hpp"
#include "seqlrc/random.hpp"

namespace seqlrc {

BipartiteGraph::BipartiteGraph(std::size_t L, std::size_t r, std::vector<Edge> edges,
                               std::optional<std::size_t> certified_girth)
    : L_(L), r_(r), edges_(std::move(edges)), certified_girth_(certified_girth) {
  for (const auto& e : edges_) {
    if (e.top >= L_ || e.bottom >= L_) {
      throw Error(ErrorKind::MalformedGraph, "edge (" + std::to_string(e.top) + "," +
                                                 std::to_string(e.bottom) + ") out of range for L=" +
                                                 std::to_string(L_));
    }
  }
  std::ranges::sort(edges_);
}

std::vector<std::size_t> BipartiteGraph::top_degrees() const {
  std::vector<std::size_t> deg(L_, 0);
  for (const auto& e : edges_) ++deg[e.top];
  return deg;
}

std::vector<std::size_t> BipartiteGraph::bottom_degrees() const {
  std::vector<std::size_t> deg(L_, 0);
  for (const auto& e : edges_) ++deg[e.bottom];
  return deg;
}

namespace {

bool degrees_regular(const BipartiteGraph& g) {
  auto is_r = [&](std::size_t d) { return d == g.r(); };
  return std::ranges::all_of(g.top_degrees(), is_r) && std::ranges::all_of(g.bottom_degrees(), is_r);
}

}  // namespace

std::size_t girth(const BipartiteGraph& g) {
  if (!degrees_regular(g)) {
    throw Error(ErrorKind::MalformedGraph, "graph is not " + std::to_string(g.r()) + "-regular");
  }
  const std::size_t nodes = 2 * g.L();
  struct Arc {
    std::size_t to;
    std::size_t edge;
  };
  std::vector<std::vector<Arc>> adj(nodes);
  for (std::size_t id = 0; id < g.edges().size(); ++id) {
    const auto& e = g.edges()[id];
    adj[e.top].push_back({g.L() + e.bottom, id});
    adj[g.L() + e.bottom].push_back({e.top, id});
  }

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInfiniteGirth;
  std::vector<std::size_t> dist(nodes);
  std::vector<std::size_t> via(nodes);
  for (std::size_t source = 0; source < nodes; ++source) {
    std::ranges::fill(dist, kUnseen);
    dist[source] = 0;
    via[source] = kUnseen;
    std::queue<std::size_t> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const std::size_t x = frontier.front();
      frontier.pop();
      if (best != kInfiniteGirth && 2 * dist[x] + 1 >= best) break;
      for (const auto& arc : adj[x]) {
        if (arc.edge == via[x]) continue;
        if (dist[arc.to] == kUnseen) {
          dist[arc.to] = dist[x] + 1;
          via[arc.to] = arc.edge;
          frontier.push(arc.to);
        } else {
          best = std::min(best, dist[x] + dist[arc.to] + 1);
        }
      }
    }
  }
  return best;
}

namespace {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

}  // namespace

BipartiteGraph projective_plane_incidence(std::uint64_t q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime");

  // Normalized representatives of the 1-dimensional subspaces of F_q^3: the
  // first nonzero coordinate is 1. Lines use the same representatives via
  // the dot-product duality.
  std::vector<std::array<std::uint64_t, 3>> reps;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      for (std::uint64_t z = 0; z < q; ++z) {
        const std::uint64_t lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) reps.push_back({x, y, z});
      }
    }
  }
  const std::size_t L = reps.size();
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < L; ++p) {
    for (std::size_t l = 0; l < L; ++l) {
      const auto& a = reps[p];
      const auto& b = reps[l];
      if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0) edges.push_back({p, l});
    }
  }
  return BipartiteGraph(L, static_cast<std::size_t>(q + 1), std::move(edges), 6);
}

namespace {

// Incrementally tracks parallel-edge pairs plus 4-cycles of a bipartite
// multigraph. codeg(a, b) counts paths a - v - b over bottoms v.
class DefectCounter {
 public:
  explicit DefectCounter(std::size_t L)
      : L_(L), mult_(L * L, 0), codeg_(L * L, 0), tops_at_(L) {}

  long score() const { return score_; }

  void add(const Edge& e) {
    for (auto x : tops_at_[e.bottom]) {
      if (x == e.top) continue;
      score_ += codeg_[e.top * L_ + x];
      ++codeg_[e.top * L_ + x];
      ++codeg_[x * L_ + e.top];
    }
    score_ += mult_[e.top * L_ + e.bottom];
    ++mult_[e.top * L_ + e.bottom];
    tops_at_[e.bottom].push_back(e.top);
  }

  void remove(const Edge& e) {
    auto& tops = tops_at_[e.bottom];
    tops.erase(std::ranges::find(tops, e.top));
    --mult_[e.top * L_ + e.bottom];
    score_ -= mult_[e.top * L_ + e.bottom];
    for (auto x : tops) {
      if (x == e.top) continue;
      --codeg_[e.top * L_ + x];
      --codeg_[x * L_ + e.top];
      score_ -= codeg_[e.top * L_ + x];
    }
  }

  bool defective(const Edge& e) const {
    if (mult_[e.top * L_ + e.bottom] > 1) return true;
    return std::ranges::any_of(tops_at_[e.bottom], [&](std::size_t x) {
      return x != e.top && codeg_[e.top * L_ + x] >= 2;
    });
  }

 private:
  std::size_t L_;
  std::vector<long> mult_;
  std::vector<long> codeg_;
  std::vector<std::vector<std::size_t>> tops_at_;
  long score_ = 0;
};

// Returns true when an improving swap was applied.
bool improve_once(std::vector<Edge>& edges, DefectCounter& counter) {
  const long before = counter.score();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!counter.defective(edges[i])) continue;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const Edge e1 = edges[i];
      const Edge e2 = edges[j];
      if (j == i || e1.top == e2.top || e1.bottom == e2.bottom) continue;
      const Edge s1{e1.top, e2.bottom};
      const Edge s2{e2.top, e1.bottom};
      counter.remove(e1);
      counter.remove(e2);
      counter.add(s1);
      counter.add(s2);
      if (counter.score() < before) {
        edges[i] = s1;
        edges[j] = s2;
        return true;
      }
      counter.remove(s1);
      counter.remove(s2);
      counter.add(e1);
      counter.add(e2);
    }
  }
  return false;
}

}  // namespace

BipartiteGraph random_girth6(std::size_t L, std::size_t r, std::uint64_t seed, std::size_t max_iters) {
  if (L < 1 || r < 1 || r > L) {
    throw Error(ErrorKind::InvalidArgument,
                "random_girth6 needs 1 <= r <= L (got L=" + std::to_string(L) + ", r=" + std::to_string(r) + ")");
  }
  Rng rng(seed);
  std::vector<std::size_t> perm(L);
  for (std::size_t attempt = 0; attempt < max_iters; ++attempt) {
    std::vector<Edge> edges;
    edges.reserve(L * r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t u = 0; u < L; ++u) perm[u] = u;
      shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t u = 0; u < L; ++u) edges.push_back({u, perm[u]});
    }
    DefectCounter counter(L);
    for (const auto& e : edges) counter.add(e);
    while (counter.score() > 0 && improve_once(edges, counter)) {
    }
    if (counter.score() == 0) {
      const std::size_t certified = r == 1 ? kInfiniteGirth : 6;
      return BipartiteGraph(L, r, std::move(edges), certified);
    }
  }
  throw Error(ErrorKind::SearchExhausted, "no girth-6 graph with L=" + std::to_string(L) + ", r=" +
                                              std::to_string(r) + " found in " + std::to_string(max_iters) +
                                              " attempts");
}

ValidationReport validate(const BipartiteGraph& g) {
  ValidationReport report;
  report.regular = g.edges().size() == g.L() * g.r() && degrees_regular(g);
  if (!report.regular) report.messages.push_back("degree check failed: not " + std::to_string(g.r()) + "-regular");

  report.simple = std::ranges::adjacent_find(g.edges()) == g.edges().end();
  if (!report.simple) report.messages.push_back("duplicate edge present");

  if (degrees_regular(g)) {
    report.girth = girth(g);
    report.girth_at_least_6 = *report.girth >= 6;
    if (!report.girth_at_least_6) report.messages.push_back("girth " + std::to_string(*report.girth) + " < 6");
  } else {
    report.messages.push_back("girth not computed");
  }
  return report;
}

}  // namespace seqlrc
