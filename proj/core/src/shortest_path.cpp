#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "endprox/error.hpp"
#include "endprox/structure.hpp"

namespace endprox {

namespace {

struct Step {
  int to;
  bool pair;  // a backbone edge that doubles as a pair edge counts as a pair
};

// Neighbours of v in ascending order.
std::vector<Step> neighbours(std::span<const int> partner, int v) {
  const int n = static_cast<int>(partner.size());
  const int p = partner[v];
  std::vector<Step> out;
  out.reserve(3);
  if (v > 0) out.push_back({v - 1, p == v - 1});
  if (v + 1 < n) out.push_back({v + 1, p == v + 1});
  if (p != SecondaryStructure::kUnpaired && p != v - 1 && p != v + 1) {
    out.push_back({p, true});
  }
  std::sort(out.begin(), out.end(),
            [](const Step& a, const Step& b) { return a.to < b.to; });
  return out;
}

std::vector<int> bfs(std::span<const int> partner, int source) {
  std::vector<int> dist(partner.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const Step& s : neighbours(partner, v)) {
      if (dist[s.to] < 0) {
        dist[s.to] = dist[v] + 1;
        q.push(s.to);
      }
    }
  }
  return dist;
}

// Bitset of achievable pair-edge counts on shortest paths from a node to
// the 3' end.
class CountSet {
 public:
  explicit CountSet(int max_count = 0)
      : words_(static_cast<std::size_t>(max_count) / 64 + 1, 0) {}

  bool test(int k) const {
    if (k < 0) return false;
    const auto w = static_cast<std::size_t>(k) / 64;
    return w < words_.size() && ((words_[w] >> (k % 64)) & 1U);
  }
  void set(int k) {
    words_[static_cast<std::size_t>(k) / 64] |= std::uint64_t{1} << (k % 64);
  }
  // this |= other << shift, shift in {0, 1}
  void merge(const CountSet& other, int shift) {
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t x = w < other.words_.size() ? other.words_[w] : 0;
      words_[w] |= shift ? (x << 1) | carry : x;
      carry = x >> 63;
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

ExteriorStats shortest_path_stats(const SecondaryStructure& s,
                                  const EteModel& m) {
  if (s.empty()) {
    throw Error(Errc::EmptyStructure, "shortest path needs at least one node");
  }
  const auto partner = s.partner_table();
  const int n = static_cast<int>(s.length());
  const int last = n - 1;

  const std::vector<int> from5 = bfs(partner, 0);
  const std::vector<int> to3 = bfs(partner, last);
  const int dist = from5[last];

  auto on_dag = [&](int v, const Step& st) {
    return from5[st.to] == from5[v] + 1 && from5[st.to] + to3[st.to] == dist;
  };

  // Nodes on some shortest path, processed from the 3' end backwards.
  std::vector<int> order;
  for (int v = 0; v < n; ++v) {
    if (from5[v] + to3[v] == dist) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return from5[a] > from5[b]; });

  std::vector<CountSet> reach(n);
  for (int v : order) {
    reach[v] = CountSet(to3[v]);
    if (v == last) {
      reach[v].set(0);
      continue;
    }
    for (const Step& st : neighbours(partner, v)) {
      if (on_dag(v, st)) reach[v].merge(reach[st.to], st.pair ? 1 : 0);
    }
  }

  // Pick the pair-edge count with the smallest ETE; equal ETE values keep
  // the candidate whose greedy path is lexicographically smaller.
  auto greedy_path = [&](int deg) {
    std::vector<int> path{0};
    int v = 0, need = deg;
    while (v != last) {
      for (const Step& st : neighbours(partner, v)) {
        const int rest = need - (st.pair ? 1 : 0);
        if (on_dag(v, st) && reach[st.to].test(rest)) {
          v = st.to;
          need = rest;
          break;
        }
      }
      path.push_back(v);
    }
    return path;
  };

  int best_deg = -1;
  double best_ete = std::numeric_limits<double>::infinity();
  std::vector<int> best_path;
  for (int deg = 0; deg <= dist; ++deg) {
    if (!reach[0].test(deg)) continue;
    const double ete = ete_distance(deg, dist - deg, m);
    if (ete < best_ete) {
      best_ete = ete;
      best_deg = deg;
      best_path.clear();
    } else if (ete == best_ete) {
      auto candidate = greedy_path(deg);
      if (best_path.empty()) best_path = greedy_path(best_deg);
      if (candidate < best_path) {
        best_deg = deg;
        best_path = std::move(candidate);
      }
    }
  }
  if (best_path.empty()) best_path = greedy_path(best_deg);

  ExteriorStats st;
  st.deg = best_deg;
  st.chn = dist - best_deg;
  st.unp = static_cast<int>(
      std::count_if(best_path.begin(), best_path.end(), [&](int v) {
        return partner[v] == SecondaryStructure::kUnpaired;
      }));
  st.len_ext = static_cast<int>(best_path.size());
  st.ete_nm = best_ete;
  st.rms_nm = rms_distance(st.len_ext, m);
  st.hel = first_helix_length(s);
  if (!s.crossing()) {
    if (const auto stem = first_stem(s)) {
      st.stm = stem->pairs;
      st.stem_helices = stem->helices;
    }
  }
  return st;
}

}  // namespace endprox
