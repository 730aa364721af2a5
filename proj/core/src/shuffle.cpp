#include "endprox/shuffle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "endprox/error.hpp"

namespace endprox {

namespace {

template <class T>
void fisher_yates(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace

std::string klet_shuffle(std::string_view s, int k, Rng& rng) {
  if (s.empty()) throw Error(Errc::EmptySequence, "cannot shuffle an empty sequence");
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  if (static_cast<std::size_t>(k) > s.size()) {
    throw Error(Errc::KTooLarge, "k exceeds the sequence length");
  }
  if (k == 1) {
    std::string out(s);
    for (std::size_t i = out.size(); i > 1; --i) {
      std::swap(out[i - 1], out[rng.below(i)]);
    }
    return out;
  }

  // Vertices are (k-1)-mers, one edge per k-let occurrence.
  const std::size_t w = static_cast<std::size_t>(k) - 1;
  const std::size_t edges = s.size() - w;
  std::unordered_map<std::string_view, int> ids;
  std::vector<std::string_view> names;
  auto id_of = [&](std::size_t pos) {
    const std::string_view key = s.substr(pos, w);
    auto [it, inserted] = ids.try_emplace(key, static_cast<int>(names.size()));
    if (inserted) names.push_back(key);
    return it->second;
  };
  std::vector<int> vertex_at(edges + 1);
  for (std::size_t i = 0; i <= edges; ++i) vertex_at[i] = id_of(i);
  const int nv = static_cast<int>(names.size());
  std::vector<std::vector<int>> out_edges(nv);
  for (std::size_t i = 0; i < edges; ++i) {
    out_edges[vertex_at[i]].push_back(vertex_at[i + 1]);
  }
  const int first = vertex_at.front();
  const int last = vertex_at.back();

  // Wilson's algorithm: a uniform arborescence of last-exit edges rooted at
  // the final vertex, each step choosing among out-edges with multiplicity.
  std::vector<int> exit_to(nv, -1);
  std::vector<char> in_tree(nv, 0);
  in_tree[last] = 1;
  for (int v = 0; v < nv; ++v) {
    for (int u = v; !in_tree[u]; u = exit_to[u]) {
      const auto& choices = out_edges[u];
      exit_to[u] = choices[rng.below(choices.size())];
    }
    for (int u = v; !in_tree[u]; u = exit_to[u]) in_tree[u] = 1;
  }

  // Remaining out-edges in random order, the tree edge used last.
  for (int v = 0; v < nv; ++v) {
    auto& list = out_edges[v];
    if (v != last) {
      list.erase(std::find(list.begin(), list.end(), exit_to[v]));
    }
    fisher_yates(list, rng);
    if (v != last) list.push_back(exit_to[v]);
  }

  std::string out(names[first]);
  out.reserve(s.size());
  std::vector<std::size_t> used(nv, 0);
  for (int v = first, step = 0; step < static_cast<int>(edges); ++step) {
    const int next = out_edges[v][used[v]++];
    out += names[next].back();
    v = next;
  }
  return out;
}

bool validate_klets(std::string_view a, std::string_view b, int k) {
  if (k <= 0) return a.size() == b.size();
  auto count = [k](std::string_view s) {
    std::map<std::string_view, int> c;
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i + kk <= s.size(); ++i) ++c[s.substr(i, kk)];
    return c;
  };
  return count(a) == count(b);
}

}  // namespace endprox
