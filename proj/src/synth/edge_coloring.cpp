#include "eqshadow/synth/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqshadow {

namespace {

std::vector<std::vector<Edge>> round_robin(int n) {
  // Circle method on an even number of slots; slot n is a bye when n is odd.
  const int slots = n + (n % 2);
  std::vector<std::vector<Edge>> rounds;
  std::vector<int> ring(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) ring[static_cast<std::size_t>(i)] = i;
  for (int r = 0; r < slots - 1; ++r) {
    std::vector<Edge> layer;
    for (int k = 0; k < slots / 2; ++k) {
      int a = ring[static_cast<std::size_t>(k)], b = ring[static_cast<std::size_t>(slots - 1 - k)];
      if (a >= n || b >= n) continue;
      layer.emplace_back(std::min(a, b), std::max(a, b));
    }
    rounds.push_back(std::move(layer));
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

class MisraGries {
 public:
  MisraGries(int n, int colors)
      : n_(n), colors_(colors), color_(static_cast<std::size_t>(n * n), -1),
        adj_(static_cast<std::size_t>(n)) {}

  void add_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }

  int color(int u, int v) const { return color_[static_cast<std::size_t>(u * n_ + v)]; }
  void set_color(int u, int v, int c) {
    color_[static_cast<std::size_t>(u * n_ + v)] = c;
    color_[static_cast<std::size_t>(v * n_ + u)] = c;
  }

  bool is_free(int v, int c) const {
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (color(v, w) == c) return false;
    return true;
  }

  int free_color(int v) const {
    for (int c = 0; c < colors_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("no free colour");
  }

  int neighbor_with(int v, int c) const {
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (color(v, w) == c) return w;
    return -1;
  }

  void color_edge(int u, int v) {
    // Maximal fan of u starting at v.
    std::vector<int> fan{v};
    std::vector<char> in_fan(static_cast<std::size_t>(n_), 0);
    in_fan[static_cast<std::size_t>(v)] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int w : adj_[static_cast<std::size_t>(u)]) {
        if (in_fan[static_cast<std::size_t>(w)] || color(u, w) < 0) continue;
        if (is_free(fan.back(), color(u, w))) {
          fan.push_back(w);
          in_fan[static_cast<std::size_t>(w)] = 1;
          grew = true;
          break;
        }
      }
    }
    const int c = free_color(u);
    const int d = free_color(fan.back());
    // Invert the cd path starting at u.
    if (!is_free(u, d)) {
      std::vector<std::pair<int, int>> path;
      int cur = u, want = d, prev = -1;
      for (;;) {
        int next = -1;
        for (int w : adj_[static_cast<std::size_t>(cur)])
          if (w != prev && color(cur, w) == want) {
            next = w;
            break;
          }
        if (next < 0) break;
        path.emplace_back(cur, next);
        prev = cur;
        cur = next;
        want = want == d ? c : d;
      }
      for (auto [a, b] : path) set_color(a, b, color(a, b) == d ? c : d);
    }
    // First fan vertex w with d free whose prefix is still a fan.
    std::size_t w = 0;
    for (; w < fan.size(); ++w) {
      if (w > 0 && !is_free(fan[w - 1], color(u, fan[w]))) {
        w = fan.size();
        break;
      }
      if (is_free(fan[w], d)) break;
    }
    if (w == fan.size()) throw std::logic_error("fan rotation failed");
    for (std::size_t k = 0; k < w; ++k) set_color(u, fan[k], color(u, fan[k + 1]));
    set_color(u, fan[w], d);
  }

 private:
  int n_, colors_;
  std::vector<int> color_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

std::vector<std::vector<Edge>> edge_color_layers(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> norm;
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("bad edge");
    norm.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end()) throw std::invalid_argument("repeated edge");
  if (norm.empty()) return {};
  if (n > 2 && norm.size() == static_cast<std::size_t>(n * (n - 1) / 2)) return round_robin(n);

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : norm) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  const int colors = *std::max_element(degree.begin(), degree.end()) + 1;
  MisraGries mg(n, colors);
  for (auto [a, b] : norm) mg.add_edge(a, b);
  for (auto [a, b] : norm) mg.color_edge(a, b);
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(colors));
  for (auto [a, b] : norm) layers[static_cast<std::size_t>(mg.color(a, b))].emplace_back(a, b);
  layers.erase(std::remove_if(layers.begin(), layers.end(), [](const auto& l) { return l.empty(); }), layers.end());
  return layers;
}

}  // namespace eqshadow
