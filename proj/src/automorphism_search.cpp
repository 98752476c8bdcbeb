#include "cca/automorphism_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "cca/errors.hpp"

namespace cca {
namespace {

bool maps_edges(const ColouredGraph& g, const Permutation& p, bool check_colour) {
  if (p.degree() != g.vertex_count()) {
    throw std::invalid_argument("permutation degree " + std::to_string(p.degree()) +
                                " differs from vertex count " +
                                std::to_string(g.vertex_count()));
  }
  for (const auto& e : g.edges()) {
    ColourId c = g.colour(p(e.u), p(e.v));
    if (c == kNoEdge) return false;
    if (check_colour && c != e.colour) return false;
  }
  return true;
}

constexpr Vertex kUnassigned = static_cast<Vertex>(-1);

class Backtracker {
 public:
  Backtracker(const ColouredGraph& g, const AutSearchOptions& options)
      : g_(g), options_(options), n_(g.vertex_count()) {
    // BFS order from vertex 0, with the colour of each tree edge and the
    // neighbours placed before each vertex.
    std::vector<bool> seen(n_, false);
    order_.push_back(0);
    seen[0] = true;
    parent_.push_back(kUnassigned);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (Vertex w : g.neighbours(order_[head])) {
        if (seen[w]) continue;
        seen[w] = true;
        order_.push_back(w);
        parent_.push_back(order_[head]);
      }
    }
    if (order_.size() != n_) throw std::invalid_argument("graph is not connected");
    std::vector<std::size_t> position(n_);
    for (std::size_t k = 0; k < n_; ++k) position[order_[k]] = k;
    earlier_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      for (Vertex w : g.neighbours(order_[k])) {
        if (position[w] < k && w != parent_[k]) earlier_[k].push_back(w);
      }
    }
    image_.assign(n_, kUnassigned);
    used_.assign(n_, false);
  }

  AutGroupResult run() {
    auto start = std::chrono::steady_clock::now();
    if (n_ == 0) return {};
    for (Vertex t = 0; t < n_; ++t) {
      if (options_.fix_root && t != 0) break;
      if (g_.degree(t) != g_.degree(0)) continue;
      place(0, t);
      descend(1);
      unplace(0, t);
    }
    std::sort(result_.elements.begin(), result_.elements.end());
    result_.stats.millis = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return std::move(result_);
  }

 private:
  void place(std::size_t k, Vertex t) {
    image_[order_[k]] = t;
    used_[t] = true;
    ++result_.stats.nodes;
  }
  void unplace(std::size_t k, Vertex t) {
    image_[order_[k]] = kUnassigned;
    used_[t] = false;
  }

  bool consistent(std::size_t k, Vertex t) const {
    Vertex v = order_[k];
    if (g_.degree(t) != g_.degree(v)) return false;
    for (Vertex w : earlier_[k]) {
      if (g_.colour(t, image_[w]) != g_.colour(v, w)) return false;
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == n_) {
      Permutation p = Permutation::unchecked(image_);
      if (!is_colour_preserving(g_, p)) return;
      if (result_.elements.size() >= options_.max_results) {
        throw CapExceeded("automorphism count", options_.max_results);
      }
      result_.elements.push_back(std::move(p));
      return;
    }
    Vertex v = order_[k];
    Vertex pimg = image_[parent_[k]];
    ColourId want = g_.colour(parent_[k], v);
    for (Vertex t : g_.neighbours(pimg)) {
      if (used_[t] || g_.colour(pimg, t) != want || !consistent(k, t)) continue;
      place(k, t);
      descend(k + 1);
      unplace(k, t);
    }
  }

  const ColouredGraph& g_;
  AutSearchOptions options_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  AutGroupResult result_;
};

}  // namespace

bool is_colour_preserving(const ColouredGraph& g, const Permutation& p) {
  return maps_edges(g, p, true);
}

bool is_graph_automorphism(const ColouredGraph& g, const Permutation& p) {
  return maps_edges(g, p, false);
}

AutGroupResult colour_preserving_automorphisms(const ColouredGraph& g,
                                               const AutSearchOptions& options) {
  return Backtracker(g, options).run();
}

std::vector<Permutation> generating_subset(const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  if (elements.empty()) return gens;
  std::unordered_set<Permutation> reached{Permutation::identity(elements[0].degree())};
  for (const auto& p : elements) {
    if (reached.count(p)) continue;
    gens.push_back(p);
    // Re-close: new elements are products of reached elements and generators.
    std::vector<Permutation> frontier(reached.begin(), reached.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& s : gens) {
          Permutation y = x * s;
          if (reached.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    if (reached.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace cca
