#include "ghoststrata/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "ghoststrata/canonical.hpp"
#include "ghoststrata/errors.hpp"

namespace ghoststrata {

namespace {

struct Slot {
  VertexId u, v;  // u <= v
};

// Assigns multiplicities to vertex-pair slots in row-major order. A vertex's
// degree is final once its row is done, which drives the pruning: degrees
// must be non-increasing along the labelling (every class has such a
// labelling) and large enough for the family.
class SlotFiller {
 public:
  SlotFiller(std::size_t n, std::size_t m, const GraphFamily& family,
             std::map<std::string, Multigraph>& out)
      : n_(n), m_(m), family_(family), out_(out), degree_(n, 0) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u; v < n; ++v)
        if (u != v || family.allow_loops) slots_.push_back({u, v});
    counts_.assign(slots_.size(), 0);
    min_degree_ = family.allow_bridges ? 1 : 2;
    if (n == 1) min_degree_ = 0;
  }

  void run() { fill(0, m_); }

 private:
  void fill(std::size_t i, std::size_t remaining) {
    if (i > 0 && !row_ok(i)) return;
    if (deficit(i) > 2 * remaining) return;
    if (i == slots_.size()) {
      if (remaining == 0) emit();
      return;
    }
    const auto [u, v] = slots_[i];
    for (std::size_t c = 0; c <= remaining; ++c) {
      counts_[i] = c;
      degree_[u] += (u == v ? 2 : 1) * c;
      degree_[v] += (u == v ? 0 : 1) * c;
      fill(i + 1, remaining - c);
      degree_[u] -= (u == v ? 2 : 1) * c;
      degree_[v] -= (u == v ? 0 : 1) * c;
    }
    counts_[i] = 0;
  }

  // Checks the row that was completed by slot i-1, if any.
  bool row_ok(std::size_t i) const {
    const VertexId done = slots_[i - 1].u;
    if (i < slots_.size() && slots_[i].u == done) return true;
    if (degree_[done] < min_degree_) return false;
    return done == 0 || degree_[done] <= degree_[done - 1];
  }

  // Half-edges still needed by vertices below the minimum degree.
  std::size_t deficit(std::size_t i) const {
    const VertexId first_open = i < slots_.size() ? slots_[i].u : static_cast<VertexId>(n_);
    std::size_t need = 0;
    for (VertexId v = first_open; v < n_; ++v)
      if (degree_[v] < min_degree_) need += min_degree_ - degree_[v];
    return need;
  }

  void emit() {
    std::vector<EdgeEnds> edges;
    for (std::size_t i = 0; i < slots_.size(); ++i)
      for (std::size_t c = 0; c < counts_[i]; ++c) edges.push_back({slots_[i].u, slots_[i].v});
    for (VertexId v = 0; v < n_; ++v) {
      if (degree_[v] < min_degree_) return;
      if (v > 0 && degree_[v] > degree_[v - 1]) return;
    }
    try {
      Multigraph g(n_, std::move(edges));
      if (!family_.allow_bridges && !separating_edges(g).empty()) return;
      auto form = canonical_form(g, {}, n_);
      if (out_.contains(form.code)) return;
      auto canonical = relabel(g, form.order).graph;
      out_.emplace(std::move(form.code), std::move(canonical));
    } catch (const std::invalid_argument&) {
      // disconnected
    }
  }

  std::size_t n_, m_;
  const GraphFamily& family_;
  std::map<std::string, Multigraph>& out_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> degree_;
  std::size_t min_degree_;
};

}  // namespace

std::vector<Multigraph> enumerate_graphs(std::size_t max_edges, const GraphFamily& family) {
  if (max_edges > kMaxEnumeratedEdges)
    throw BoundExceeded("graph enumeration: max_edges " + std::to_string(max_edges) +
                        " exceeds bound " + std::to_string(kMaxEnumeratedEdges));
  struct Keyed {
    std::size_t edges, vertices;
    std::string code;
    Multigraph graph;
  };
  std::vector<Keyed> all;
  for (std::size_t m = family.min_edges; m <= max_edges; ++m) {
    // Connected needs n <= m + 1; bridgeless with n >= 2 needs n <= m.
    const std::size_t max_n = family.allow_bridges ? m + 1 : std::max<std::size_t>(m, 1);
    for (std::size_t n = std::max<std::size_t>(family.min_vertices, 1); n <= max_n; ++n) {
      std::map<std::string, Multigraph> classes;
      SlotFiller(n, m, family, classes).run();
      for (auto& [code, g] : classes) all.push_back({m, n, code, std::move(g)});
    }
  }
  std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.edges, a.vertices, a.code) < std::tie(b.edges, b.vertices, b.code);
  });
  std::vector<Multigraph> out;
  for (auto& k : all) out.push_back(std::move(k.graph));
  return out;
}

std::vector<Multigraph> enumerate_base_graphs(std::size_t max_edges) {
  return enumerate_graphs(max_edges, GraphFamily{});
}

}  // namespace ghoststrata
