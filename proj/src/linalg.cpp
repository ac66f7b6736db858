#include "ghoststrata/linalg.hpp"

#include <stdexcept>

#include "ghoststrata/arith.hpp"

namespace ghoststrata {

namespace {

// Row-reduces `a` in place; returns pivot columns in order.
std::vector<std::size_t> eliminate(std::vector<Row>& a, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    const std::uint64_t inv = inverse_mod(a[r][c], p);
    for (auto& x : a[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + (p - f) * a[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(std::vector<Row> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  for (auto& r : rows)
    for (auto& x : r) x %= p;
  return eliminate(rows, cols, p).size();
}

std::optional<std::vector<std::uint32_t>> solve_in_span(const std::vector<Row>& rows, const Row& target,
                                                        std::uint32_t p) {
  // Solve A^T c = target by reducing the augmented system [A^T | target].
  const auto n = rows.size();
  const auto len = target.size();
  for (const auto& r : rows)
    if (r.size() != len) throw std::invalid_argument("ragged matrix");
  std::vector<Row> sys(len, Row(n + 1, 0));
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t i = 0; i < n; ++i) sys[j][i] = rows[i][j] % p;
    sys[j][n] = target[j] % p;
  }
  const auto pivots = eliminate(sys, n + 1, p);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<std::uint32_t> c(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = sys[r][n];
  return c;
}

}  // namespace ghoststrata
