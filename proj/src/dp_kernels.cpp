#include "para/dp_kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "para/parallel.hpp"

namespace para::dp {

i64 knapsack(const KnapsackInstance& inst, const ExecPolicy& pol) {
  const i64 W = inst.capacity;
  const int n = inst.n();
  // Rows have a one-step lifetime, so row i lives at index i mod 2.
  std::vector<i64> rows[2];
  rows[0].assign(static_cast<size_t>(W) + 1, 0);
  rows[1].assign(static_cast<size_t>(W) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const i64* prev = rows[(i - 1) % 2].data();
    i64* cur = rows[i % 2].data();
    const i64 wi = inst.w[i - 1];
    const i64 vi = inst.v[i - 1];
    par_for(1, W + 1, pol, [&](i64 j) {
      cur[j] = (wi <= j) ? std::max(prev[j], vi + prev[j - wi]) : prev[j];
    });
  }
  return rows[n % 2][static_cast<size_t>(W)];
}

DenseMatrix floyd_warshall(DenseMatrix m, const ExecPolicy& pol) {
  const int n = m.n;
  for (int k = 0; k < n; ++k) {
    const i64* row_k = m.row(k);
    par_for(0, n, pol, [&](i64 i) {
      i64* row_i = m.row(i);
      const i64 d_ik = row_i[k];
      if (is_inf(d_ik)) return;
      for (int j = 0; j < n; ++j) {
        // Store only on strict improvement; row k then never gets written
        // during step k, so concurrent rows may read it freely.
        const i64 alt = sat_add(d_ik, row_k[j]);
        if (alt < row_i[j]) row_i[j] = alt;
      }
    });
  }
  return m;
}

FloodResult berge_flood(const FloodingInstance& inst, const ExecPolicy& pol) {
  const int n = inst.n();
  std::vector<i64> buf[2];
  buf[0] = inst.ceiling;
  buf[1].assign(n, 0);
  int sweeps = 0;
  for (;;) {
    ++sweeps;
    const std::vector<i64>& old = buf[(sweeps + 1) % 2];
    std::vector<i64>& neu = buf[sweeps % 2];
    par_for(0, n, pol, [&](i64 i) {
      const i64* vrow = inst.valuation.row(static_cast<int>(i));
      i64 t = old[i];
      for (int j = 0; j < n; ++j) t = std::min(t, std::max(vrow[j], old[j]));
      neu[i] = t;
    });
    if (neu == old) break;
  }
  return {buf[sweeps % 2], sweeps};
}

namespace {

// Table cell type; lengths fit well below 2^31.
using Cell = std::int32_t;

i64 lcs_sequential(const Sequence& s, const Sequence& t) {
  const i64 n = s.n(), m = t.n();
  if (n == 0 || m == 0) return 0;
  std::vector<Cell> c(static_cast<size_t>(n + 1) * (m + 1), 0);
  const i64 stride = m + 1;
  for (i64 i = 1; i <= n; ++i)
    for (i64 j = 1; j <= m; ++j) {
      if (s.items[i - 1] == t.items[j - 1])
        c[i * stride + j] = c[(i - 1) * stride + (j - 1)] + 1;
      else
        c[i * stride + j] = std::max(c[i * stride + (j - 1)], c[(i - 1) * stride + j]);
    }
  return c.back();
}

i64 lcs_skewed(const Sequence& s, const Sequence& t, const ExecPolicy& pol) {
  const i64 n = s.n(), m = t.n();
  if (n == 0 || m == 0) return 0;
  std::vector<Cell> c(static_cast<size_t>(n + 1) * (m + 1), 0);
  const i64 stride = m + 1;
  Cell* cells = c.data();
  // Cells on one anti-diagonal i+j=k depend only on diagonals k-1 and k-2,
  // so each diagonal is a parallel loop over the full 2-D table.
  for (i64 k = 2; k <= n + m; ++k) {
    const i64 ilo = std::max<i64>(1, k - m);
    const i64 ihi = std::min<i64>(n, k - 1);
    par_for(ilo, ihi + 1, pol, [&, k](i64 i) {
      const i64 j = k - i;
      if (s.items[i - 1] == t.items[j - 1])
        cells[i * stride + j] = cells[(i - 1) * stride + (j - 1)] + 1;
      else
        cells[i * stride + j] =
            std::max(cells[i * stride + (j - 1)], cells[(i - 1) * stride + j]);
    });
  }
  return c.back();
}

i64 lis_sequential(const Sequence& a) {
  const i64 n = a.n();
  if (n == 0) return 0;
  std::vector<i64> ls(n, 1);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < i; ++j)
      if (a.items[i] > a.items[j]) ls[i] = std::max(ls[i], ls[j] + 1);
  return *std::max_element(ls.begin(), ls.end());
}

}  // namespace

i64 lcs(const Sequence& s, const Sequence& t, const ExecPolicy& pol) {
  return pol.parallel() ? lcs_skewed(s, t, pol) : lcs_sequential(s, t);
}

i64 lis_at_cut(const Sequence& a, i64 cut, const ExecPolicy& pol) {
  const i64 n = a.n();
  if (cut < 1 || cut >= n) throw std::invalid_argument("lis_at_cut: cut must be in [1, n)");
  const i64* v = a.items.data();
  // ls[i] holds the prefix length l_i for i < cut, the suffix length s_i
  // (later overwritten by the crossing length d_i) for i >= cut.
  std::vector<i64> ls(n, 1);
  par_sections2(
      [&] {
        for (i64 i = 0; i < cut; ++i)
          for (i64 j = 0; j < i; ++j)
            if (v[i] > v[j]) ls[i] = std::max(ls[i], ls[j] + 1);
      },
      [&] {
        for (i64 i = n - 1; i >= cut; --i)
          for (i64 j = n - 1; j > i; --j)
            if (v[i] < v[j]) ls[i] = std::max(ls[i], ls[j] + 1);
      },
      pol);
  // Crossing lengths: best prefix ending below a[i] extended by the suffix
  // starting at a[i]. Each i only reads the prefix half and writes ls[i].
  par_for(cut, n, pol, [&](i64 i) {
    const i64 si = ls[i];
    for (i64 j = 0; j < cut; ++j)
      if (v[i] > v[j]) ls[i] = std::max(ls[i], ls[j] + si);
  });
  return *std::max_element(ls.begin(), ls.end());
}

i64 lis(const Sequence& a, const ExecPolicy& pol) {
  if (!pol.parallel() || a.n() < 3) return lis_sequential(a);
  return lis_at_cut(a, a.n() / 2, pol);
}

}  // namespace para::dp
