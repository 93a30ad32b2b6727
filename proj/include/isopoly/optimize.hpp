#pragma once

#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isopoly/limits.hpp"
#include "isopoly/permutation.hpp"
#include "isopoly/rational.hpp"
#include "isopoly/tensor.hpp"

namespace isopoly {

enum class Method { exhaustive, branch_and_bound };

inline const char* method_name(Method m) {
  return m == Method::exhaustive ? "exhaustive" : "branch_and_bound";
}

/// Exact optimum over a vertex set, with the lexicographically smallest
/// witness among all optima. `pi` is set for psi_{n,n} results only.
struct OptResult {
  Rational value;
  Permutation sigma;
  std::optional<Permutation> pi;
  long long nodes_explored = 0;
  Method method = Method::exhaustive;
};

/// Inner linearization: for fixed sigma, <W, P (x) Q> is linear in Q with
/// coefficients c(s,t) = sum_i W(i, sigma(i), s, t).
inline MatrixXr q_coefficients(const ObjectiveTensor& w, const Permutation& sigma) {
  require_same_dim(w.dim(), sigma.size(), "q_coefficients");
  const int n = w.dim();
  MatrixXr c = MatrixXr::Zero(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Rational acc = 0;
      for (int i = 0; i < n; ++i) acc += w(i, sigma(i), s, t);
      c(s, t) = acc;
    }
  return c;
}

namespace detail {

// Subset DP over column sets: d[mask] is the best assignment of the last
// popcount(mask) rows to the columns in mask. Exact on rationals; O(2^n n).
inline std::vector<Rational> lap_table(const MatrixXr& c) {
  const int n = static_cast<int>(c.rows());
  if (n > 24) throw std::invalid_argument("lap_max: dimension too large for subset DP");
  std::vector<Rational> d(static_cast<std::size_t>(1) << n, Rational(0));
  for (unsigned mask = 1; mask < d.size(); ++mask) {
    const int cnt = __builtin_popcount(mask);
    const int row = n - cnt;
    bool first = true;
    Rational best = 0;
    for (int t = 0; t < n; ++t) {
      if (!(mask & (1u << t))) continue;
      const Rational cand = c(row, t) + d[mask & ~(1u << t)];
      if (first || cand > best) {
        best = cand;
        first = false;
      }
    }
    d[mask] = best;
  }
  return d;
}

}  // namespace detail

struct LapResult {
  Rational value;
  Permutation pi;
};

/// Maximum of sum_s C(s, pi(s)) over all permutations pi. The witness is the
/// lexicographically smallest argmax: each row greedily takes the smallest
/// column that still completes to the optimum.
inline LapResult lap_max(const MatrixXr& c) {
  require_square(c, "lap_max");
  const int n = static_cast<int>(c.rows());
  const auto d = detail::lap_table(c);
  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  unsigned mask = full;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (!(mask & (1u << t))) continue;
      if (c(s, t) + d[mask & ~(1u << t)] == d[mask]) {
        image[static_cast<std::size_t>(s)] = t;
        mask &= ~(1u << t);
        break;
      }
    }
  }
  return LapResult{d[full], Permutation::from_image(std::move(image))};
}

/// Optimum value only; used in the hot loop of psi_nn_max.
inline Rational lap_value(const MatrixXr& c) {
  require_square(c, "lap_value");
  const auto d = detail::lap_table(c);
  return d.back();
}

namespace detail {

// <W, P (x) P> at the diagonal vertex of sigma.
inline Rational diag_value(const ObjectiveTensor& w, const Permutation& sigma) {
  Rational acc = 0;
  const int n = w.dim();
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s) acc += w(i, sigma(i), s, sigma(s));
  return acc;
}

struct ChunkBest {
  bool any = false;
  Rational value;
  Permutation sigma = Permutation::identity(0);
  long long count = 0;
};

// Evaluates eval(sigma) for every permutation with sigma(0) = first, in
// lexicographic order, keeping the first strict maximum.
template <typename Eval>
ChunkBest best_in_chunk(int n, int first, Eval&& eval) {
  ChunkBest out;
  std::vector<int> tail;
  tail.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 0; v < n; ++v)
    if (v != first) tail.push_back(v);
  std::vector<int> img(static_cast<std::size_t>(n));
  img[0] = first;
  do {
    for (int k = 1; k < n; ++k) img[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k - 1)];
    Permutation sigma = Permutation::from_image(img);
    Rational v = eval(sigma);
    ++out.count;
    if (!out.any || v > out.value) {
      out.any = true;
      out.value = std::move(v);
      out.sigma = std::move(sigma);
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

// Partitions the n! permutations by sigma(0), runs the chunks (possibly on a
// thread pool) and folds the results in chunk order. The fold keeps the
// earlier chunk on ties, so the overall witness is the lexicographically
// smallest argmax and parallel runs are bit-identical to sequential ones.
template <typename Eval>
ChunkBest best_over_permutations(int n, int threads, Eval&& eval) {
  if (n == 1) {
    ChunkBest out;
    out.any = true;
    out.sigma = Permutation::identity(1);
    out.value = eval(out.sigma);
    out.count = 1;
    return out;
  }
  std::vector<ChunkBest> results(static_cast<std::size_t>(n));
  if (threads > 1) {
    std::vector<std::future<ChunkBest>> futs;
    futs.reserve(static_cast<std::size_t>(n));
    for (int first = 0; first < n; ++first)
      futs.push_back(std::async(std::launch::async,
                                [&, first] { return best_in_chunk(n, first, eval); }));
    for (int first = 0; first < n; ++first) results[static_cast<std::size_t>(first)] = futs[static_cast<std::size_t>(first)].get();
  } else {
    for (int first = 0; first < n; ++first)
      results[static_cast<std::size_t>(first)] = best_in_chunk(n, first, eval);
  }
  ChunkBest acc;
  for (auto& r : results) {
    acc.count += r.count;
    if (r.any && (!acc.any || r.value > acc.value)) {
      acc.any = true;
      acc.value = std::move(r.value);
      acc.sigma = std::move(r.sigma);
    }
  }
  return acc;
}

// Branch and bound over prefix assignments of sigma. The bound replaces each
// contribution with an undetermined index by a precomputed maximum over all
// images, which over-approximates the true maximum over the still-feasible
// ones and is therefore admissible. Positions branch in order, values
// ascending, and subtrees are cut only when they cannot strictly improve, so
// the incumbent ends as the lexicographically smallest argmax.
inline OptResult psi_n_branch_and_bound(const ObjectiveTensor& w) {
  const int n = w.dim();
  std::vector<Rational> rowmax(static_cast<std::size_t>(n) * n * n);  // [i][j][s]: max over t
  std::vector<Rational> colmax(static_cast<std::size_t>(n) * n * n);  // [i][s][t]: max over j
  std::vector<Rational> pairmax(static_cast<std::size_t>(n) * n);     // [i][s]: max over j,t
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s) {
      bool pfirst = true;
      for (int j = 0; j < n; ++j) {
        const std::size_t r = (static_cast<std::size_t>(i) * n + j) * n + s;
        for (int t = 0; t < n; ++t) {
          const Rational& v = w(i, j, s, t);
          if (t == 0 || v > rowmax[r]) rowmax[r] = v;
          const std::size_t cidx = (static_cast<std::size_t>(i) * n + s) * n + t;
          if (j == 0 || v > colmax[cidx]) colmax[cidx] = v;
          const std::size_t p = static_cast<std::size_t>(i) * n + s;
          if (pfirst || v > pairmax[p]) {
            pairmax[p] = v;
            pfirst = false;
          }
        }
      }
    }

  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Rational> exact_stack(static_cast<std::size_t>(n) + 1, Rational(0));
  bool any = false;
  Rational best = 0;
  Permutation best_sigma = Permutation::identity(n);
  long long nodes = 0;

  auto bound_rest = [&](int k) {
    Rational b = 0;
    for (int i = 0; i < k; ++i)
      for (int s = k; s < n; ++s)
        b += rowmax[(static_cast<std::size_t>(i) * n + img[static_cast<std::size_t>(i)]) * n + s];
    for (int i = k; i < n; ++i) {
      for (int s = 0; s < k; ++s)
        b += colmax[(static_cast<std::size_t>(i) * n + s) * n + img[static_cast<std::size_t>(s)]];
      for (int s = k; s < n; ++s) b += pairmax[static_cast<std::size_t>(i) * n + s];
    }
    return b;
  };

  auto dfs = [&](auto&& self, int k) -> void {
    ++nodes;
    if (k == n) {
      if (!any || exact_stack[static_cast<std::size_t>(k)] > best) {
        any = true;
        best = exact_stack[static_cast<std::size_t>(k)];
        best_sigma = Permutation::from_image(img);
      }
      return;
    }
    if (any && exact_stack[static_cast<std::size_t>(k)] + bound_rest(k) <= best) return;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      Rational delta = w(k, v, k, v);
      for (int i = 0; i < k; ++i) {
        const int vi = img[static_cast<std::size_t>(i)];
        delta += w(i, vi, k, v) + w(k, v, i, vi);
      }
      img[static_cast<std::size_t>(k)] = v;
      used[static_cast<std::size_t>(v)] = true;
      exact_stack[static_cast<std::size_t>(k) + 1] = exact_stack[static_cast<std::size_t>(k)] + delta;
      self(self, k + 1);
      img[static_cast<std::size_t>(k)] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  dfs(dfs, 0);

  return OptResult{best, best_sigma, std::nullopt, nodes, Method::branch_and_bound};
}

}  // namespace detail

/// max <W, X> over the vertices P (x) P of psi_n. Exhaustive enumeration and
/// branch and bound must return identical results, witness included.
inline OptResult psi_n_max(const ObjectiveTensor& w, Method method = Method::exhaustive,
                           int threads = 1, const Limits& lim = Limits{}) {
  require_cap(w.dim(), lim.psi_cap, "psi_n_max");
  if (method == Method::branch_and_bound) return detail::psi_n_branch_and_bound(w);
  auto best = detail::best_over_permutations(
      w.dim(), threads, [&](const Permutation& s) { return detail::diag_value(w, s); });
  return OptResult{best.value, best.sigma, std::nullopt, best.count, Method::exhaustive};
}

/// Same optimum for a simple tensor A (x) B, evaluated through the
/// O(n^2) pairing identity instead of the expanded tensor.
inline OptResult psi_n_max(const PairObjective& po, int threads = 1,
                           const Limits& lim = Limits{}) {
  require_cap(po.dim(), lim.psi_cap, "psi_n_max");
  auto best = detail::best_over_permutations(
      po.dim(), threads, [&](const Permutation& s) { return fast_pair_value(po.a, po.b, s, s); });
  return OptResult{best.value, best.sigma, std::nullopt, best.count, Method::exhaustive};
}

/// max <W, X> over all vertices P (x) Q of psi_{n,n}: outer enumeration of
/// sigma with an exact linear-assignment solve for the inner pi. The witness
/// pair takes the lexicographically smallest optimal sigma, then the lap_max
/// tie-break for pi.
inline OptResult psi_nn_max(const ObjectiveTensor& w, int threads = 1,
                            const Limits& lim = Limits{}) {
  require_cap(w.dim(), lim.psi_nn_cap, "psi_nn_max");
  auto best = detail::best_over_permutations(
      w.dim(), threads,
      [&](const Permutation& s) { return lap_value(q_coefficients(w, s)); });
  LapResult inner = lap_max(q_coefficients(w, best.sigma));
  return OptResult{best.value, best.sigma, inner.pi, best.count, Method::exhaustive};
}

}  // namespace isopoly
