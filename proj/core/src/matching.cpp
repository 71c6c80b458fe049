#include "deltatour/matching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace deltatour {

WeightedGraph WeightedGraph::complete(const std::vector<std::vector<Rational>>& w) {
  WeightedGraph g;
  g.vertex_count = static_cast<int>(w.size());
  for (int i = 0; i < g.vertex_count; ++i)
    for (int j = i + 1; j < g.vertex_count; ++j) g.edges.emplace_back(i, j, w[i][j]);
  return g;
}

std::vector<std::vector<Rational>> WeightedGraph::dense() const {
  std::vector<std::vector<Rational>> w(vertex_count, std::vector<Rational>(vertex_count, Rational(0)));
  std::vector<std::vector<bool>> seen(vertex_count, std::vector<bool>(vertex_count, false));
  for (auto& [u, v, wt] : edges) {
    w[u][v] = w[v][u] = wt;
    seen[u][v] = seen[v][u] = true;
  }
  for (int i = 0; i < vertex_count; ++i)
    for (int j = 0; j < vertex_count; ++j)
      if (i != j && !seen[i][j]) throw std::invalid_argument("weighted graph: not complete");
  return w;
}

bool WeightedGraph::is_complete() const {
  return static_cast<long>(edges.size()) == static_cast<long>(vertex_count) * (vertex_count - 1) / 2;
}

Rational matching_weight(const std::vector<std::vector<Rational>>& w, const std::vector<Edge>& m) {
  Rational total(0);
  for (auto [u, v] : m) total += w[u][v];
  return total;
}

std::vector<Edge> matching_by_subset_dp(const std::vector<std::vector<Rational>>& w) {
  int n = static_cast<int>(w.size());
  if (n % 2 != 0) throw std::invalid_argument("matching: odd vertex count");
  if (n == 0) return {};
  if (n > 24) throw std::invalid_argument("matching DP: too many vertices");

  int full = (1 << n) - 1;
  std::vector<Rational> dp(full + 1, Rational(0));
  std::vector<int> choice(full + 1, -1);
  std::vector<bool> ready(full + 1, false);
  ready[0] = true;

  for (int mask = 1; mask <= full; ++mask) {
    int bits = __builtin_popcount(static_cast<unsigned>(mask));
    if (bits % 2 != 0) continue;
    int i = __builtin_ctz(static_cast<unsigned>(mask));
    bool first = true;
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (1 << j))) continue;
      int rest = mask & ~(1 << i) & ~(1 << j);
      Rational cand = dp[rest] + w[i][j];
      if (first || cand < dp[mask]) {
        dp[mask] = cand;
        choice[mask] = j;
        first = false;
      }
    }
    ready[mask] = true;
  }

  std::vector<Edge> out;
  int mask = full;
  while (mask) {
    int i = __builtin_ctz(static_cast<unsigned>(mask));
    int j = choice[mask];
    out.emplace_back(i, j);
    mask &= ~(1 << i);
    mask &= ~(1 << j);
  }
  return out;
}

namespace {

// Maximum-weight maximum-cardinality matching via the blossom algorithm,
// primal-dual with exact rational duals. Dense complete input. Dual-change
// minima are recomputed by full edge scans, which keeps the bookkeeping
// small at desk scale.
class BlossomSolver {
 public:
  explicit BlossomSolver(const std::vector<std::vector<Rational>>& w) : n_(static_cast<int>(w.size())) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        ends_.push_back({i, j});
        weight_.push_back(w[i][j]);
      }
    m_ = static_cast<int>(ends_.size());
    neighbend_.assign(n_, {});
    for (int k = 0; k < m_; ++k) {
      neighbend_[ends_[k][0]].push_back(2 * k + 1);
      neighbend_[ends_[k][1]].push_back(2 * k);
    }
    Rational maxweight(0);
    for (auto& wt : weight_) maxweight = max(maxweight, wt);

    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n_, -1);
    blossombase_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) blossombase_[v] = v;
    blossomchilds_.assign(2 * n_, {});
    blossomendps_.assign(2 * n_, {});
    for (int b = n_; b < 2 * n_; ++b) unused_.push_back(b);
    dualvar_.assign(2 * n_, Rational(0));
    for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(m_, false);
  }

  std::vector<int> solve() {
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          assert(label_[inblossom_[v]] == 1);
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint(p);
            if (inblossom_[v] == inblossom_[w]) continue;
            if (!allowedge_[k] && slack(k) <= Rational(0)) allowedge_[k] = true;
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                assert(label_[inblossom_[w]] == 2);
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            }
          }
        }
        if (augmented) break;

        // No more progress on tight edges: adjust duals.
        int deltatype = -1;
        Rational delta(0);
        int deltaedge = -1, deltablossom = -1;
        for (int k = 0; k < m_; ++k) {
          int bi = inblossom_[ends_[k][0]], bj = inblossom_[ends_[k][1]];
          if (bi == bj) continue;
          int li = label_[bi], lj = label_[bj];
          if ((li == 1 && lj == 0) || (li == 0 && lj == 1)) {
            Rational s = slack(k);
            if (deltatype == -1 || s < delta) {
              delta = s;
              deltatype = 2;
              deltaedge = k;
            }
          } else if (li == 1 && lj == 1) {
            Rational s = slack(k) / Rational(2);
            if (deltatype == -1 || s < delta) {
              delta = s;
              deltatype = 3;
              deltaedge = k;
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2) {
            if (deltatype == -1 || dualvar_[b] < delta) {
              delta = dualvar_[b];
              deltatype = 4;
              deltablossom = b;
            }
          }
        }
        if (deltatype == -1) {
          // Maximum cardinality reached.
          deltatype = 1;
          Rational mind = dualvar_[0];
          for (int v = 0; v < n_; ++v) mind = min(mind, dualvar_[v]);
          delta = max(Rational(0), mind);
        }

        for (int v = 0; v < n_; ++v) {
          int l = label_[inblossom_[v]];
          if (l == 1)
            dualvar_[v] -= delta;
          else if (l == 2)
            dualvar_[v] += delta;
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = ends_[deltaedge][0], j = ends_[deltaedge][1];
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          assert(label_[inblossom_[i]] == 1);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(ends_[deltaedge][0]);
        } else if (deltatype == 4) {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;

      // Stage cleanup: expanded zero-dual S-blossoms dissolve.
      for (int b = n_; b < 2 * n_; ++b)
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 1 && dualvar_[b].is_zero())
          expand_blossom(b, true);
    }

    std::vector<int> partner(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (mate_[v] >= 0) partner[v] = endpoint(mate_[v]);
    return partner;
  }

 private:
  int endpoint(int p) const { return ends_[p / 2][p % 2]; }
  Rational slack(int k) const {
    return dualvar_[ends_[k][0]] + dualvar_[ends_[k][1]] - Rational(2) * weight_[k];
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) blossom_leaves(t, out);
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    if (t == 1) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      for (int leaf : leaves) queue_.push_back(leaf);
    } else {
      int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint(mate_[base]), 1, mate_[base] ^ 1);
    }
  }

  // Trace back from both sides; returns the base vertex of the first common
  // ancestor blossom, or -1 when the paths reach two distinct roots.
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      assert(label_[b] == 1);
      path.push_back(b);
      label_[b] |= 4;
      assert(labelend_[b] == mate_[blossombase_[b]]);
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint(labelend_[b]);
        b = inblossom_[v];
        assert(label_[b] == 2);
        assert(labelend_[b] >= 0);
        v = endpoint(labelend_[b]);
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] &= ~4;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = ends_[k][0], w = ends_[k][1];
    int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;

    std::vector<int> path, endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      assert(label_[bv] == 2 || (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
      assert(labelend_[bv] >= 0);
      v = endpoint(labelend_[bv]);
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      assert(label_[bw] == 2 || (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
      assert(labelend_[bw] >= 0);
      w = endpoint(labelend_[bw]);
      bw = inblossom_[w];
    }

    assert(label_[bb] == 1);
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = Rational(0);
    blossomchilds_[b] = std::move(path);
    blossomendps_[b] = std::move(endps);

    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);

    int len = static_cast<int>(blossomchilds_[b].size());
    int i = 0;
    while (blossomchilds_[b][i] != t) ++i;
    int j = i, jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = blossomchilds_[b][wrap(j, len)];
      int p = blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint(p));
      j += jstep;
      t = blossomchilds_[b][wrap(j, len)];
      if (t >= n_) augment_blossom(t, endpoint(p ^ 1));
      mate_[endpoint(p)] = p ^ 1;
      mate_[endpoint(p ^ 1)] = p;
    }
    std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i, blossomchilds_[b].end());
    std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i, blossomendps_[b].end());
    blossombase_[b] = blossombase_[blossomchilds_[b][0]];
    assert(blossombase_[b] == v);
  }

  void augment_matching(int k) {
    int v = ends_[k][0], w = ends_[k][1];
    for (auto [s, p] : {std::pair<int, int>{v, 2 * k + 1}, std::pair<int, int>{w, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        assert(label_[bs] == 1);
        assert(labelend_[bs] == mate_[blossombase_[bs]]);
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint(labelend_[bs]);
        int bt = inblossom_[t];
        assert(label_[bt] == 2);
        assert(labelend_[bt] >= 0);
        s = endpoint(labelend_[bt]);
        int j = endpoint(labelend_[bt] ^ 1);
        assert(blossombase_[bt] == t);
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s].is_zero()) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        blossom_leaves(s, leaves);
        for (int v : leaves) inblossom_[v] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      assert(labelend_[b] >= 0);
      int entrychild = inblossom_[endpoint(labelend_[b] ^ 1)];
      int len = static_cast<int>(blossomchilds_[b].size());
      int j = 0;
      while (blossomchilds_[b][j] != entrychild) ++j;
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint(p ^ 1)] = 0;
        label_[endpoint(blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick ^ 1)] = 0;
        assign_label(endpoint(p ^ 1), 2, p);
        allowedge_[blossomendps_[b][wrap(j - endptrick, len)] / 2] = true;
        j += jstep;
        p = blossomendps_[b][wrap(j - endptrick, len)] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = blossomchilds_[b][0];
      label_[endpoint(p ^ 1)] = label_[bv] = 2;
      labelend_[endpoint(p ^ 1)] = labelend_[bv] = p;
      j += jstep;
      while (blossomchilds_[b][wrap(j, len)] != entrychild) {
        int bw = blossomchilds_[b][wrap(j, len)];
        if (label_[bw] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        blossom_leaves(bw, leaves);
        int labeled = -1;
        for (int v2 : leaves)
          if (label_[v2] != 0) {
            labeled = v2;
            break;
          }
        if (labeled >= 0) {
          assert(label_[labeled] == 2);
          assert(inblossom_[labeled] == bw);
          label_[labeled] = 0;
          label_[endpoint(mate_[blossombase_[bw]])] = 0;
          assign_label(labeled, 2, labelend_[labeled]);
        }
        j += jstep;
      }
    }

    label_[b] = -1;
    labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    unused_.push_back(b);
  }

  int n_, m_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<Rational> weight_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> unused_;
  std::vector<Rational> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<Edge> matching_by_blossom(const std::vector<std::vector<Rational>>& w) {
  int n = static_cast<int>(w.size());
  if (n % 2 != 0) throw std::invalid_argument("matching: odd vertex count");
  if (n == 0) return {};

  // Minimum-weight perfect == maximum-weight matching after flipping weights
  // around a constant large enough to force full cardinality.
  Rational shift(0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) shift = max(shift, w[i][j]);
  shift += Rational(1);
  std::vector<std::vector<Rational>> flipped(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) flipped[i][j] = shift - w[i][j];

  BlossomSolver solver(flipped);
  std::vector<int> partner = solver.solve();
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    if (partner[v] == -1) throw std::logic_error("blossom: matching is not perfect");
    if (v < partner[v]) out.emplace_back(v, partner[v]);
  }
  return out;
}

std::vector<Edge> min_weight_perfect_matching(const WeightedGraph& wg) {
  if (wg.vertex_count % 2 != 0) throw std::invalid_argument("matching: odd vertex count");
  auto w = wg.dense();
  if (wg.vertex_count < 12) return matching_by_subset_dp(w);
  return matching_by_blossom(w);
}

}  // namespace deltatour
