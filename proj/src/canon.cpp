#include "sgw/canon.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace sgw {

int MatchedDoubleCover::cover_edge_count() const {
  return static_cast<int>((color.array() == kCover).count() / 2);
}

int MatchedDoubleCover::fiber_count() const {
  return static_cast<int>((color.array() == kFiber).count() / 2);
}

MatchedDoubleCover double_cover(const SignedGraph& g) {
  const int n = g.order();
  MatchedDoubleCover c;
  c.base_n = n;
  c.color.setConstant(2 * n, 2 * n, MatchedDoubleCover::kNone);
  for (int v = 0; v < n; ++v) {
    c.color(2 * v, 2 * v + 1) = c.color(2 * v + 1, 2 * v) = MatchedDoubleCover::kFiber;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int s = g(u, v);
      if (s == 0) continue;
      const int flip = s > 0 ? 0 : 1;
      c.color(2 * u, 2 * v + flip) = MatchedDoubleCover::kCover;
      c.color(2 * u + 1, 2 * v + (1 - flip)) = MatchedDoubleCover::kCover;
    }
  }
  return c;
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex code");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  CanonicalCode c;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    c.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return c;
}

CanonicalCode encode(const SignedGraph& g) {
  const int n = g.order();
  if (n > 254) throw std::invalid_argument("canonical codes support orders up to 254");
  CanonicalCode c;
  c.bytes.reserve(1 + (n * (n - 1) / 2 + 3) / 4);
  c.bytes.push_back(static_cast<char>(n));
  unsigned acc = 0;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int s = g(i, j);
      acc = (acc << 2) | static_cast<unsigned>(s == 0 ? 0 : (s > 0 ? 1 : 2));
      if (++used == 4) {
        c.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) c.bytes.push_back(static_cast<char>(acc << (2 * (4 - used))));
  return c;
}

SignedGraph decode(const CanonicalCode& code) {
  if (code.bytes.empty()) throw std::invalid_argument("empty canonical code");
  const int n = static_cast<unsigned char>(code.bytes[0]);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (code.bytes.size() != 1 + (pairs + 3) / 4) {
    throw std::invalid_argument("canonical code length does not match its order");
  }
  SignedGraph g(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const auto byte = static_cast<unsigned char>(code.bytes[1 + k / 4]);
      const unsigned bits = (byte >> (2 * (3 - k % 4))) & 3U;
      if (bits == 3) throw std::invalid_argument("invalid sign bits in canonical code");
      if (bits != 0) g.set_sign(i, j, bits == 1 ? 1 : -1);
    }
  }
  return g;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kNormal = INT_MAX;

// Individualization-refinement over the cover. Colors are cell ranks
// 0..k-1; the partition is discrete when k equals the vertex count. Each
// node contributes one isomorphism-invariant trace word, and leaves are
// ordered by (trace, permuted adjacency). The minimum leaf is canonical.
class CoverSearch {
 public:
  explicit CoverSearch(const SignedGraph& g) : n_(g.order()), size_(2 * g.order()) {
    const auto cover = double_cover(g);
    color_of_pair_.resize(static_cast<std::size_t>(size_) * size_);
    nbrs_.resize(size_);
    for (int x = 0; x < size_; ++x) {
      for (int y = 0; y < size_; ++y) {
        color_of_pair_[x * size_ + y] = cover.color(x, y);
        if (cover.color(x, y) == MatchedDoubleCover::kCover) nbrs_[x].push_back(y);
      }
    }
    keys_.resize(size_);
    order_.resize(size_);
  }

  SignedGraph run(CanonStats* stats) {
    if (n_ == 0) return SignedGraph(0);
    std::vector<int> color(size_, 0);
    std::uint64_t t = 0;
    const int k = refine(color, 1, t);
    trace_.push_back(t);
    dfs(color, k);
    if (stats) *stats = stats_;
    return representative(best_->lab);
  }

 private:
  struct Leaf {
    std::vector<std::uint64_t> trace;
    std::vector<std::uint8_t> cert;
    std::vector<int> lab;
    std::vector<int> path;
  };

  using Key = std::tuple<int, int, std::uint64_t>;

  int refine(std::vector<int>& color, int k, std::uint64_t& trace_word) {
    while (true) {
      for (int x = 0; x < size_; ++x) {
        std::uint64_t h = 0;
        for (int y : nbrs_[x]) h += mix(static_cast<std::uint64_t>(color[y]) + 1);
        keys_[x] = Key{color[x], color[x ^ 1], h};
      }
      std::iota(order_.begin(), order_.end(), 0);
      std::sort(order_.begin(), order_.end(), [&](int a, int b) { return keys_[a] < keys_[b]; });
      int rank = 0;
      std::uint64_t word = mix(static_cast<std::uint64_t>(size_));
      int cell_size = 0;
      for (int i = 0; i < size_; ++i) {
        if (i > 0 && keys_[order_[i]] != keys_[order_[i - 1]]) {
          word = mix(word ^ static_cast<std::uint64_t>(cell_size));
          cell_size = 0;
          ++rank;
        }
        if (cell_size == 0) {
          const auto& [c, pc, h] = keys_[order_[i]];
          word = mix(word ^ mix(static_cast<std::uint64_t>(c) * 0x100000001ULL +
                                static_cast<std::uint64_t>(pc)) ^ h);
        }
        ++cell_size;
        color[order_[i]] = rank;
      }
      word = mix(word ^ static_cast<std::uint64_t>(cell_size));
      const int new_k = rank + 1;
      if (new_k == k) {
        trace_word = word;
        return k;
      }
      k = new_k;
    }
  }

  static int individualize(std::vector<int>& color, int target, int w) {
    for (std::size_t x = 0; x < color.size(); ++x) {
      if (color[x] > target || (color[x] == target && static_cast<int>(x) != w)) ++color[x];
    }
    return 0;
  }

  // Union-find orbits of the group generated by the stored automorphisms
  // that fix every vertex on the current path.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int x = 0; x < size_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < size_; ++x) parent[x] = find(x);
    return parent;
  }

  int compare_trace_prefix() const {
    const auto& bt = best_->trace;
    const std::size_t len = std::min(bt.size(), trace_.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (trace_[i] != bt[i]) return trace_[i] < bt[i] ? -1 : 1;
    }
    return 0;
  }

  int dfs(const std::vector<int>& color, int k) {
    ++stats_.nodes;
    if (k == size_) return leaf(color);

    const int depth = static_cast<int>(path_.size());
    std::vector<int> cell_size(k, 0);
    for (int c : color) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<int> explored;
    for (int w = 0; w < size_; ++w) {
      if (color[w] != target) continue;
      if (!explored.empty() && !automorphisms_.empty()) {
        const auto orbit = stabilizer_orbits();
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](int e) { return orbit[e] == orbit[w]; });
        if (seen) continue;
      }
      std::vector<int> child(color);
      individualize(child, target, w);
      std::uint64_t t = 0;
      const int child_k = refine(child, k + 1, t);
      trace_.push_back(t);
      path_.push_back(w);
      int resume = kNormal;
      if (!best_ || compare_trace_prefix() <= 0) resume = dfs(child, child_k);
      trace_.pop_back();
      path_.pop_back();
      explored.push_back(w);
      if (resume != kNormal && resume < depth) return resume;
    }
    return kNormal;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t len = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < len && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<int> inv(size_);
    for (int x = 0; x < size_; ++x) inv[to.lab[x]] = x;
    std::vector<int> gamma(size_);
    for (int x = 0; x < size_; ++x) gamma[x] = inv[from.lab[x]];
    automorphisms_.push_back(std::move(gamma));
    ++stats_.automorphisms;
  }

  int leaf(const std::vector<int>& lab) {
    ++stats_.leaves;
    Leaf cur{trace_, certificate(lab), lab, path_};
    if (!first_) {
      first_ = cur;
      best_ = std::move(cur);
      return kNormal;
    }
    if (cur.trace == first_->trace && cur.cert == first_->cert) {
      record_automorphism(cur, *first_);
      return common_prefix(cur.path, first_->path);
    }
    auto key = std::tie(cur.trace, cur.cert);
    auto best_key = std::tie(best_->trace, best_->cert);
    if (key == best_key) {
      record_automorphism(cur, *best_);
      return common_prefix(cur.path, best_->path);
    }
    if (key < best_key) best_ = std::move(cur);
    return kNormal;
  }

  std::vector<std::uint8_t> certificate(const std::vector<int>& lab) const {
    std::vector<int> inv(size_);
    for (int x = 0; x < size_; ++x) inv[lab[x]] = x;
    std::vector<std::uint8_t> cert;
    cert.reserve(static_cast<std::size_t>(size_) * (size_ - 1) / 2);
    for (int i = 0; i < size_; ++i) {
      for (int j = i + 1; j < size_; ++j) cert.push_back(color_of_pair_[inv[i] * size_ + inv[j]]);
    }
    return cert;
  }

  // Fibers ordered by their smaller label; that endpoint is the (v,+) lift.
  SignedGraph representative(const std::vector<int>& lab) const {
    std::vector<int> inv(size_);
    for (int x = 0; x < size_; ++x) inv[lab[x]] = x;
    std::vector<int> rep;
    std::vector<char> done(size_, 0);
    for (int pos = 0; pos < size_; ++pos) {
      const int x = inv[pos];
      if (done[x]) continue;
      done[x] = done[x ^ 1] = 1;
      rep.push_back(x);
    }
    SignedGraph g(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (color_of_pair_[rep[i] * size_ + rep[j]] == MatchedDoubleCover::kCover) {
          g.set_sign(i, j, 1);
        } else if (color_of_pair_[rep[i] * size_ + (rep[j] ^ 1)] == MatchedDoubleCover::kCover) {
          g.set_sign(i, j, -1);
        }
      }
    }
    return g;
  }

  int n_;
  int size_;
  std::vector<std::uint8_t> color_of_pair_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<Key> keys_;
  std::vector<int> order_;

  std::vector<std::uint64_t> trace_;
  std::vector<int> path_;
  std::vector<std::vector<int>> automorphisms_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  CanonStats stats_;
};

}  // namespace

SignedGraph canonical_form(const SignedGraph& g, CanonStats* stats) {
  return CoverSearch(g).run(stats);
}

SignedGraph canonical_form(const SignedGraph& g) { return canonical_form(g, nullptr); }

CanonicalCode canonical_code(const SignedGraph& g) { return encode(canonical_form(g)); }

bool switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

bool is_sign_symmetric(const SignedGraph& g) { return switching_isomorphic(g, negate(g)); }

}  // namespace sgw
