#include "sgw/enumerate.hpp"

#include "sgw/exact.hpp"
#include "sgw/numeric.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace sgw {

bool hereditary_prune(const SignedGraph& g) {
  if (g.order() < 3) return false;
  const auto p = char_poly(g);
  return count_roots_above(p, Rational(1)) > 2 || count_roots_below(p, Rational(-1)) > 2;
}

std::vector<long long> EnumerationReport::counts() const {
  std::vector<long long> out;
  for (const auto& level : members) out.push_back(static_cast<long long>(level.size()));
  return out;
}

namespace {

// Jacobi eigenvalues are accurate to ~1e-13 here, so a third-largest value
// below 1 - kMargin (and third-smallest above -1 + kMargin) settles the
// prune as "keep" without exact work. Everything else goes to the exact test.
constexpr double kMargin = 1e-6;

struct PruneCounter {
  long long exact_checks = 0;
};

bool prune_child(const SignedGraph& g, PruneCounter& counter) {
  const int n = g.order();
  if (n < 3) return false;
  Eigen::VectorXd ev = jacobi_eigenvalues<double>(g.adjacency<double>());
  std::sort(ev.data(), ev.data() + n);
  const bool maybe_above = ev(n - 3) > 1.0 - kMargin;
  const bool maybe_below = ev(2) < -1.0 + kMargin;
  if (!maybe_above && !maybe_below) return false;
  ++counter.exact_checks;
  return hereditary_prune(g);
}

SignedGraph extend(const SignedGraph& parent, const std::vector<int>& pattern) {
  const int k = parent.order();
  SignMatrix m(k + 1, k + 1);
  m.topLeftCorner(k, k) = parent.matrix();
  for (int i = 0; i < k; ++i) m(i, k) = m(k, i) = static_cast<std::int8_t>(pattern[i]);
  m(k, k) = 0;
  return SignedGraph(std::move(m));
}

// Calls f(pattern) for each nonzero pattern in {-1,0,1}^k whose first
// nonzero entry is +1.
template <typename F>
void for_each_pattern(int k, F&& f) {
  static constexpr int kValue[3] = {0, 1, -1};
  std::vector<int> digits(k, 0);
  std::vector<int> pattern(k, 0);
  while (true) {
    int i = 0;
    while (i < k && digits[i] == 2) digits[i++] = 0;
    if (i == k) return;
    ++digits[i];
    int first = 0;
    for (int j = 0; j < k; ++j) {
      pattern[j] = kValue[digits[j]];
      if (first == 0) first = pattern[j];
    }
    if (first == 1) f(pattern);
  }
}

}  // namespace

std::vector<SignedGraph> one_vertex_extensions(const SignedGraph& parent) {
  std::vector<SignedGraph> out;
  for_each_pattern(parent.order(), [&](const std::vector<int>& p) { out.push_back(extend(parent, p)); });
  return out;
}

EnumerationReport enumerate_members(int max_order, int workers) {
  if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  workers = std::max(1, workers);

  EnumerationReport report;
  report.max_order = max_order;
  report.members.resize(max_order);
  report.frontier.resize(max_order);

  const CanonicalCode k1 = canonical_code(SignedGraph(1));
  report.frontier[0] = {k1};
  report.members[0] = {k1};
  report.stats.push_back({1, 0, 1, 0, 0, 1, 1, 0.0});

  for (int order = 2; order <= max_order; ++order) {
    const auto start = std::chrono::steady_clock::now();
    const bool last = order == max_order;
    std::vector<SignedGraph> parents;
    for (const auto& c : report.frontier[order - 2]) parents.push_back(decode(c));

    struct Local {
      std::unordered_set<CanonicalCode> codes;
      long long children = 0;
      long long pruned = 0;
      PruneCounter counter;
    };
    std::vector<Local> locals(workers);
    auto work = [&](int w) {
      Local& local = locals[w];
      for (std::size_t i = w; i < parents.size(); i += workers) {
        for_each_pattern(order - 1, [&](const std::vector<int>& pattern) {
          SignedGraph child = extend(parents[i], pattern);
          ++local.children;
          if (last) {
            // Only members are reported at the final order.
            if (membership(child).member) local.codes.insert(canonical_code(child));
            return;
          }
          if (prune_child(child, local.counter)) {
            ++local.pruned;
            return;
          }
          local.codes.insert(canonical_code(child));
        });
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }

    std::unordered_set<CanonicalCode> merged;
    LevelStats st;
    st.order = order;
    st.parents = static_cast<long long>(parents.size());
    for (auto& local : locals) {
      merged.insert(local.codes.begin(), local.codes.end());
      st.children += local.children;
      st.pruned += local.pruned;
      st.exact_prune_checks += local.counter.exact_checks;
    }
    std::vector<CanonicalCode> level(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());

    std::vector<CanonicalCode> members;
    for (const auto& c : level) {
      if (last || membership(decode(c)).member) members.push_back(c);
    }
    if (!last) report.frontier[order - 1] = std::move(level);
    st.frontier = last ? 0 : static_cast<long long>(report.frontier[order - 1].size());
    st.members = static_cast<long long>(members.size());
    report.members[order - 1] = std::move(members);
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.stats.push_back(st);
  }
  return report;
}

std::string Classification::label() const {
  std::string base = family ? family->name() : tag;
  if (!detail.empty()) base += "[" + detail + "]";
  return negated ? "-" + base : base;
}

namespace {

struct FamilyTable {
  std::mutex mu;
  std::map<int, std::unordered_map<CanonicalCode, Classification>> by_order;

  const std::unordered_map<CanonicalCode, Classification>& get(int n) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = by_order.find(n);
    if (it != by_order.end()) return it->second;
    auto& table = by_order[n];
    for (const auto& spec : members_up_to(n)) {
      if (spec.order() != n) continue;
      const auto g = build(spec);
      Classification c;
      c.tag = std::string(tag_name(spec.tag));
      c.family = spec;
      table.emplace(canonical_code(g), c);
      c.negated = true;
      table.emplace(canonical_code(negate(g)), c);
    }
    return table;
  }
};

FamilyTable& family_table() {
  static FamilyTable t;
  return t;
}

bool plus_or_minus_complete(const SignedGraph& g) {
  const int n = g.order();
  return switching_isomorphic(g, complete_graph(n, 1)) ||
         switching_isomorphic(g, complete_graph(n, -1));
}

}  // namespace

Classification classify_member(const SignedGraph& g) {
  if (!membership(g).member) throw std::invalid_argument("classify_member needs a member");
  const auto& table = family_table().get(g.order());
  if (auto it = table.find(canonical_code(g)); it != table.end()) return it->second;

  const auto comps = components(g);
  if (comps.size() > 1) {
    Classification c;
    c.tag = "disconnected";
    std::vector<VertexSet> big;
    for (const auto& comp : comps) {
      if (comp.size() != 2) big.push_back(comp);
    }
    int edges = static_cast<int>(comps.size() - big.size());
    if (big.size() == 2 && plus_or_minus_complete(induced(g, big[0])) &&
        plus_or_minus_complete(induced(g, big[1]))) {
      c.detail = "two complete";
    } else if (big.size() == 1) {
      c.detail = classify_member(induced(g, big[0])).label();
    } else if (big.empty()) {
      c.detail = "edges";
    } else {
      return Classification{};
    }
    if (edges > 0) c.detail += " + " + std::to_string(edges) + "K2";
    return c;
  }

  if (is_balanced(g)) return Classification{"unsigned", std::nullopt, false, {}};
  if (is_balanced(negate(g))) return Classification{"unsigned", std::nullopt, true, {}};
  return Classification{};
}

}  // namespace sgw
