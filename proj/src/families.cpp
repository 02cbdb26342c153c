#include "sgw/families.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace sgw {

namespace {

using Eigen::MatrixXi;

MatrixXi ones(int r, int c) { return MatrixXi::Ones(r, c); }
MatrixXi eye(int n) { return MatrixXi::Identity(n, n); }

SignedGraph from_int_matrix(const MatrixXi& a) { return SignedGraph(SignMatrix(a.cast<std::int8_t>())); }

SignedGraph bipartite_from(const MatrixXi& n) {
  const int r = static_cast<int>(n.rows());
  const int c = static_cast<int>(n.cols());
  MatrixXi a = MatrixXi::Zero(r + c, r + c);
  a.topRightCorner(r, c) = n;
  a.bottomLeftCorner(c, r) = n.transpose();
  return from_int_matrix(a);
}

struct TagInfo {
  FamilyTag tag;
  std::string_view name;
  int params;
};

constexpr std::array<TagInfo, 10> kTags{{
    {FamilyTag::SMl, "s-ml", 2},
    {FamilyTag::BipA, "bip-a", 0},
    {FamilyTag::BipB, "bip-b", 0},
    {FamilyTag::BipC, "bip-c", 1},
    {FamilyTag::A1, "a1", 2},
    {FamilyTag::A2, "a2", 2},
    {FamilyTag::A3, "a3", 2},
    {FamilyTag::A4, "a4", 2},
    {FamilyTag::Sporadic1, "sporadic-1", 0},
    {FamilyTag::Sporadic2, "sporadic-2", 0},
}};

const TagInfo& info(FamilyTag tag) {
  for (const auto& t : kTags) {
    if (t.tag == tag) return t;
  }
  throw std::logic_error("unknown family tag");
}

std::vector<VertexSet> blocks(std::initializer_list<int> sizes) {
  std::vector<VertexSet> out;
  int next = 0;
  for (int s : sizes) {
    VertexSet b(s);
    for (int i = 0; i < s; ++i) b[i] = next++;
    out.push_back(std::move(b));
  }
  return out;
}

// Drawn with A..G as 0..6; the negative edge is AB.
SignedGraph sporadic_one() {
  enum { A, B, C, D, E, F, G };
  return SignedGraph::from_edges(7, {{A, B, -1}, {A, C, 1}, {A, D, 1}, {B, C, 1}, {B, D, 1},
                                     {C, D, 1}, {C, E, 1}, {C, F, 1}, {D, E, 1}, {D, F, 1},
                                     {E, F, 1}, {E, G, 1}, {F, G, 1}});
}

// P1..P8 as 0..7; the negative edge is P1P2.
SignedGraph sporadic_two() {
  return SignedGraph::from_edges(8, {{0, 1, -1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1},
                                     {3, 4, 1}, {3, 5, 1}, {3, 6, 1}, {3, 7, 1}, {4, 6, 1},
                                     {5, 7, 1}});
}

bool clique_plus_isolated(const UnsignedGraph& h) {
  VertexSet busy;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) busy.push_back(v);
  }
  for (std::size_t i = 0; i < busy.size(); ++i) {
    for (std::size_t j = i + 1; j < busy.size(); ++j) {
      if (!h.adjacent(busy[i], busy[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view tag_name(FamilyTag tag) { return info(tag).name; }

std::optional<FamilyTag> parse_tag(std::string_view name) {
  for (const auto& t : kTags) {
    if (t.name == name) return t.tag;
  }
  return std::nullopt;
}

const std::vector<FamilyTag>& all_tags() {
  static const std::vector<FamilyTag> tags = [] {
    std::vector<FamilyTag> v;
    for (const auto& t : kTags) v.push_back(t.tag);
    return v;
  }();
  return tags;
}

int parameter_count(FamilyTag tag) { return info(tag).params; }

void FamilySpec::validate() const {
  switch (parameter_count(tag)) {
    case 2:
      if (m < 1 || l < 1) throw std::invalid_argument(name() + ": needs m >= 1 and l >= 1");
      break;
    case 1:
      if (m < 3) throw std::invalid_argument(name() + ": needs m >= 3");
      break;
    default:
      break;
  }
}

int FamilySpec::order() const {
  switch (tag) {
    case FamilyTag::SMl: return m + l;
    case FamilyTag::BipA: return 12;
    case FamilyTag::BipB: return 10;
    case FamilyTag::BipC: return 2 * m;
    case FamilyTag::A1: return m + 2 * l;
    case FamilyTag::A2: return 2 * m + 2 * l;
    case FamilyTag::A3: return m + l + 2;
    case FamilyTag::A4: return m + l + 4;
    case FamilyTag::Sporadic1: return 7;
    case FamilyTag::Sporadic2: return 8;
  }
  return 0;
}

std::string FamilySpec::name() const {
  std::ostringstream out;
  out << tag_name(tag);
  const int p = parameter_count(tag);
  if (p == 2) out << "(m=" << m << ",l=" << l << ")";
  if (p == 1) out << "(m=" << m << ")";
  return out.str();
}

MatrixXi reverse_identity(int m) { return eye(m).rowwise().reverse(); }

MatrixXi biadjacency(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::BipA: {
      MatrixXi n = MatrixXi::Zero(6, 6);
      n.topLeftCorner(3, 3) = ones(3, 3) - eye(3);
      n.topRightCorner(3, 3) = ones(3, 3);
      n.bottomRightCorner(3, 3) = ones(3, 3) - eye(3);
      return n;
    }
    case FamilyTag::BipB: {
      MatrixXi n = MatrixXi::Zero(5, 5);
      n.row(0).setOnes();
      n.col(0).setOnes();
      n.bottomRightCorner(4, 4) = eye(4);
      return n;
    }
    case FamilyTag::BipC:
      spec.validate();
      return ones(spec.m, spec.m) - eye(spec.m);
    default:
      throw std::invalid_argument(spec.name() + " is not a bipartite family");
  }
}

SignedGraph build(const FamilySpec& spec) {
  spec.validate();
  const int m = spec.m;
  const int l = spec.l;
  switch (spec.tag) {
    case FamilyTag::SMl: {
      MatrixXi a(m + l, m + l);
      a << eye(m) - ones(m, m), ones(m, l), ones(l, m), ones(l, l) - eye(l);
      return from_int_matrix(a);
    }
    case FamilyTag::BipA:
    case FamilyTag::BipB:
    case FamilyTag::BipC:
      return bipartite_from(biadjacency(spec));
    case FamilyTag::A1: {
      MatrixXi a(m + 2 * l, m + 2 * l);
      a << ones(m, m) - eye(m), ones(m, 2 * l), ones(2 * l, m), -reverse_identity(2 * l);
      return from_int_matrix(a);
    }
    case FamilyTag::A2: {
      MatrixXi a(2 * m + 2 * l, 2 * m + 2 * l);
      a << reverse_identity(2 * m), ones(2 * m, 2 * l), ones(2 * l, 2 * m),
          -reverse_identity(2 * l);
      return from_int_matrix(a);
    }
    case FamilyTag::A3: {
      const int n = m + l + 2;
      MatrixXi a = MatrixXi::Zero(n, n);
      a.topLeftCorner(m, m) = ones(m, m) - eye(m);
      a.block(0, m, m, 2).setOnes();
      a.block(m, 0, 2, m).setOnes();
      a(m, m + 1) = a(m + 1, m) = 1;
      a.block(m, m + 2, 1, l).setConstant(-1);
      a.block(m + 2, m, l, 1).setConstant(-1);
      a.block(m + 1, m + 2, 1, l).setOnes();
      a.block(m + 2, m + 1, l, 1).setOnes();
      a.bottomRightCorner(l, l) = eye(l) - ones(l, l);
      return from_int_matrix(a);
    }
    case FamilyTag::A4: {
      const int n = m + l + 4;
      const MatrixXi r2 = reverse_identity(2);
      MatrixXi a = MatrixXi::Zero(n, n);
      a.topLeftCorner(m, m) = ones(m, m) - eye(m);
      a.block(0, m, m, 2).setOnes();
      a.block(m, 0, 2, m).setOnes();
      a.block(0, m + 4, m, l).setOnes();
      a.block(m + 4, 0, l, m).setOnes();
      a.block(m, m, 2, 2) = r2;
      a.block(m + 2, m + 2, 2, 2) = -r2;
      a.block(m + 2, m + 4, 2, l).setConstant(-1);
      a.block(m + 4, m + 2, l, 2).setConstant(-1);
      a.bottomRightCorner(l, l) = eye(l) - ones(l, l);
      return from_int_matrix(a);
    }
    case FamilyTag::Sporadic1: return sporadic_one();
    case FamilyTag::Sporadic2: return sporadic_two();
  }
  throw std::logic_error("unhandled family tag");
}

ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec) {
  spec.validate();
  const long long m = spec.m;
  const long long l = spec.l;
  switch (spec.tag) {
    case FamilyTag::SMl:
      // The printed block matrix has +1 with multiplicity m-1 (from I_m - J)
      // and -1 with multiplicity l-1 (from J - I_l).
      return {static_cast<int>(l - 1), static_cast<int>(m - 1),
              QuadraticSurd{l - m, m * m + l * l + 6 * m * l - 4 * m - 4 * l + 4}};
    case FamilyTag::BipA: return {5, 5, IntegerPair{-4, 4}};
    case FamilyTag::BipB: return {4, 4, IntegerPair{-3, 3}};
    case FamilyTag::BipC:
      return {static_cast<int>(m - 1), static_cast<int>(m - 1), IntegerPair{-(m - 1), m - 1}};
    case FamilyTag::A1:
      return {static_cast<int>(l + m - 2), static_cast<int>(l), QuadraticSurd{m - 2, m * (m + 8 * l)}};
    case FamilyTag::A2:
      return {static_cast<int>(m + l - 1), static_cast<int>(m + l - 1),
              QuadraticSurd{0, 4 * (1 + 4 * m * l)}};
    case FamilyTag::A3:
      return {static_cast<int>(m), static_cast<int>(l), IntegerPair{-l - 1, m + 1}};
    case FamilyTag::A4:
      return {static_cast<int>(m + 1), static_cast<int>(l + 1),
              QuadraticSurd{m - l, m * m + l * l + 6 * m * l + 4 * m + 4 * l + 4}};
    case FamilyTag::Sporadic1: return {3, 2, QuadraticSurd{1, 41}};
    case FamilyTag::Sporadic2: return {3, 3, QuadraticSurd{0, 32}};
  }
  throw std::logic_error("unhandled family tag");
}

int ClosedFormSpectrum::size() const {
  int extra = 0;
  if (!std::holds_alternative<std::monostate>(residual)) extra = 2;
  return mult_minus + mult_plus + extra;
}

IntPolynomial ClosedFormSpectrum::polynomial() const {
  IntPolynomial p = IntPolynomial::power_of_linear(BigInt(-1), mult_minus) *
                    IntPolynomial::power_of_linear(BigInt(1), mult_plus);
  if (const auto* q = std::get_if<QuadraticSurd>(&residual)) {
    const long long num = q->s * q->s - q->d;
    if (num % 4 != 0) throw std::logic_error("quadratic surd has non-integral constant term");
    p = p * IntPolynomial{BigInt(num / 4), BigInt(-q->s), BigInt(1)};
  } else if (const auto* r = std::get_if<IntegerPair>(&residual)) {
    p = p * IntPolynomial{BigInt(-r->r1), BigInt(1)} * IntPolynomial{BigInt(-r->r2), BigInt(1)};
  }
  return p;
}

std::string ClosedFormSpectrum::to_string() const {
  std::ostringstream out;
  auto mult = [&](const char* v, int k) {
    out << v;
    if (k > 1) out << '^' << k;
  };
  out << '{';
  bool first = true;
  if (mult_minus > 0) {
    mult("-1", mult_minus);
    first = false;
  }
  if (mult_plus > 0) {
    if (!first) out << ", ";
    mult("1", mult_plus);
    first = false;
  }
  if (!first && !std::holds_alternative<std::monostate>(residual)) out << ", ";
  if (const auto* q = std::get_if<QuadraticSurd>(&residual)) {
    out << "(" << q->s << " +- sqrt(" << q->d << "))/2";
  } else if (const auto* r = std::get_if<IntegerPair>(&residual)) {
    out << r->r1 << ", " << r->r2;
  }
  out << '}';
  return out.str();
}

std::vector<VertexSet> block_partition(const FamilySpec& spec) {
  spec.validate();
  const int m = spec.m;
  const int l = spec.l;
  switch (spec.tag) {
    case FamilyTag::SMl: return blocks({m, l});
    case FamilyTag::BipA: return blocks({3, 3, 3, 3});
    case FamilyTag::BipB: return blocks({1, 4, 1, 4});
    case FamilyTag::BipC: return blocks({m, m});
    case FamilyTag::A1: return blocks({m, 2 * l});
    case FamilyTag::A2: return blocks({2 * m, 2 * l});
    case FamilyTag::A3: return blocks({m, 1, 1, l});
    case FamilyTag::A4: return blocks({m, 2, 2, l});
    case FamilyTag::Sporadic1:
    case FamilyTag::Sporadic2: {
      std::vector<VertexSet> out;
      for (int v = 0; v < spec.order(); ++v) out.push_back({v});
      return out;
    }
  }
  throw std::logic_error("unhandled family tag");
}

std::vector<FamilySpec> members_up_to(int max_order) {
  std::vector<FamilySpec> out;
  for (FamilyTag tag : all_tags()) {
    switch (parameter_count(tag)) {
      case 2:
        for (int m = 1; m <= max_order; ++m) {
          for (int l = 1; l <= max_order; ++l) {
            FamilySpec s{tag, m, l};
            if (s.order() <= max_order) out.push_back(s);
          }
        }
        break;
      case 1:
        for (int m = 3; 2 * m <= max_order; ++m) out.push_back({tag, m, 0});
        break;
      default: {
        FamilySpec s{tag, 0, 0};
        if (s.order() <= max_order) out.push_back(s);
      }
    }
  }
  return out;
}

bool in_F(const UnsignedGraph& h) {
  return clique_plus_isolated(h) || clique_plus_isolated(complement(h));
}

int forbidden_index(const UnsignedGraph& four) {
  if (four.order() != 4) throw std::invalid_argument("forbidden_index needs an order-4 graph");
  std::array<int, 4> deg{};
  for (int v = 0; v < 4; ++v) deg[v] = four.degree(v);
  std::sort(deg.begin(), deg.end());
  const int e = four.edge_count();
  using D = std::array<int, 4>;
  if (e == 2 && deg == D{1, 1, 1, 1}) return 0;  // 2K2
  if (e == 2 && deg == D{0, 1, 1, 2}) return 1;  // P3 + K1
  if (e == 3 && deg == D{1, 1, 2, 2}) return 2;  // P4
  if (e == 4 && deg == D{1, 2, 2, 3}) return 3;  // paw
  if (e == 4 && deg == D{2, 2, 2, 2}) return 4;  // C4
  return -1;
}

bool forbidden_subgraph_free(const UnsignedGraph& h) {
  const int n = h.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (forbidden_index(induced(h, {a, b, c, d})) >= 0) return false;
        }
  return true;
}

std::optional<MatrixXi> equitable_quotient(const SignedGraph& g,
                                           const std::vector<VertexSet>& partition) {
  const int n = g.order();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw std::invalid_argument("empty block in partition");
    for (int v : partition[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (block_of[v] >= 0) throw std::invalid_argument("vertex in two blocks");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (block_of[v] < 0) throw std::invalid_argument("partition does not cover every vertex");
  }
  const int k = static_cast<int>(partition.size());
  MatrixXi q = MatrixXi::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < partition[i].size(); ++r) {
      Eigen::VectorXi sums = Eigen::VectorXi::Zero(k);
      for (int w = 0; w < n; ++w) sums(block_of[w]) += g(partition[i][r], w);
      if (r == 0) {
        q.row(i) = sums.transpose();
      } else if (q.row(i) != sums.transpose()) {
        return std::nullopt;
      }
    }
  }
  return q;
}

}  // namespace sgw
