#include "ellweyl/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace ellweyl {

namespace {

FiniteTypeData make_table(Kind kind) {
  switch (kind) {
    case Kind::D4:
      return {Kind::D4, 4, 2, 2, {1, 2, 1, 1}, {{1, 2}, {2, 3}, {2, 4}}, 2};
    case Kind::E6:
      return {Kind::E6, 6, 4, 3, {1, 2, 2, 3, 2, 1}, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}, 2};
    case Kind::E7:
      return {Kind::E7, 7, 4, 4, {2, 2, 3, 4, 3, 2, 1}, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, 1};
    case Kind::E8:
      return {Kind::E8, 8, 4, 6, {2, 3, 4, 6, 5, 4, 3, 2},
              {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}, 8};
  }
  throw std::logic_error("unknown kind");
}

bool is_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

void validate(const FiniteTypeData& d, const FiniteRootSystem& rs) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error(std::string(to_string(d.kind)) + " table: " + what);
  };
  if (!is_tree(d.n, d.edges)) fail("diagram is not a tree");
  if (std::count(d.marks.begin(), d.marks.end(), d.m_t) != 1) fail("maximal mark not unique");
  if (d.marks[static_cast<std::size_t>(d.t - 1)] != d.m_t) fail("m_t is not the mark of t");
  if (*std::max_element(d.marks.begin(), d.marks.end()) != d.m_t) fail("m_t not maximal");
  // Highest root must equal sum m_i alpha_i, and b = alpha_0 + sum m_i alpha_i
  // must be orthogonal to every alpha_j, i.e. alpha_0 pairs with alpha_j
  // as -(highest | alpha_j).
  if (rs.root(rs.highest_root_index()) != d.marks) fail("marks are not the highest root");
  const IntMatrix c = d.cartan();
  for (int j = 0; j < d.n; ++j) {
    Int s = 0;
    for (int i = 0; i < d.n; ++i) s += c(j, i) * d.marks[static_cast<std::size_t>(i)];
    const Int expected = (j + 1 == d.affine_attach) ? 1 : 0;
    if (s != expected) fail("alpha_0 attachment inconsistent with marks");
  }
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::D4: return "D4";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : kAllKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

IntMatrix FiniteTypeData::cartan() const {
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (auto [u, v] : edges) c(u - 1, v - 1) = c(v - 1, u - 1) = -1;
  return c;
}

const FiniteTypeData& finite_type_data(Kind kind) {
  static const std::array<FiniteTypeData, 4> tables = [] {
    std::array<FiniteTypeData, 4> out = {make_table(Kind::D4), make_table(Kind::E6),
                                         make_table(Kind::E7), make_table(Kind::E8)};
    return out;
  }();
  return tables[static_cast<std::size_t>(kind)];
}

RootVector operator-(const RootVector& r) {
  RootVector out = r;
  for (int& x : out.beta) x = -x;
  out.k = -out.k;
  out.l = -out.l;
  return out;
}

RootVector operator+(const RootVector& x, const RootVector& y) {
  RootVector out = x;
  for (std::size_t i = 0; i < out.beta.size(); ++i) out.beta[i] += y.beta[i];
  out.k += y.k;
  out.l += y.l;
  return out;
}

bool is_canonical(const RootVector& r) {
  for (int x : r.beta)
    if (x != 0) return x > 0;
  return false;
}

RootVector canonical(const RootVector& r) { return is_canonical(r) ? r : -r; }

FiniteRootSystem::FiniteRootSystem(Kind kind) : kind_(kind) {
  const FiniteTypeData& d = finite_type_data(kind);
  n_ = d.n;
  cartan_ = d.cartan();

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n_; ++i) {
      int p = 0;
      for (int j = 0; j < n_; ++j) p += static_cast<int>(cartan_(i, j)) * r[static_cast<std::size_t>(j)];
      if (p == 0) continue;
      std::vector<int> s = r;
      s[static_cast<std::size_t>(i)] -= p;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }

  std::vector<std::vector<int>> positives;
  for (const auto& r : seen)
    if (is_canonical(RootVector{r, 0, 0})) positives.push_back(r);
  auto height = [](const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::sort(positives.begin(), positives.end(), [&](const auto& x, const auto& y) {
    const int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  num_positive_ = static_cast<int>(positives.size());
  roots_ = positives;
  for (const auto& r : positives) {
    std::vector<int> neg = r;
    for (int& x : neg) x = -x;
    roots_.push_back(neg);
  }
  for (int i = 0; i < size(); ++i) index_[roots_[static_cast<std::size_t>(i)]] = i;

  const auto total = static_cast<std::size_t>(size());
  pairing_.assign(total * total, 0);
  reflect_.assign(total * total, -1);
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const int p = pairing(std::span<const int>(root(i)), std::span<const int>(root(j)));
      pairing_[static_cast<std::size_t>(i * size() + j)] = p;
      std::vector<int> s = root(j);
      for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] -= p * root(i)[static_cast<std::size_t>(q)];
      reflect_[static_cast<std::size_t>(i * size() + j)] = index_of(s);
    }
  }
}

int FiniteRootSystem::index_of(std::span<const int> beta) const {
  auto it = index_.find(std::vector<int>(beta.begin(), beta.end()));
  return it == index_.end() ? -1 : it->second;
}

int FiniteRootSystem::pairing(std::span<const int> x, std::span<const int> y) const {
  int s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      s += x[static_cast<std::size_t>(i)] * static_cast<int>(cartan_(i, j)) * y[static_cast<std::size_t>(j)];
  return s;
}

const FiniteRootSystem& root_system(Kind kind) {
  static const std::array<FiniteRootSystem, 4> systems = [] {
    std::array<FiniteRootSystem, 4> out = {FiniteRootSystem(Kind::D4), FiniteRootSystem(Kind::E6),
                                           FiniteRootSystem(Kind::E7), FiniteRootSystem(Kind::E8)};
    for (const auto& rs : out) validate(finite_type_data(rs.kind()), rs);
    return out;
  }();
  return systems[static_cast<std::size_t>(kind)];
}

std::vector<RootVector> finite_roots(Kind kind) {
  const FiniteRootSystem& rs = root_system(kind);
  std::vector<RootVector> out;
  out.reserve(static_cast<std::size_t>(rs.size()));
  for (int i = 0; i < rs.size(); ++i) out.push_back({rs.root(i), 0, 0});
  return out;
}

RootVector highest_root(Kind kind) {
  const FiniteRootSystem& rs = root_system(kind);
  return {rs.root(rs.highest_root_index()), 0, 0};
}

RootVector simple_root(Kind kind, int i, int k, int l) {
  RootVector r{std::vector<int>(static_cast<std::size_t>(finite_type_data(kind).n), 0), k, l};
  r.beta[static_cast<std::size_t>(i - 1)] = 1;
  return r;
}

EllipticBasis elliptic_basis(Kind kind) {
  const FiniteTypeData& d = finite_type_data(kind);
  EllipticBasis basis{kind, {}};
  for (int i = 1; i <= d.n; ++i) basis.alpha.push_back(simple_root(kind, i));
  RootVector a0 = -highest_root(kind);
  a0.l = 1;
  basis.alpha.push_back(a0);
  basis.alpha.push_back(simple_root(kind, d.t, 1, 0));
  return basis;
}

bool is_root(Kind kind, const RootVector& gamma) {
  const FiniteRootSystem& rs = root_system(kind);
  if (static_cast<int>(gamma.beta.size()) != rs.rank()) return false;
  return rs.index_of(gamma.beta) >= 0;
}

int pairing(Kind kind, const RootVector& x, const RootVector& y) {
  return root_system(kind).pairing(std::span<const int>(x.beta), std::span<const int>(y.beta));
}

std::vector<DiagramEdge> elliptic_diagram(Kind kind) {
  const EllipticBasis basis = elliptic_basis(kind);
  const int n = finite_type_data(kind).n;
  // basis.alpha is ordered [1..n, 0, t*]; vertex ids are 0..n, n+1.
  auto vertex_of = [n](int pos) { return pos < n ? pos + 1 : (pos == n ? 0 : n + 1); };
  std::vector<DiagramEdge> edges;
  for (int p = 0; p < n + 2; ++p) {
    for (int q = p + 1; q < n + 2; ++q) {
      const int c = pairing(kind, basis.alpha[static_cast<std::size_t>(p)], basis.alpha[static_cast<std::size_t>(q)]);
      int u = vertex_of(p), v = vertex_of(q);
      if (u > v) std::swap(u, v);
      if (c == -1) edges.push_back({u, v, EdgeStyle::Single});
      else if (c == 2) edges.push_back({u, v, EdgeStyle::DottedDouble});
      else if (c != 0) throw std::logic_error("unexpected pairing in elliptic diagram");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return edges;
}

std::string diagram_vertex_label(Kind kind, int vertex) {
  const FiniteTypeData& d = finite_type_data(kind);
  if (vertex == d.n + 1) return std::to_string(d.t) + "*";
  return std::to_string(vertex);
}

std::string to_string(const RootVector& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.beta.size(); ++i) os << (i ? "," : "") << r.beta[i];
  os << "; k=" << r.k << ", l=" << r.l << ')';
  return os.str();
}

}  // namespace ellweyl
