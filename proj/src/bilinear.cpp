#include "ellweyl/bilinear.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace ellweyl {

std::string_view to_string(Ambient ambient) {
  switch (ambient) {
    case Ambient::V: return "V";
    case Ambient::Vtilde: return "Vtilde";
    case Ambient::Vhat: return "Vhat";
  }
  return "?";
}

int ambient_dim(Kind kind, Ambient ambient) {
  const int n = finite_type_data(kind).n;
  switch (ambient) {
    case Ambient::V: return n + 2;
    case Ambient::Vtilde: return n + 3;
    case Ambient::Vhat: return n + 4;
  }
  return 0;
}

namespace {

std::atomic<bool> g_sabotage{false};

IntMatrix build_gram(Kind kind, Ambient ambient) {
  const FiniteTypeData& d = finite_type_data(kind);
  const int dim = ambient_dim(kind, ambient);
  const BasisIndex idx{d.n};
  IntMatrix g = IntMatrix::Zero(dim, dim);
  g.topLeftCorner(d.n, d.n) = d.cartan();
  if (ambient != Ambient::V) g(idx.b(), idx.b_prime()) = g(idx.b_prime(), idx.b()) = 1;
  if (ambient == Ambient::Vhat) g(idx.a(), idx.a_prime()) = g(idx.a_prime(), idx.a()) = 1;
  return g;
}

}  // namespace

void set_gram_sabotage(bool on) { g_sabotage = on; }

IntMatrix gram_matrix(Kind kind, Ambient ambient) {
  static const std::array<std::array<IntMatrix, 3>, 4> table = [] {
    std::array<std::array<IntMatrix, 3>, 4> t;
    for (Kind k : kAllKinds)
      for (Ambient a : {Ambient::V, Ambient::Vtilde, Ambient::Vhat})
        t[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] = build_gram(k, a);
    return t;
  }();
  IntMatrix g = table[static_cast<std::size_t>(kind)][static_cast<std::size_t>(ambient)];
  if (g_sabotage) {
    const BasisIndex idx{finite_type_data(kind).n};
    g(idx.a(), idx.a()) = 2;  // a is no longer isotropic
  }
  return g;
}

IntVector embed(Kind kind, const RootVector& root, Ambient ambient) {
  const BasisIndex idx{finite_type_data(kind).n};
  IntVector v = IntVector::Zero(ambient_dim(kind, ambient));
  for (int i = 0; i < idx.n; ++i) v(i) = root.beta[static_cast<std::size_t>(i)];
  v(idx.a()) = root.k;
  v(idx.b()) = root.l;
  return v;
}

Signature signature(const RationalMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("signature: matrix is not square");
  if (!(input == input.transpose())) throw std::invalid_argument("signature: matrix is not symmetric");
  RationalMatrix m = input;
  const int dim = m.rows();
  Signature sig;
  // Symmetric elimination: every step is a congruence m -> P^T m P.
  int done = 0;
  while (done < dim) {
    int pivot = -1;
    for (int i = done; i < dim; ++i)
      if (m(i, i) != 0) { pivot = i; break; }
    if (pivot < 0) {
      // All remaining diagonal entries vanish. Replace e_i by e_i + e_j for
      // an off-diagonal pair; its square is 2 m(i,j) != 0.
      int pi = -1, pj = -1;
      for (int i = done; i < dim && pi < 0; ++i)
        for (int j = i + 1; j < dim; ++j)
          if (m(i, j) != 0) { pi = i; pj = j; break; }
      if (pi < 0) {
        sig.zero += dim - done;
        break;
      }
      m.add_row(pi, pj, 1);
      m.add_col(pi, pj, 1);
      pivot = pi;
    }
    if (pivot != done) {
      m.swap_rows(pivot, done);
      m.swap_cols(pivot, done);
    }
    const Rational p = m(done, done);
    for (int i = done + 1; i < dim; ++i) {
      if (m(i, done) == 0) continue;
      const Rational f = -m(i, done) / p;
      m.add_row(i, done, f);
      m.add_col(i, done, f);
    }
    (p > 0 ? sig.positive : sig.negative) += 1;
    ++done;
  }
  return sig;
}

Signature signature(const IntMatrix& m) { return signature(RationalMatrix::from(m)); }

RationalMatrix rref(RationalMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.swap_rows(p, r);
    m.scale_row(r, Rational(1) / m(r, c));
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = -m(i, c);
      m.add_row(i, r, f);
    }
    ++r;
  }
  return m.top_rows(r);
}

int rank(const RationalMatrix& m) { return rref(m).rows(); }

RationalMatrix kernel(const RationalMatrix& m) {
  const RationalMatrix red = rref(m);
  const int cols = m.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int i = 0; i < red.rows(); ++i) {
    for (int c = 0; c < cols; ++c) {
      if (red(i, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
        break;
      }
    }
  }
  RationalMatrix out(cols - static_cast<int>(pivot_col.size()), cols);
  int row = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out(row, free) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out(row, pivot_col[i]) = -red(static_cast<int>(i), free);
    ++row;
  }
  return out;
}

RationalSubspace::RationalSubspace(Kind kind, Ambient ambient, const RationalMatrix& rows)
    : kind_(kind), ambient_(ambient) {
  const int dim = ambient_dim(kind, ambient);
  if (rows.rows() > 0 && rows.cols() != dim)
    throw std::invalid_argument("RationalSubspace: vector length does not match ambient");
  basis_ = rows.rows() == 0 ? RationalMatrix(0, dim) : rref(rows);
}

RationalSubspace RationalSubspace::span(Kind kind, Ambient ambient, const std::vector<IntVector>& vectors) {
  const int dim = ambient_dim(kind, ambient);
  RationalMatrix rows(static_cast<int>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw std::invalid_argument("span: vector length does not match ambient");
    for (int j = 0; j < dim; ++j) rows(static_cast<int>(i), j) = static_cast<long>(vectors[i](j));
  }
  return RationalSubspace(kind, ambient, rows);
}

RationalSubspace RationalSubspace::full(Kind kind, Ambient ambient) {
  return RationalSubspace(kind, ambient, RationalMatrix::identity(ambient_dim(kind, ambient)));
}

bool RationalSubspace::contains(const RationalMatrix& v) const {
  if (v.rows() != 1 || v.cols() != ambient_dim(kind_, ambient_)) return false;
  RationalMatrix stacked(basis_.rows() + 1, v.cols());
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) stacked(i, j) = basis_(i, j);
  for (int j = 0; j < v.cols(); ++j) stacked(basis_.rows(), j) = v(0, j);
  return rank(stacked) == dim();
}

bool RationalSubspace::contains(const IntVector& v) const {
  return contains(RationalMatrix::from(IntMatrix(v.transpose())));
}

RationalSubspace fixed_space(Kind kind, Ambient ambient, const IntMatrix& m) {
  const int dim = ambient_dim(kind, ambient);
  if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("fixed_space: matrix does not act on ambient");
  const IntMatrix shifted = m - IntMatrix::Identity(dim, dim);
  return RationalSubspace(kind, ambient, kernel(RationalMatrix::from(shifted)));
}

RationalSubspace orth_complement(const RationalSubspace& s) {
  if (s.dim() == 0) return RationalSubspace::full(s.kind(), s.ambient());
  const RationalMatrix g = RationalMatrix::from(gram_matrix(s.kind(), s.ambient()));
  return RationalSubspace(s.kind(), s.ambient(), kernel(s.basis() * g));
}

bool is_null_space(const RationalSubspace& s) {
  if (s.dim() == 0) return true;
  const RationalMatrix g = RationalMatrix::from(gram_matrix(s.kind(), s.ambient()));
  return (s.basis() * g * s.basis().transpose()).is_zero();
}

}  // namespace ellweyl
