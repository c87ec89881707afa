#include "ellweyl/group.hpp"

#include <array>
#include <string>

namespace ellweyl {

namespace {

struct FiniteInverseData {
  IntMatrix adjugate;  // det(C) * C^{-1}
  Int det;
};

// [M | I] -> [I | M^{-1}]; empty result if M is singular.
RationalMatrix inverse_over_q(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  RationalMatrix aug(n, 2 * n);
  const RationalMatrix q = RationalMatrix::from(m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = q(i, j);
    aug(i, n + i) = 1;
  }
  const RationalMatrix red = rref(aug);
  if (red.rows() != n || !(red.block(0, 0, n, n) == RationalMatrix::identity(n))) return RationalMatrix(0, 0);
  return red.block(0, n, n, n);
}

const FiniteInverseData& inverse_data(Kind kind) {
  static const std::array<FiniteInverseData, 4> table = [] {
    std::array<FiniteInverseData, 4> out;
    for (Kind k : kAllKinds) {
      const IntMatrix c = root_system(k).cartan();
      const int n = static_cast<int>(c.rows());
      const RationalMatrix inv = inverse_over_q(c);
      if (inv.rows() == 0) throw std::logic_error("Cartan matrix is singular");
      // det of the Cartan matrix is 4, 3, 2, 1 for D4, E6, E7, E8.
      const Int det = k == Kind::D4 ? 4 : k == Kind::E6 ? 3 : k == Kind::E7 ? 2 : 1;
      IntMatrix adj(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational v = inv(i, j) * det;
          if (v.get_den() != 1) throw std::logic_error("Cartan determinant table is wrong");
          adj(i, j) = to_int(v);
        }
      if (c * adj != IntMatrix::Identity(n, n) * det) throw std::logic_error("Cartan adjugate check failed");
      out[static_cast<std::size_t>(k)] = {adj, det};
    }
    return out;
  }();
  return table[static_cast<std::size_t>(kind)];
}

/// Solves C x = rhs over Z; nullopt if the solution is not integral.
std::optional<IntVector> solve_cartan(Kind kind, const IntVector& rhs) {
  const FiniteInverseData& d = inverse_data(kind);
  IntVector num = d.adjugate * rhs;
  for (Eigen::Index i = 0; i < num.size(); ++i) {
    if (num(i) % d.det != 0) return std::nullopt;
    num(i) /= d.det;
  }
  return num;
}

/// u -> u - (u|lam) x + (u|x) lam - (lam|lam)/2 (u|x) x.
IntMatrix eichler_transform(const IntMatrix& g, const IntVector& x, const IntVector& lam) {
  const IntVector gl = g * lam;
  const IntVector gx = g * x;
  const Int norm = lam.dot(gl);
  if (norm % 2 != 0) throw std::invalid_argument("eichler_transform: odd norm");
  const Int q = norm / 2;
  const Eigen::Index dim = g.rows();
  IntMatrix m = IntMatrix::Identity(dim, dim);
  m -= x * gl.transpose();
  m += lam * gx.transpose();
  m -= q * (x * gx.transpose());
  return m;
}

IntVector unit(Eigen::Index dim, Eigen::Index i) {
  IntVector v = IntVector::Zero(dim);
  v(i) = 1;
  return v;
}

/// mu (finite part + b coefficient) as an ambient vector.
IntVector embed_mu(const IntVector& mu, int n, Eigen::Index dim) {
  IntVector v = IntVector::Zero(dim);
  v.head(n) = mu.head(n);
  if (mu.size() > n) v(n + 1) = mu(n);
  return v;
}

IntVector embed_finite(const IntVector& lam, Eigen::Index dim) {
  IntVector v = IntVector::Zero(dim);
  v.head(lam.size()) = lam;
  return v;
}

void require_root(Kind kind, const RootVector& gamma) {
  if (!is_root(kind, gamma)) throw NotARootError("not a root: " + to_string(gamma));
}

}  // namespace

bool is_isometry(Kind kind, Ambient ambient, const IntMatrix& m) {
  const IntMatrix g = gram_matrix(kind, ambient);
  if (m.rows() != g.rows() || m.cols() != g.cols()) return false;
  return m.transpose() * g * m == g;
}

GroupMatrix::GroupMatrix(Kind kind, Ambient ambient, IntMatrix m)
    : kind_(kind), ambient_(ambient), m_(std::move(m)) {
  if (!is_isometry(kind_, ambient_, m_))
    throw IsometryError("matrix does not preserve the Gram form of " + std::string(to_string(ambient_)));
}

GroupMatrix::GroupMatrix(Kind kind, Ambient ambient, IntMatrix m, Unchecked)
    : kind_(kind), ambient_(ambient), m_(std::move(m)) {}

GroupMatrix GroupMatrix::identity(Kind kind, Ambient ambient) {
  const int dim = ambient_dim(kind, ambient);
  return GroupMatrix(kind, ambient, IntMatrix::Identity(dim, dim), Unchecked{});
}

bool GroupMatrix::is_identity() const { return m_ == IntMatrix::Identity(m_.rows(), m_.cols()); }

GroupMatrix GroupMatrix::operator*(const GroupMatrix& other) const {
  if (kind_ != other.kind_ || ambient_ != other.ambient_)
    throw std::invalid_argument("GroupMatrix product across different ambients");
  return GroupMatrix(kind_, ambient_, m_ * other.m_);
}

GroupMatrix GroupMatrix::inverse() const {
  if (m_ * m_ == IntMatrix::Identity(m_.rows(), m_.cols())) return *this;  // involutions are common
  const RationalMatrix q = inverse_over_q(m_);
  if (q.rows() == 0) throw IsometryError("GroupMatrix is singular");
  IntMatrix inv(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) {
      if (q(i, j).get_den() != 1) throw IsometryError("GroupMatrix inverse is not integral");
      inv(i, j) = to_int(q(i, j));
    }
  return GroupMatrix(kind_, ambient_, inv);
}

GroupMatrix GroupMatrix::pow(long long e) const {
  GroupMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  IntMatrix result = IntMatrix::Identity(m_.rows(), m_.cols());
  IntMatrix b = base.m_;
  while (k) {
    if (k & 1) result = result * b;
    b = b * b;
    k >>= 1;
  }
  return GroupMatrix(kind_, ambient_, result);
}

RationalSubspace fixed_space(const GroupMatrix& g) { return fixed_space(g.kind(), g.ambient(), g.matrix()); }

GroupMatrix reflection_matrix(Kind kind, const RootVector& gamma, Ambient ambient) {
  require_root(kind, gamma);
  const IntMatrix g = gram_matrix(kind, ambient);
  const IntVector v = embed(kind, gamma, ambient);
  const Eigen::Index dim = g.rows();
  IntMatrix m = IntMatrix::Identity(dim, dim) - v * (g * v).transpose();
  return GroupMatrix(kind, ambient, m);
}

GroupMatrix transvection(Kind kind, Radical x, const IntVector& lambda, Ambient ambient) {
  const int n = finite_type_data(kind).n;
  const Eigen::Index dim = ambient_dim(kind, ambient);
  const BasisIndex idx{n};
  IntVector lam;
  if (lambda.size() == n) {
    lam = embed_finite(lambda, dim);
  } else if (lambda.size() == n + 1 && x == Radical::a) {
    lam = embed_mu(lambda, n, dim);
  } else {
    throw std::invalid_argument("transvection: lambda has the wrong length");
  }
  const IntVector xv = unit(dim, x == Radical::a ? idx.a() : idx.b());
  return GroupMatrix(kind, ambient, eichler_transform(gram_matrix(kind, ambient), xv, lam));
}

IntMatrix eichler_endomorphism(Kind kind, const TensorWord& word) {
  const IntMatrix g = gram_matrix(kind, Ambient::Vtilde);
  const int n = finite_type_data(kind).n;
  const Eigen::Index dim = g.rows();
  IntMatrix m = IntMatrix::Identity(dim, dim);
  for (const auto& [f, gv] : word.terms) {
    if (f.size() != dim || gv.size() != n + 2) throw std::invalid_argument("eichler: term has the wrong shape");
    IntVector gt = IntVector::Zero(dim);
    gt.head(n + 2) = gv;
    gt(n) = 0;  // g is read modulo U = R a
    m -= f * (g * gt).transpose();
  }
  return m;
}

GroupMatrix eichler(Kind kind, const TensorWord& word) {
  return GroupMatrix(kind, Ambient::Vtilde, eichler_endomorphism(kind, word));
}

TensorWord compose(Kind kind, const TensorWord& phi1, const TensorWord& phi2) {
  const IntMatrix g = gram_matrix(kind, Ambient::Vtilde);
  const int n = finite_type_data(kind).n;
  TensorWord out = phi1;
  out.terms.insert(out.terms.end(), phi2.terms.begin(), phi2.terms.end());
  for (const auto& [f1, g1] : phi1.terms) {
    IntVector g1t = IntVector::Zero(g.rows());
    g1t.head(n + 2) = g1;
    g1t(n) = 0;
    for (const auto& [f2, g2] : phi2.terms) {
      const Int c = g1t.dot(g * f2);
      if (c != 0) out.terms.emplace_back(IntVector(-c * f1), g2);
    }
  }
  return out;
}

IntMatrix finite_reflection(Kind kind, const std::vector<int>& beta) {
  const IntMatrix& c = root_system(kind).cartan();
  const Eigen::Index n = c.rows();
  IntVector b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = beta[static_cast<std::size_t>(i)];
  return IntMatrix::Identity(n, n) - b * (c * b).transpose();
}

IntMatrix finite_inverse(Kind kind, const IntMatrix& w) {
  const FiniteInverseData& d = inverse_data(kind);
  const IntMatrix& c = root_system(kind).cartan();
  IntMatrix num = d.adjugate * w.transpose() * c;
  for (Eigen::Index i = 0; i < num.rows(); ++i)
    for (Eigen::Index j = 0; j < num.cols(); ++j) {
      if (num(i, j) % d.det != 0) throw std::invalid_argument("finite_inverse: not an isometry of the root lattice");
      num(i, j) /= d.det;
    }
  return num;
}

bool in_finite_weyl_group(Kind kind, const IntMatrix& w) {
  const FiniteRootSystem& rs = root_system(kind);
  const IntMatrix& c = rs.cartan();
  const int n = rs.rank();
  if (w.rows() != n || w.cols() != n) return false;
  if (w.transpose() * c * w != c) return false;
  IntMatrix u = w;
  // Multiply on the right by simple reflections that send a simple root to a
  // negative root; each step lowers the length, so this terminates in at
  // most N steps. What remains is a diagram automorphism.
  for (int step = 0; step <= rs.num_positive(); ++step) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i) {
      std::vector<int> col(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = static_cast<int>(u(j, i));
      const int idx = rs.index_of(col);
      if (idx < 0) return false;
      if (!rs.is_positive(idx)) descent = i;
    }
    if (descent < 0) return u == IntMatrix::Identity(n, n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(descent)] = 1;
    u = u * finite_reflection(kind, e);
  }
  return false;
}

Triple identity_triple(Kind kind) {
  const int n = finite_type_data(kind).n;
  return {kind, IntMatrix::Identity(n, n), IntVector::Zero(n), IntVector::Zero(n + 1)};
}

Triple triple_mul(const Triple& x, const Triple& y) {
  if (x.kind != y.kind) throw std::invalid_argument("triple_mul: kinds differ");
  const int n = finite_type_data(x.kind).n;
  const IntMatrix& c = root_system(x.kind).cartan();
  const IntMatrix w2inv = finite_inverse(x.kind, y.w_fin);
  Triple out{x.kind, x.w_fin * y.w_fin, w2inv * x.lambda + y.lambda, IntVector(n + 1)};
  // t_b(lambda_2)^{-1} w_2^{-1}(mu_1): the finite part moves by w_2^{-1},
  // the b-coefficient picks up (mu_fin | lambda_2).
  const IntVector mu_fin = w2inv * x.mu.head(n);
  out.mu.head(n) = mu_fin + y.mu.head(n);
  out.mu(n) = x.mu(n) + mu_fin.dot(c * y.lambda) + y.mu(n);
  return out;
}

Triple operator*(const Triple& x, const Triple& y) { return triple_mul(x, y); }

Triple triple_inverse(const Triple& x) {
  const int n = finite_type_data(x.kind).n;
  const IntMatrix& c = root_system(x.kind).cartan();
  const IntMatrix winv = finite_inverse(x.kind, x.w_fin);
  Triple out{x.kind, winv, -(x.w_fin * x.lambda), IntVector(n + 1)};
  out.mu.head(n) = -(x.w_fin * x.mu.head(n));
  out.mu(n) = -x.mu(n) + x.mu.head(n).dot(c * x.lambda);
  return out;
}

Triple triple_pow(const Triple& x, long long e) {
  Triple base = e < 0 ? triple_inverse(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Triple result = identity_triple(x.kind);
  while (k) {
    if (k & 1) result = triple_mul(result, base);
    base = triple_mul(base, base);
    k >>= 1;
  }
  return result;
}

Triple reflection_triple(Kind kind, const RootVector& gamma) {
  require_root(kind, gamma);
  const int n = finite_type_data(kind).n;
  IntVector alpha(n);
  for (int i = 0; i < n; ++i) alpha(i) = gamma.beta[static_cast<std::size_t>(i)];
  Triple out{kind, finite_reflection(kind, gamma.beta), Int(gamma.l) * alpha, IntVector(n + 1)};
  out.mu.head(n) = Int(gamma.k) * alpha;
  out.mu(n) = Int(gamma.k) * gamma.l;
  return out;
}

Triple product_triple(Kind kind, const std::vector<RootVector>& roots) {
  Triple p = identity_triple(kind);
  for (const RootVector& r : roots) p = triple_mul(p, reflection_triple(kind, r));
  return p;
}

GroupMatrix triple_to_matrix(const Triple& x, Ambient ambient) {
  const int n = finite_type_data(x.kind).n;
  const Eigen::Index dim = ambient_dim(x.kind, ambient);
  const IntMatrix g = gram_matrix(x.kind, ambient);
  const BasisIndex idx{n};
  IntMatrix e = IntMatrix::Identity(dim, dim);
  e.topLeftCorner(n, n) = x.w_fin;
  const IntMatrix tb = eichler_transform(g, unit(dim, idx.b()), embed_finite(x.lambda, dim));
  const IntMatrix ta = eichler_transform(g, unit(dim, idx.a()), embed_mu(x.mu, n, dim));
  return GroupMatrix(x.kind, ambient, e * tb * ta);
}

Triple matrix_to_triple(const GroupMatrix& gm) {
  if (gm.ambient() != Ambient::Vtilde) throw NotInGroupError("matrix_to_triple expects an element acting on Vtilde");
  const Kind kind = gm.kind();
  const int n = finite_type_data(kind).n;
  const BasisIndex idx{n};
  const IntMatrix& m = gm.matrix();
  if (m.col(idx.a()) != unit(m.rows(), idx.a()) || m.col(idx.b()) != unit(m.rows(), idx.b()))
    throw NotInGroupError("matrix is not the identity on the radical span(a, b)");
  const IntMatrix w = m.topLeftCorner(n, n);
  if (!in_finite_weyl_group(kind, w)) throw NotInGroupError("finite block is not in W_fin");
  // Column i: w(alpha_i) - (alpha_i|lambda) b - (alpha_i|mu_fin) a.
  const auto lambda = solve_cartan(kind, IntVector(-m.row(idx.b()).head(n).transpose()));
  const auto mu_fin = solve_cartan(kind, IntVector(-m.row(idx.a()).head(n).transpose()));
  if (!lambda || !mu_fin) throw NotInGroupError("translation parts are not in the root lattice");
  Triple out{kind, w, *lambda, IntVector(n + 1)};
  out.mu.head(n) = *mu_fin;
  // Column b': b' + w(lambda) - (lambda|lambda)/2 b - mu_b a.
  out.mu(n) = -m(idx.a(), idx.b_prime());
  if (triple_to_matrix(out, Ambient::Vtilde).matrix() != m)
    throw NotInGroupError("matrix does not have the normal form e(w) TR_b(lambda) TR_a(mu)");
  return out;
}

GroupMatrix projection_phi(const GroupMatrix& m) {
  const int n = finite_type_data(m.kind()).n;
  if (m.ambient() == Ambient::V) return m;
  const Eigen::Index vdim = n + 2;
  const IntMatrix& raw = m.matrix();
  if (raw.bottomLeftCorner(raw.rows() - vdim, vdim) != IntMatrix::Zero(raw.rows() - vdim, vdim))
    throw std::invalid_argument("projection_phi: V is not invariant");
  return GroupMatrix(m.kind(), Ambient::V, raw.topLeftCorner(vdim, vdim));
}

GroupMatrix projection_phi(const Triple& x) { return triple_to_matrix(x, Ambient::V); }

std::vector<RootVector> coxeter_roots(Kind kind) {
  const FiniteTypeData& d = finite_type_data(kind);
  const EllipticBasis basis = elliptic_basis(kind);
  std::vector<RootVector> roots;
  for (int i = 1; i <= d.n; ++i)
    if (i != d.t) roots.push_back(basis.alpha[static_cast<std::size_t>(i - 1)]);
  roots.push_back(canonical(basis.alpha0()));
  roots.push_back(basis.alpha[static_cast<std::size_t>(d.t - 1)]);
  roots.push_back(basis.alpha_tstar());
  return roots;
}

Triple coxeter_triple(Kind kind) { return product_triple(kind, coxeter_roots(kind)); }

GroupMatrix coxeter_transformation(Kind kind, Realization which) {
  const Ambient ambient = which == Realization::W ? Ambient::V
                          : which == Realization::Wtilde ? Ambient::Vtilde
                                                          : Ambient::Vhat;
  GroupMatrix p = GroupMatrix::identity(kind, ambient);
  for (const RootVector& r : coxeter_roots(kind)) p = p * reflection_matrix(kind, r, ambient);
  return p;
}

std::optional<int> order_in_W(const GroupMatrix& m, int cap) {
  if (cap < 1) throw std::invalid_argument("order_in_W: cap must be positive");
  const IntMatrix id = IntMatrix::Identity(m.matrix().rows(), m.matrix().cols());
  IntMatrix p = m.matrix();
  for (int i = 1; i <= cap; ++i) {
    if (p == id) return i;
    p = p * m.matrix();
  }
  return std::nullopt;
}

Triple central_z(Kind kind) {
  Triple z = identity_triple(kind);
  z.mu(finite_type_data(kind).n) = 1;
  return z;
}

}  // namespace ellweyl
