#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "zforce/errors.hpp"
#include "zforce/graph.hpp"
#include "zforce/spectral_class.hpp"

namespace zforce {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct Tolerances {
  /// |Im l| <= realness * max(1, |l|) counts as real.
  double realness = 1e-8;
  /// |l| <= zero * ||A||_2 counts as the zero eigenvalue.
  double zero = 1e-8;
  /// Singular values <= rank * sigma_max are treated as zero.
  double rank = 1e-10;
  /// PBH block is rank deficient when sigma_min <= pbh * ||A||_2.
  double pbh = 1e-8;
};

template <typename Scalar>
struct SpectralRecordT {
  std::complex<Scalar> eigenvalue;
  SpectralClass cls = SpectralClass::zero;
  int algebraic_multiplicity = 1;
  int geometric_multiplicity = 1;
  Scalar pbh_margin = std::numeric_limits<Scalar>::quiet_NaN();
  bool controllable = true;
};

using SpectralRecord = SpectralRecordT<double>;

/// Singular values in decreasing order.
template <typename Derived>
VectorX<typename Derived::RealScalar> singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Plain = MatrixX<typename Derived::Scalar>;
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Plain> svd{Plain(m)};
  return svd.singularValues();
}

template <typename Derived>
typename Derived::RealScalar spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  const auto s = singular_values(m);
  return s.size() == 0 ? typename Derived::RealScalar(0) : s(0);
}

/// Number of singular values above rel_tol * sigma_max.
template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar rel_tol) {
  const auto s = singular_values(m);
  if (s.size() == 0 || s(0) == 0) return 0;
  const auto threshold = rel_tol * s(0);
  return static_cast<int>((s.array() > threshold).count());
}

/// Orthonormal basis (as columns) of the right null space of m.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m,
                                             typename Derived::RealScalar rel_tol) {
  using Plain = MatrixX<typename Derived::Scalar>;
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Plain::Identity(cols, cols);
  Eigen::JacobiSVD<Plain> svd(Plain(m), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return Plain::Identity(cols, cols);
  const Eigen::Index rank = (s.array() > rel_tol * s(0)).count();
  return svd.matrixV().rightCols(cols - rank);
}

namespace detail {

template <typename Scalar>
MatrixX<std::complex<Scalar>> shifted_complex(const MatrixX<Scalar>& a, std::complex<Scalar> lambda) {
  MatrixX<std::complex<Scalar>> m = a.template cast<std::complex<Scalar>>();
  m.diagonal().array() -= lambda;
  return m;
}

template <typename Scalar>
MatrixX<Scalar> shifted_real(const MatrixX<Scalar>& a, Scalar lambda) {
  MatrixX<Scalar> m = a;
  m.diagonal().array() -= lambda;
  return m;
}

/// n - rank(A - lambda I).
template <typename Scalar>
int geometric_multiplicity(const MatrixX<Scalar>& a, std::complex<Scalar> lambda, Scalar rel_tol) {
  const int n = static_cast<int>(a.rows());
  if (lambda.imag() == Scalar(0)) return n - numerical_rank(shifted_real(a, lambda.real()), rel_tol);
  return n - numerical_rank(shifted_complex(a, lambda), rel_tol);
}

/// dim ker (A - mu I)^k, thresholded against ||A - mu I||^k.
template <typename Scalar>
int generalized_kernel_dimension(const MatrixX<Scalar>& a, std::complex<Scalar> mu, int k, Scalar rel_tol) {
  auto count = [&](const auto& shifted) {
    using M = std::decay_t<decltype(shifted)>;
    const Scalar base = spectral_norm(shifted);
    if (base == Scalar(0)) return static_cast<int>(a.rows());
    M power = shifted;
    for (int i = 1; i < k; ++i) power = (power * shifted).eval();
    const auto s = singular_values(power);
    const Scalar threshold = rel_tol * std::pow(base, Scalar(k));
    return static_cast<int>((s.array() <= threshold).count());
  };
  if (mu.imag() == Scalar(0)) return count(shifted_real(a, mu.real()));
  return count(shifted_complex(a, mu));
}

template <typename Scalar>
std::complex<Scalar> snap_real(std::complex<Scalar> z, Scalar realness) {
  if (std::abs(z.imag()) <= realness * std::max(Scalar(1), std::abs(z))) return {z.real(), Scalar(0)};
  return z;
}

template <typename Scalar>
struct Cluster {
  std::complex<Scalar> value;
  int size;
  int geometric;
};

/// Groups computed eigenvalues that are perturbations of one multiple
/// eigenvalue. A single-linkage group at radius `delta` is accepted when its
/// mean is an eigenvalue whose generalized eigenspace has the group's size;
/// otherwise the group is split at a tenth of the radius.
template <typename Scalar>
class EigenClusterer {
 public:
  EigenClusterer(const MatrixX<Scalar>& a, std::vector<std::complex<Scalar>> eig, const Tolerances& tol)
      : a_(a), eig_(std::move(eig)), tol_(tol) {}

  std::vector<Cluster<Scalar>> run(Scalar scale) {
    std::vector<int> all(eig_.size());
    std::iota(all.begin(), all.end(), 0);
    min_delta_ = Scalar(1e-9) * scale;
    split(all, Scalar(0.1) * scale);
    return std::move(out_);
  }

 private:
  void split(const std::vector<int>& idx, Scalar delta) {
    for (const std::vector<int>& comp : components(idx, delta)) {
      if (comp.size() == 1) {
        singleton(comp.front());
        continue;
      }
      std::complex<Scalar> mean(0);
      for (int i : comp) mean += eig_[static_cast<std::size_t>(i)];
      mean /= Scalar(comp.size());
      mean = snap_real(mean, Scalar(tol_.realness));
      const int k = static_cast<int>(comp.size());
      const int g = geometric_multiplicity(a_, mean, Scalar(tol_.rank));
      if (g >= 1 && generalized_kernel_dimension(a_, mean, k, Scalar(tol_.rank)) == k) {
        out_.push_back({mean, k, g});
      } else if (delta > min_delta_) {
        split(comp, delta / Scalar(10));
      } else {
        for (int i : comp) singleton(i);
      }
    }
  }

  void singleton(int i) {
    const std::complex<Scalar> value = snap_real(eig_[static_cast<std::size_t>(i)], Scalar(tol_.realness));
    const int g = geometric_multiplicity(a_, value, Scalar(tol_.rank));
    out_.push_back({value, 1, std::max(1, g)});
  }

  std::vector<std::vector<int>> components(const std::vector<int>& idx, Scalar delta) const {
    std::vector<int> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (std::abs(eig_[static_cast<std::size_t>(idx[i])] - eig_[static_cast<std::size_t>(idx[j])]) <= delta) {
          parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
        }
      }
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> slot(idx.size(), -1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const int root = find(static_cast<int>(i));
      if (slot[static_cast<std::size_t>(root)] < 0) {
        slot[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(idx[i]);
    }
    return groups;
  }

  const MatrixX<Scalar>& a_;
  std::vector<std::complex<Scalar>> eig_;
  Tolerances tol_;
  Scalar min_delta_ = 0;
  std::vector<Cluster<Scalar>> out_;
};

}  // namespace detail

/// Distinct eigenvalues of A with multiplicities and spectral class. The
/// geometric multiplicity is the dimension of the left eigenspace, which
/// equals n - rank(A - lambda I). Algebraic multiplicities sum to n.
template <typename Derived>
std::vector<SpectralRecordT<typename Derived::Scalar>> left_eigen_analysis(const Eigen::MatrixBase<Derived>& a_in,
                                                                           const Tolerances& tol = {}) {
  using Scalar = typename Derived::Scalar;
  static_assert(!Eigen::NumTraits<Scalar>::IsComplex, "left_eigen_analysis expects a real matrix");
  const MatrixX<Scalar> a = a_in;
  if (a.rows() != a.cols()) throw std::invalid_argument("left_eigen_analysis needs a square matrix");
  const int n = static_cast<int>(a.rows());
  std::vector<SpectralRecordT<Scalar>> records;
  if (n == 0) return records;

  const Scalar scale = spectral_norm(a);
  if (scale == Scalar(0)) {
    records.push_back({{Scalar(0), Scalar(0)}, SpectralClass::zero, n, n});
    return records;
  }

  Eigen::EigenSolver<MatrixX<Scalar>> solver(a, false);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
  std::vector<std::complex<Scalar>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  for (const auto& c : detail::EigenClusterer<Scalar>(a, std::move(eig), tol).run(scale)) {
    SpectralRecordT<Scalar> r;
    r.eigenvalue = c.value;
    r.algebraic_multiplicity = c.size;
    r.geometric_multiplicity = c.geometric;
    if (std::abs(c.value) <= Scalar(tol.zero) * scale) {
      r.cls = SpectralClass::zero;
    } else if (c.value.imag() != Scalar(0)) {
      r.cls = SpectralClass::complex;
    } else {
      r.cls = c.value.real() > Scalar(0) ? SpectralClass::positive : SpectralClass::negative;
    }
    records.push_back(r);
  }
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    if (x.eigenvalue.real() != y.eigenvalue.real()) return x.eigenvalue.real() < y.eigenvalue.real();
    return x.eigenvalue.imag() < y.eigenvalue.imag();
  });
  return records;
}

/// Smallest singular value of [A - lambda I | B], B the unit columns of
/// `controls`. Zero iff some left eigenvector of lambda annihilates B.
template <typename Derived>
typename Derived::Scalar pbh_margin(const Eigen::MatrixBase<Derived>& a_in, const NodeSet& controls,
                                    std::complex<typename Derived::Scalar> lambda) {
  using Scalar = typename Derived::Scalar;
  const MatrixX<Scalar> a = a_in;
  const Eigen::Index n = a.rows();
  if (n == 0) return std::numeric_limits<Scalar>::infinity();
  const Eigen::Index m = static_cast<Eigen::Index>(controls.size());
  auto smallest = [&](const auto& shifted) {
    using M = std::decay_t<decltype(shifted)>;
    M block = M::Zero(n, n + m);
    block.leftCols(n) = shifted;
    Eigen::Index col = n;
    for (Node c : controls) block(c, col++) = 1;
    return singular_values(block)(n - 1);
  };
  if (lambda.imag() == Scalar(0)) return smallest(detail::shifted_real(a, lambda.real()));
  return smallest(detail::shifted_complex(a, lambda));
}

template <typename Scalar>
struct PbhVerdict {
  bool controllable;
  Scalar margin;
};

template <typename Derived>
PbhVerdict<typename Derived::Scalar> pbh_controllable(const Eigen::MatrixBase<Derived>& a, const NodeSet& controls,
                                                      std::complex<typename Derived::Scalar> lambda,
                                                      const Tolerances& tol = {}) {
  using Scalar = typename Derived::Scalar;
  const Scalar margin = pbh_margin(a, controls, lambda);
  const Scalar threshold = Scalar(tol.pbh) * spectral_norm(a);
  return {margin > threshold, margin};
}

/// Orthonormal basis of {v : v^T A = lambda v^T} for real lambda.
template <typename Derived>
MatrixX<typename Derived::Scalar> left_eigenspace(const Eigen::MatrixBase<Derived>& a,
                                                  typename Derived::Scalar lambda, const Tolerances& tol = {}) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> shifted = a;
  shifted.diagonal().array() -= lambda;
  return null_space(shifted.transpose(), Scalar(tol.rank));
}

}  // namespace zforce
