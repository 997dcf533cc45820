#include "curvscale/limit_solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "curvscale/errors.hpp"

namespace curvscale {

namespace {

// Frobenius inner product.
double dot(const Mat& a, const Mat& b) { return (a.array() * b.array()).sum(); }

struct SpectralData {
  Eigen::VectorXd scale;    // Jacobi scaling s_a
  Eigen::MatrixXd eigvecs;  // of diag(s) gram diag(s)
  Eigen::VectorXd eigvals;
};

SpectralData decompose(const Eigen::MatrixXd& gram) {
  const int N = static_cast<int>(gram.rows());
  SpectralData sd;
  sd.scale.resize(N);
  for (int a = 0; a < N; ++a)
    sd.scale[a] = gram(a, a) > 1e-300 ? 1.0 / std::sqrt(gram(a, a)) : 1.0;
  Eigen::MatrixXd scaled =
      sd.scale.asDiagonal() * gram * sd.scale.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled);
  if (es.info() != Eigen::Success)
    throw SingularDecompositionFailure("solve_m: gram eigendecomposition failed");
  sd.eigvecs = es.eigenvectors();
  sd.eigvals = es.eigenvalues();
  return sd;
}

std::pair<double, Eigen::VectorXd> solve_with(const SpectralData& sd,
                                              const Eigen::VectorXd& rhs,
                                              double c0) {
  const int N = static_cast<int>(rhs.size());
  const double lmax = sd.eigvals.size() ? sd.eigvals[N - 1] : 0.0;
  if (sd.eigvals.size() && sd.eigvals[0] < -1e-10)
    throw IndefiniteGram("solve_m: gram has a negative eigenvalue");
  const double cutoff = 1e-10 * std::max(lmax, 0.0);

  Eigen::VectorXd bt = sd.scale.asDiagonal() * rhs;
  Eigen::VectorXd proj = sd.eigvecs.transpose() * bt;
  Eigen::VectorXd ct = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < N; ++i)
    if (sd.eigvals[i] > cutoff) ct += (proj[i] / sd.eigvals[i]) * sd.eigvecs.col(i);
  Eigen::VectorXd c = sd.scale.asDiagonal() * ct;
  double m = c0 - rhs.dot(c);
  if (m < 0.0) {
    if (m < -1e-9 * std::max(1.0, c0))
      throw IndefiniteGram("solve_m: negative minimum beyond roundoff");
    m = 0.0;
  }
  return {m, std::move(c)};
}

}  // namespace

LimitAssembler::LimitAssembler(const PolyVectorBasis& basis)
    : basis_(basis),
      rule_(ball_quadrature(basis.space_dim(),
                            std::max(2 * std::max(basis.degree() - 1, 2), 4) + 2)) {
  const int N = basis_.size();
  gram_.setZero(N, N);
  const int n = basis_.space_dim();
  Eigen::MatrixXd S(N, n * n);
  for (size_t q = 0; q < rule_.nodes.size(); ++q) {
    for (int a = 0; a < N; ++a) {
      const Mat g = basis_.sym_grad(a, rule_.nodes[q]);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) S(a, i * n + k) = g(i, k);
    }
    gram_.noalias() += rule_.weights[q] * (S * S.transpose());
  }
  const SpectralData sd = decompose(gram_);
  scale_ = sd.scale;
  eigvecs_ = sd.eigvecs;
  eigvals_ = sd.eigvals;
}

QuadraticProblem LimitAssembler::assemble(const CurvatureTensor& A) const {
  if (A.dim() != basis_.space_dim())
    throw DimensionMismatch("assemble_limit_functional: tensor/basis dimension mismatch");
  const int N = basis_.size();
  QuadraticProblem prob;
  prob.gram = gram_;
  prob.rhs = Eigen::VectorXd::Zero(N);
  prob.c0 = 0.0;
  for (size_t q = 0; q < rule_.nodes.size(); ++q) {
    const Vec& x = rule_.nodes[q];
    const double w = rule_.weights[q];
    const Mat B = b_field(A, x);
    prob.c0 += w * dot(B, B);
    for (int a = 0; a < N; ++a)
      prob.rhs[a] += w * dot(basis_.sym_grad(a, x), B);
  }
  return prob;
}

std::pair<double, Eigen::VectorXd> LimitAssembler::minimize(
    const CurvatureTensor& A) const {
  const QuadraticProblem prob = assemble(A);
  SpectralData sd;
  sd.scale = scale_;
  sd.eigvecs = eigvecs_;
  sd.eigvals = eigvals_;
  return solve_with(sd, prob.rhs, prob.c0);
}

int LimitAssembler::kernel_dimension() const {
  const double lmax = eigvals_[eigvals_.size() - 1];
  int k = 0;
  for (int i = 0; i < eigvals_.size(); ++i)
    if (eigvals_[i] <= 1e-10 * lmax) ++k;
  return k;
}

QuadraticProblem assemble_limit_functional(const CurvatureTensor& A,
                                           const PolyVectorBasis& basis) {
  return LimitAssembler(basis).assemble(A);
}

std::pair<double, Eigen::VectorXd> solve_m(const QuadraticProblem& prob) {
  return solve_with(decompose(prob.gram), prob.rhs, prob.c0);
}

double m_of_Q(const CurvatureTensor& R, const CurvatureTensor& Rt,
              const Rotation& Q, const PolyVectorBasis& basis) {
  return LimitAssembler(basis).minimize(R - pullback_curvature(Rt, Q)).first;
}

namespace {

// Nelder-Mead on m(Q0 exp(S)) in the skew-parameter chart.
template <class F>
std::pair<Eigen::VectorXd, double> nelder_mead(F&& f, const Eigen::VectorXd& x0,
                                               double step, double tol,
                                               int max_iters) {
  const int d = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> xs(d + 1, x0);
  std::vector<double> fs(d + 1);
  for (int i = 1; i <= d; ++i) xs[i][i - 1] += step;
  for (int i = 0; i <= d; ++i) fs[i] = f(xs[i]);

  auto order = [&] {
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (fs[j] < fs[i]) {
          std::swap(fs[i], fs[j]);
          std::swap(xs[i], xs[j]);
        }
  };
  order();

  for (int iter = 0; iter < max_iters && fs[d] - fs[0] > tol; ++iter) {
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) centroid += xs[i];
    centroid /= d;

    Eigen::VectorXd xr = centroid + (centroid - xs[d]);
    const double fr = f(xr);
    if (fr < fs[0]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[d]);
      const double fe = f(xe);
      if (fe < fr) {
        xs[d] = xe;
        fs[d] = fe;
      } else {
        xs[d] = xr;
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = xr;
      fs[d] = fr;
    } else {
      Eigen::VectorXd xc = centroid + 0.5 * (xs[d] - centroid);
      const double fc = f(xc);
      if (fc < fs[d]) {
        xs[d] = xc;
        fs[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
        }
      }
    }
    order();
  }
  return {xs[0], fs[0]};
}

}  // namespace

QSearchResult minimize_over_rotations(const CurvatureTensor& R,
                                      const CurvatureTensor& Rt,
                                      const PolyVectorBasis& basis,
                                      const QSearchConfig& search) {
  const int n = basis.space_dim();
  if (R.dim() != n || Rt.dim() != n)
    throw DimensionMismatch("minimize_over_rotations: dimension mismatch");
  if ((n == 2 && search.grid_size < 8) || (n == 3 && search.grid_size < 64))
    throw InvalidInput("minimize_over_rotations: grid_size too small");

  LimitAssembler assembler(basis);
  auto m_at = [&](const Rotation& Q) {
    return assembler.minimize(R - pullback_curvature(Rt, Q)).first;
  };

  std::mt19937_64 rng(search.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const int d = n * (n - 1) / 2;
  std::vector<std::pair<double, Rotation>> grid;
  grid.reserve(search.grid_size + 1);
  grid.emplace_back(m_at(Rotation::identity(n)), Rotation::identity(n));
  if (n == 2) {
    for (int i = 1; i < search.grid_size; ++i) {
      Rotation Q = Rotation::planar(2.0 * M_PI * i / search.grid_size);
      grid.emplace_back(m_at(Q), Q);
    }
  } else {
    for (int i = 1; i < search.grid_size; ++i) {
      Vec s(3);
      s << gauss(rng), gauss(rng), gauss(rng);
      s *= M_PI * std::cbrt(uni(rng)) / s.norm();
      Rotation Q = Rotation::exp_skew(s, 3);
      grid.emplace_back(m_at(Q), Q);
    }
  }
  std::sort(grid.begin(), grid.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Rotation best_Q = grid[0].second;
  double best_m = grid[0].first;
  const double init_step = n == 2 ? 2.0 * M_PI / search.grid_size : 0.4;
  const int starts = std::max(1, search.seeds);
  for (int k = 0; k < starts; ++k) {
    const Rotation Q0 =
        k < static_cast<int>(grid.size()) ? grid[k].second : grid[0].second;
    auto obj = [&](const Eigen::VectorXd& s) {
      Vec sv = s.head(d);
      return m_at(Rotation(Mat(Q0.matrix() * Rotation::exp_skew(sv, n).matrix())));
    };
    auto [s_opt, f_opt] =
        nelder_mead(obj, Eigen::VectorXd::Zero(d), init_step, search.tol, 200 * d);
    if (f_opt < best_m) {
      best_m = f_opt;
      Vec sv = s_opt.head(d);
      best_Q = Rotation(Mat(Q0.matrix() * Rotation::exp_skew(sv, n).matrix()));
    }
  }
  return {best_Q, best_m};
}

}  // namespace curvscale
