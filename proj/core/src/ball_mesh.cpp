#include "curvscale/ball_mesh.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "curvscale/errors.hpp"

namespace curvscale {

namespace {

double signed_volume(int n, const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  if (n == 2) {
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
  }
  Eigen::Matrix3d e;
  e.col(0) = (b - a).head(3);
  e.col(1) = (c - a).head(3);
  e.col(2) = (d - a).head(3);
  return e.determinant() / 6.0;
}

std::vector<std::array<double, 4>> barycentric_rule(int n, int order,
                                                    std::vector<double>& weights) {
  if (order == 1) {
    weights = {1.0};
    if (n == 2) return {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0}};
    return {{0.25, 0.25, 0.25, 0.25}};
  }
  if (order != 2) throw UnsupportedOrder("BallMesh: cell quadrature order must be 1 or 2");
  if (n == 2) {
    weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return {{0.5, 0.5, 0.0, 0.0}, {0.0, 0.5, 0.5, 0.0}, {0.5, 0.0, 0.5, 0.0}};
  }
  const double a = (5.0 + 3.0 * std::sqrt(5.0)) / 20.0;
  const double b = (5.0 - std::sqrt(5.0)) / 20.0;
  weights = {0.25, 0.25, 0.25, 0.25};
  return {{a, b, b, b}, {b, a, b, b}, {b, b, a, b}, {b, b, b, a}};
}

}  // namespace

BallMesh::BallMesh(int n, std::vector<Vec> vertices, std::vector<Cell> cells,
                   int cell_quad_order, int refinement)
    : n_(n),
      refinement_(refinement),
      vertices_(std::move(vertices)),
      cells_(std::move(cells)) {
  qb_ = barycentric_rule(n_, cell_quad_order, qw_);
  volumes_.resize(cells_.size());
  grads_.resize(cells_.size());
  const Vec zero = Vec::Zero(n_);
  for (size_t c = 0; c < cells_.size(); ++c) {
    auto& cell = cells_[c];
    const Vec& a = vertices_[cell.v[0]];
    double vol = signed_volume(n_, a, vertices_[cell.v[1]], vertices_[cell.v[2]],
                               n_ == 3 ? vertices_[cell.v[3]] : zero);
    if (vol < 0.0) {
      std::swap(cell.v[n_ - 1], cell.v[n_]);
      vol = -vol;
    }
    if (!(vol > 1e-16))
      throw InvertedCell("BallMesh: degenerate or inverted cell");
    volumes_[c] = vol;
    total_volume_ += vol;

    Mat E(n_, n_);
    for (int i = 1; i <= n_; ++i) E.col(i - 1) = vertices_[cell.v[i]] - a;
    const Mat G = E.inverse().transpose();
    Vec g0 = Vec::Zero(n_);
    for (int i = 1; i <= n_; ++i) {
      grads_[c][i] = G.col(i - 1);
      g0 -= G.col(i - 1);
    }
    grads_[c][0] = g0;

    double diam = 0.0;
    for (int i = 0; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        diam = std::max(diam, (vertices_[cell.v[i]] - vertices_[cell.v[j]]).norm());
    mesh_size_ = std::max(mesh_size_, diam);
  }
}

BallMesh BallMesh::with_vertex_permutation(const std::vector<int>& new_index) const {
  if (new_index.size() != vertices_.size())
    throw DimensionMismatch("with_vertex_permutation: permutation size mismatch");
  std::vector<Vec> verts(vertices_.size(), Vec::Zero(n_));
  for (size_t i = 0; i < vertices_.size(); ++i) verts[new_index[i]] = vertices_[i];
  std::vector<Cell> cells = cells_;
  for (auto& cell : cells)
    for (int i = 0; i <= n_; ++i) cell.v[i] = new_index[cell.v[i]];
  const int order = qb_.size() == 1 ? 1 : 2;
  return BallMesh(n_, std::move(verts), std::move(cells), order, refinement_);
}

namespace {

BallMesh build_disk(int refinement, int cell_quad_order) {
  const int rings = 4 << refinement;
  std::vector<Vec> verts;
  Vec center = Vec::Zero(2);
  verts.push_back(center);
  auto ring_start = [](int j) { return 1 + 3 * j * (j - 1); };
  for (int j = 1; j <= rings; ++j) {
    const double r = static_cast<double>(j) / rings;
    for (int k = 0; k < 6 * j; ++k) {
      const double a = 2.0 * M_PI * k / (6 * j);
      Vec v(2);
      v << r * std::cos(a), r * std::sin(a);
      verts.push_back(v);
    }
  }
  std::vector<BallMesh::Cell> cells;
  for (int j = 1; j <= rings; ++j)
    for (int s = 0; s < 6; ++s) {
      auto outer = [&](int i) { return ring_start(j) + (s * j + i) % (6 * j); };
      auto inner = [&](int i) {
        if (j == 1) return 0;
        return ring_start(j - 1) + (s * (j - 1) + i) % (6 * (j - 1));
      };
      for (int i = 0; i < j; ++i)
        cells.push_back({{outer(i), outer(i + 1), inner(i), 0}});
      for (int i = 0; i + 1 < j; ++i)
        cells.push_back({{inner(i), outer(i + 1), inner(i + 1), 0}});
    }
  return BallMesh(2, std::move(verts), std::move(cells), cell_quad_order, refinement);
}

BallMesh build_ball3(int refinement, int cell_quad_order) {
  std::vector<Vec> verts;
  std::vector<bool> on_boundary;
  Vec v = Vec::Zero(3);
  verts.push_back(v);
  on_boundary.push_back(false);
  for (int axis = 0; axis < 3; ++axis)
    for (int s : {1, -1}) {
      Vec p = Vec::Zero(3);
      p[axis] = s;
      verts.push_back(p);
      on_boundary.push_back(true);
    }
  auto axis_vert = [](int axis, int s) { return 1 + 2 * axis + (s > 0 ? 0 : 1); };
  std::vector<BallMesh::Cell> tets;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        tets.push_back({{0, axis_vert(0, sx), axis_vert(1, sy), axis_vert(2, sz)}});

  for (int level = 0; level < refinement; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec m = 0.5 * (verts[a] + verts[b]);
      const bool bnd = on_boundary[a] && on_boundary[b];
      if (bnd) m /= m.norm();
      const int id = static_cast<int>(verts.size());
      verts.push_back(m);
      on_boundary.push_back(bnd);
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<BallMesh::Cell> next;
    next.reserve(tets.size() * 8);
    for (const auto& t : tets) {
      const int v0 = t.v[0], v1 = t.v[1], v2 = t.v[2], v3 = t.v[3];
      const int m01 = mid(v0, v1), m02 = mid(v0, v2), m03 = mid(v0, v3);
      const int m12 = mid(v1, v2), m13 = mid(v1, v3), m23 = mid(v2, v3);
      next.push_back({{v0, m01, m02, m03}});
      next.push_back({{m01, v1, m12, m13}});
      next.push_back({{m02, m12, v2, m23}});
      next.push_back({{m03, m13, m23, v3}});
      // Interior octahedron split along the m02-m13 diagonal.
      next.push_back({{m01, m02, m03, m13}});
      next.push_back({{m01, m02, m12, m13}});
      next.push_back({{m02, m03, m13, m23}});
      next.push_back({{m02, m12, m13, m23}});
    }
    tets = std::move(next);
  }
  return BallMesh(3, std::move(verts), std::move(tets), cell_quad_order, refinement);
}

}  // namespace

BallMesh build_ball_mesh(int n, int refinement, int cell_quad_order) {
  if (refinement < 0) throw InvalidInput("build_ball_mesh: refinement must be >= 0");
  if (n == 2) return build_disk(refinement, cell_quad_order);
  if (n == 3) return build_ball3(refinement, cell_quad_order);
  throw UnsupportedDimension("build_ball_mesh: n must be 2 or 3");
}

}  // namespace curvscale
