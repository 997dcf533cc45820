#ifndef CURVSCALE_BALL_MESH_HPP
#define CURVSCALE_BALL_MESH_HPP

#include <array>
#include <vector>

#include "curvscale/types.hpp"

namespace curvscale {

/// Simplex mesh of the unit ball: triangles (n=2) or tetrahedra (n=3), all
/// positively oriented, boundary vertices on the unit sphere.
class BallMesh {
 public:
  struct Cell {
    std::array<int, 4> v;  // first dim+1 entries used
  };

  BallMesh(int n, std::vector<Vec> vertices, std::vector<Cell> cells,
           int cell_quad_order, int refinement);

  int dim() const { return n_; }
  int refinement() const { return refinement_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }

  double mesh_size() const { return mesh_size_; }
  double total_volume() const { return total_volume_; }
  double cell_volume(int c) const { return volumes_[c]; }
  /// Gradients of the P1 shape functions on cell c (dim+1 used entries).
  const std::array<Vec, 4>& shape_gradients(int c) const { return grads_[c]; }

  /// Per-cell quadrature in barycentric coordinates; weights sum to 1.
  const std::vector<std::array<double, 4>>& quad_barycentric() const { return qb_; }
  const std::vector<double>& quad_weights() const { return qw_; }

  /// Same mesh with vertices renumbered as new_index[old]; cell order and
  /// per-cell vertex slots are preserved.
  BallMesh with_vertex_permutation(const std::vector<int>& new_index) const;

 private:
  int n_;
  int refinement_;
  std::vector<Vec> vertices_;
  std::vector<Cell> cells_;
  std::vector<double> volumes_;
  std::vector<std::array<Vec, 4>> grads_;
  std::vector<std::array<double, 4>> qb_;
  std::vector<double> qw_;
  double mesh_size_ = 0.0;
  double total_volume_ = 0.0;
};

/// Deterministic unit-ball mesh. n=2: structured disk triangulation with
/// 4 * 2^refinement concentric rings; n=3: red-refined octahedral ball with
/// boundary vertices projected to the unit sphere. cell_quad_order selects
/// the per-cell rule (1: barycenter, 2: degree-2 rule).
BallMesh build_ball_mesh(int n, int refinement, int cell_quad_order = 2);

}  // namespace curvscale

#endif
