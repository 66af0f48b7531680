#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "logsteady/field.hpp"
#include "logsteady/tridiag.hpp"

#include "json.hpp"

namespace logsteady {

enum class DomainKind { Ball, WholeSpace, Annulus };
enum class BoundaryCondition { DirichletZero, DecayMatched };

std::string to_string(DomainKind kind);

struct GridRequest {
  DomainKind kind = DomainKind::Ball;
  int dimension = 3;
  int intervals = 100;  // M; the grid carries M+1 nodes
  double outer_radius = 1.0;
  double inner_radius = 0.0;  // annulus only
  double stretch = 1.0;       // geometric ratio between consecutive intervals
  // Optional uniform core: equal spacing up to core_radius, geometric beyond
  // (the tail ratio is then solved for continuity and `stretch` is ignored).
  double core_radius = 0.0;
  double core_fraction = 0.5;
  std::vector<double> anchors;  // radii snapped onto the nearest node
};

// Radial mesh with exact shell-volume quadrature weights and midpoint-face
// transmissibilities.  The discrete -Laplacian built on top is an M-matrix,
// self-adjoint in the weighted inner product, and exact on radial quadratics.
class RadialGrid {
 public:
  static RadialGrid build(const GridRequest& request);

  int dimension() const { return dim_; }
  DomainKind kind() const { return kind_; }
  std::size_t node_count() const { return r_.size(); }
  double node(std::size_t i) const { return r_[i]; }
  const std::vector<double>& nodes() const { return r_; }
  double weight(std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }
  double face_coeff(std::size_t i) const { return t_[i]; }  // face i+1/2
  double inner_radius() const { return r_.front(); }
  double outer_radius() const { return r_.back(); }
  double tail_ratio() const { return tail_ratio_; }

  double unit_ball_volume() const { return omega_; }       // omega_N
  double sphere_area() const { return surface_; }          // N * omega_N
  double volume() const;                                   // truncated domain

  double integrate(const Field& f) const;
  double integrate_product(const Field& f, const Field& g) const;

  // sum_faces T (u_{i+1}-u_i)(v_{i+1}-v_i); the H-inner product for fields
  // that honor the boundary condition (the decay tail term is added by
  // RadialOperator::h_inner).
  double gradient_form(const Field& u, const Field& v) const;

  Field sample(const std::function<double(double)>& f,
               FieldRole role = FieldRole::Generic) const;

  nlohmann::json to_json() const;

 private:
  int dim_ = 3;
  DomainKind kind_ = DomainKind::Ball;
  std::vector<double> r_;  // nodes
  std::vector<double> w_;  // exact control-volume weights (full angular factor)
  std::vector<double> t_;  // face transmissibilities, size node_count()-1
  double omega_ = 0.0;
  double surface_ = 0.0;
  double tail_ratio_ = 1.0;
};

// Discrete -Laplacian for a (grid, boundary condition) pair.  Pinned nodes
// (outer node for Dirichlet, both ends for an annulus) carry value zero in
// admissible fields; the operator reports zero there.
class RadialOperator {
 public:
  RadialOperator(const RadialGrid& grid, BoundaryCondition bc);

  const RadialGrid& grid() const { return *grid_; }
  BoundaryCondition bc() const { return bc_; }
  std::size_t first_unknown() const { return lo_; }
  std::size_t last_unknown() const { return hi_; }
  std::size_t unknown_count() const { return hi_ - lo_ + 1; }
  bool pinned(std::size_t node) const { return node < lo_ || node > hi_; }
  double decay_tail_coeff() const { return robin_; }

  // Nodewise -Laplacian; u need not honor the boundary values (pinned rows
  // report zero, interior rows read the actual neighbor values).
  Field apply(const Field& u) const;

  // (K u)_i on the unknown range, boundary values taken as zero.
  void stiffness_apply(const std::vector<double>& u,
                       std::vector<double>& out) const;

  // H-inner product <u,v> = sum T du dv (+ decay tail term); equals
  // integrate(u * apply(v)) for admissible fields.
  double h_inner(const Field& u, const Field& v) const;
  double h_norm_sq(const Field& u) const { return h_inner(u, u); }
  double h_norm(const Field& u) const;

  // Solve (K - shift*diag(b)) x = rhs on the unknown range; b and rhs are
  // full-size nodal arrays, x is returned full-size with pinned zeros.
  Field solve_shifted(const Field& rhs_nodal, const Field& b_diag,
                      double shift) const;

  // Solve K x = diag(w) f  (discrete -Delta x = f with this bc).
  Field solve_poisson(const Field& f) const;

  // Tridiagonal K with extra diagonal entries (Newton systems); rows listed
  // in `pinned_rows` are replaced by identity (delta there forced to zero).
  Field solve_augmented(const Field& rhs_nodal, const Field& diag_extra,
                        const std::vector<char>& pinned_rows) const;

  Field zero_field() const { return Field(grid_->node_count()); }

 private:
  Tridiagonal base_matrix() const;

  const RadialGrid* grid_;
  BoundaryCondition bc_;
  std::size_t lo_ = 0, hi_ = 0;
  double robin_ = 0.0;  // decay-matched tail energy coefficient at the rim
};

}  // namespace logsteady
