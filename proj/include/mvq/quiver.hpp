#pragma once

// Quivers of ADE type, modules over the preprojective algebra, and the
// invariants D_gamma(M) and lambda_w read off from them.
//
// D_gamma(M) is computed as dim ker phi_{-gamma}(M), where
//   phi_gamma : (+)_{i : gamma_i < 0} M_i  -->  (+)_{j : gamma_j > 0} M_j
// has block (j, i) equal to the composite phi_ij along the unique path from
// i to j in the Dynkin tree.

#include <optional>
#include <span>
#include <vector>

#include "mvq/rational.hpp"
#include "mvq/weyl.hpp"

namespace mvq {

struct Arrow {
  int source = 0;
  int target = 0;
  int sign = 1;  // +1 on E, -1 on E*
  int star = 0;  // index of the opposite arrow
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Doubled quiver H = E (+) E*. Arrows 0..|E|-1 are E in the given order,
// arrow |E| + k is the star of arrow k.
class Quiver {
 public:
  Quiver() = default;
  // `orientation` lists each Dynkin edge exactly once as (source, target).
  Quiver(CartanData cartan, const std::vector<std::pair<int, int>>& orientation);
  // Every edge oriented from the smaller to the larger vertex index.
  static Quiver standard(CartanData cartan);

  const CartanData& cartan() const noexcept { return cartan_; }
  int num_vertices() const noexcept { return cartan_.rank; }
  std::size_t num_edges() const noexcept { return arrows_.size() / 2; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  std::optional<std::size_t> arrow_between(int source, int target) const;
  // Vertex sequence of the unique simple path from i to j (inclusive).
  std::vector<int> path(int i, int j) const;
  bool is_standard() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  CartanData cartan_;
  std::vector<Arrow> arrows_;
};

struct PiModule {
  Quiver quiver;
  std::vector<int> dims;
  std::vector<QMatrix> maps;  // maps[a] : M_{s(a)} -> M_{t(a)}, a d_t x d_s matrix

  static PiModule zero(const Quiver& quiver, std::vector<int> dims);
  int total_dim() const;
  // All maps on E* vanish, i.e. M is a representation of Q viewed as a Pi-module.
  bool is_kq() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<int> violations;  // vertices where the preprojective relation fails
};

// Checks shapes (InputError on mismatch) and the relation
// sum_{t(a)=i} eps(a) phi_a phi_{a*} = 0 at every vertex.
ValidationReport validate_module(const PiModule& module);
// Throws ValidationError if validate_module reports a violation.
void require_valid(const PiModule& module);

// One summand [first, last] (0-based, first <= last) with multiplicity.
struct Interval {
  int first = 0;
  int last = 0;
  int mult = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};
using IntervalSpec = std::vector<Interval>;

void check_intervals(const CartanData& cartan, const IntervalSpec& spec);

// Direct sum of interval modules on A_n with rightward orientation: each copy
// of [a, b] is one-dimensional at a..b with identity rightward maps and zero
// star maps. Basis vectors at each vertex are ordered by summand.
PiModule build_from_intervals(const CartanData& cartan, const IntervalSpec& spec);

PiModule direct_sum(const PiModule& m, const PiModule& n);

// phi_ij : M_i -> M_j, the composite along the path from i to j; identity if i == j.
QMatrix path_map(const PiModule& module, int i, int j);

// Throws UnsupportedInput if some |gamma_i| >= 2.
QMatrix phi_gamma(const PiModule& module, const Weight& gamma);

// D_gamma(M) = dim ker phi_{-gamma}(M).
int d_gamma(const PiModule& module, const Weight& gamma);

struct PolytopeData {
  std::vector<WeylElement> elements;
  std::vector<Coweight> lambda;        // lambda_w, aligned with elements
  std::vector<ChamberWeight> gammas;   // Gamma in canonical order
  std::vector<int> A;                  // A_gamma = -D_{-gamma}(M), aligned with gammas

  int A_of(const Weight& gamma) const;
  std::vector<std::pair<WeylElement, Coweight>> family() const;
};

// lambda_w = sum_i -D_{-w varpi_i}(M) w alpha_check_i and A_gamma = -D_{-gamma}(M).
PolytopeData polytope_data(const PiModule& module);

}  // namespace mvq
