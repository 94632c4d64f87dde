#pragma once

// Quiver Grassmannian invariants: submodule tests, Euler characteristics by
// convolution over interval summands, and Poincare polynomials recovered from
// F_q point counts.
//
// When Gr_e(M) admits a paving by affine cells, #Gr_e(M)(F_q) = sum_k b_{2k} q^k,
// so interpolating counts at enough primes yields the Betti numbers.

#include <cstdint>
#include <span>
#include <vector>

#include "mvq/quiver.hpp"
#include "mvq/rational.hpp"

namespace mvq {

using DimVector = std::vector<int>;

struct PoincarePoly {
  std::vector<std::int64_t> coeffs;  // coeffs[k] = b_{2k}; trailing zeros trimmed, zero polynomial is empty

  BigInt evaluate(const BigInt& q) const;
  std::int64_t euler() const;
  // Betti numbers b_0, b_1, ..., b_{2 deg}; odd entries are zero.
  std::vector<std::int64_t> betti() const;
  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
};

// subspaces[i] spans N_i by its columns (d_i rows). True iff phi_a(N_s) is
// contained in N_t for every arrow a of the doubled quiver.
bool is_submodule(const PiModule& module, std::span<const QMatrix> subspaces);

// chi(Gr_e(M)) for M the direct sum of interval modules on A_n, via the
// convolution chi(Gr_g(M (+) N)) = sum_{d+e=g} chi(Gr_d(M)) chi(Gr_e(N)); the
// submodules of [a, b] are 0 and the suffixes [c, b].
std::int64_t euler_cc(const CartanData& cartan, const IntervalSpec& spec, const DimVector& e);

enum class CountMethod {
  // Enumerate N_i at one colour class of the bipartite Dynkin graph; the
  // admissible N_j at each remaining vertex form an interval U <= N_j <= V of
  // subspaces, counted by a Gaussian binomial.
  Fibered,
  // Enumerate every I-graded subspace of dimension e and test stability.
  BruteForce,
};

struct CountOptions {
  int max_total_dim = 8;
  CountMethod method = CountMethod::Fibered;
  std::uint64_t max_enumeration = 20'000'000;  // graded subspaces visited
};

// Number of F_q-points of Gr_e(M). q must be prime and coprime to every
// matrix denominator.
BigInt count_points_fq(const PiModule& module, const DimVector& e, std::uint64_t q, const CountOptions& options = {});

// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(int n, int k, const BigInt& q);

bool is_prime(std::uint64_t n);

// The first `count` primes that divide no matrix denominator and preserve the
// rank of every arrow, path map and supported phi_gamma on reduction.
std::vector<std::uint64_t> admissible_primes(const PiModule& module, std::size_t count);

struct PoincareOptions {
  CountOptions count;
  // Also count at one more prime and check it against the interpolant.
  bool check_extra_prime = true;
};

// Interpolates point counts at the first D + 1 admissible primes,
// D = sum_i e_i (d_i - e_i). Throws PavingViolation if the interpolant has a
// non-integral or negative coefficient or misses the extra check point.
PoincarePoly poincare_poly(const PiModule& module, const DimVector& e, const PoincareOptions& options = {});

// Newton interpolation through (x_k, y_k) with exact rationals; returns
// coefficients in the monomial basis, lowest degree first.
std::vector<Rational> interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys);

struct CohomologySummary {
  std::int64_t euler = 0;
  std::vector<std::int64_t> betti;
};

CohomologySummary total_cohomology(const PiModule& module, const DimVector& e, const PoincareOptions& options = {});

}  // namespace mvq
