#pragma once

// Simply-laced Cartan data and Weyl group combinatorics.
//
// Vertices are 0-based in this API. Node numbering follows Bourbaki
// (written 1-based here):
//   A_n : path 1 - 2 - ... - n
//   D_n : path 1 - ... - (n-1), with n attached to n-2
//   E_n : path 1 - 3 - 4 - ... - n, with 2 attached to 4
//
// Weights are stored in the fundamental-weight basis, coweights in the
// simple-coroot basis, so <lambda, nu> = sum_i lambda_i nu_i. In simply-laced
// type the simple root alpha_i has fundamental-weight coordinates equal to
// column i of the Cartan matrix, and <alpha_i, mu> is read off as mu_i.

#include <cstddef>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvq {

enum class Family { A, D, E };

Family parse_family(std::string_view name);
char family_letter(Family f);

struct CartanData {
  Family family = Family::A;
  int rank = 0;
  std::vector<int> entries;  // row-major rank x rank

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * rank + j)]; }
  int size() const noexcept { return rank; }
  std::vector<int> neighbors(int i) const;
  // Edges {i, j} with i < j.
  std::vector<std::pair<int, int>> edges() const;
  std::string name() const;

  friend bool operator==(const CartanData&, const CartanData&) = default;
};

CartanData cartan_matrix(Family family, int rank);

struct Weight {
  std::vector<int> coords;
  int operator[](std::size_t i) const { return coords[i]; }
  std::size_t size() const noexcept { return coords.size(); }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct Coweight {
  std::vector<int> coords;
  int operator[](std::size_t i) const { return coords[i]; }
  std::size_t size() const noexcept { return coords.size(); }
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

Weight operator-(const Weight& w);
Weight operator+(const Weight& a, const Weight& b);
Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(int s, const Coweight& c);

Weight fundamental_weight(const CartanData& cartan, int j);
Coweight simple_coroot(const CartanData& cartan, int i);

// s_i(lambda) = lambda - lambda_i * alpha_i.
Weight reflect_weight(const CartanData& cartan, int i, const Weight& lambda);
// s_i(nu) = nu - (sum_j C_ij nu_j) * alpha_check_i.
Coweight reflect_coweight(const CartanData& cartan, int i, const Coweight& nu);
// Throws InputError on rank mismatch.
long pairing(const Weight& lambda, const Coweight& nu);

// Square integer matrix acting on column vectors.
struct IntMatrix {
  int n = 0;
  std::vector<int> a;

  static IntMatrix identity(int n);
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  std::vector<int> apply(const std::vector<int>& v) const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

// An element w of W together with one reduced word.
//
// `word` is in application order: word = [i_1, ..., i_m] stands for the
// expression s_{i_m} ... s_{i_1}, i.e. s_{i_1} is applied first.
struct WeylElement {
  IntMatrix weight_action;    // lambda -> w lambda, fundamental-weight coordinates
  IntMatrix coweight_action;  // nu -> w nu, simple-coroot coordinates
  std::vector<int> word;

  std::size_t length() const noexcept { return word.size(); }
  Weight act(const Weight& lambda) const { return {weight_action.apply(lambda.coords)}; }
  Coweight act(const Coweight& nu) const { return {coweight_action.apply(nu.coords)}; }
  // w^{-1} nu. The coweight action of w^{-1} is the transpose of the weight action of w.
  Coweight act_inverse(const Coweight& nu) const;
};

IntMatrix reflection_weight_matrix(const CartanData& cartan, int i);
IntMatrix reflection_coweight_matrix(const CartanData& cartan, int i);

inline constexpr std::size_t kDefaultWeylBound = 100000;

// All elements of W, each once, in breadth-first order from the identity
// (so lengths are nondecreasing and each stored word is reduced).
// Throws BoundExceeded if |W| > max_elements.
std::vector<WeylElement> weyl_elements(const CartanData& cartan, std::size_t max_elements = kDefaultWeylBound);

struct ChamberWeight {
  Weight weight;
  int source = 0;  // weight = witness * fundamental_weight(source)
  WeylElement witness;
  std::vector<std::pair<int, int>> positive;  // (vertex, gamma_i) for gamma_i > 0
  std::vector<std::pair<int, int>> negative;  // (vertex, -gamma_i) for gamma_i < 0
};

// Splits a weight's coordinates into its positive and negative supports.
void split_supports(const Weight& gamma, std::vector<std::pair<int, int>>& positive,
                    std::vector<std::pair<int, int>>& negative);

// Gamma = { w varpi_j }, ordered by source j and then by breadth-first order of
// the first witness. Duplicates are merged keeping the first witness.
std::vector<ChamberWeight> chamber_weights(const CartanData& cartan, std::span<const WeylElement> elements);
std::vector<ChamberWeight> chamber_weights(const CartanData& cartan, std::size_t max_elements = kDefaultWeylBound);

// True iff <s_{i_{a-1}} ... s_{i_1} varpi_j, alpha_check_{i_a}> >= 0 for a = 1..m.
bool is_admissible(const CartanData& cartan, std::span<const int> word, int j);

struct AdmissibilityReport {
  std::size_t elements = 0;
  std::size_t reduced_words = 0;  // distinct reduced words over all of W
  std::size_t checks = 0;         // (word, j) pairs tested
  std::size_t failures = 0;       // (word, j) pairs that are not j-admissible
  std::vector<std::pair<std::vector<int>, int>> counterexamples;  // first few failures
};

// Enumerates every reduced word of every element of W and tests
// j-admissibility for every j.
AdmissibilityReport check_reduced_words(const CartanData& cartan, std::size_t max_elements = kDefaultWeylBound);

// True iff mu - nu is a nonnegative integer combination of simple coroots.
bool dominates(const Coweight& mu, const Coweight& nu);

// Pseudo-Weyl condition: for all ordered pairs (v, w),
// w^{-1} lambda_v - w^{-1} lambda_w >= 0 in dominance order.
// `family` must contain every element of W (matched by action matrix);
// a missing element raises InputError.
bool check_pseudo_weyl(const CartanData& cartan, const std::vector<std::pair<WeylElement, Coweight>>& family);

std::string format_word(std::span<const int> word);  // "s2 s1" style, 1-based, leftmost applied last

}  // namespace mvq
