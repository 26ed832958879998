#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nvs/identities.hpp"
#include "nvs/ninth.hpp"
#include "nvs/partition.hpp"

namespace nvs {

// One S-factor of a quadratic relation.  Sequences are kept raw: a factor
// whose sequences do not form a skew partition evaluates to 0 (theorem
// convention), never an error.  conj evaluates S at the conjugate pair.
struct SDescriptor {
  std::vector<int> outer, inner;
  int r_off = 0;
  bool conj = false;
};

// h/e generator prefactor with superscript r + t_off.
struct GenFactor {
  char kind = 'h';
  int t_off = 0;
  int d = 0;
};

struct RelTerm {
  int coeff = 1;  // +-1
  std::vector<GenFactor> gens;
  std::vector<SDescriptor> factors;
};

struct RelationInstance {
  std::string id;
  std::vector<RelTerm> lhs, rhs;
};

// nullopt when the descriptor is not a skew partition (value 0).
std::optional<SkewShape> descriptor_shape(const SDescriptor& d);

enum class DjVariant { H, E };
enum class GiambelliVariant { NonSkew, Skew };
enum class PluckerVariant { Row, Column };

RelationInstance dj_relation(const SkewShape& shape, DjVariant variant);
RelationInstance rectangle_relation(int p, int q);
RelationInstance giambelli_quadratic(const SkewShape& shape,
                                     GiambelliVariant variant);
RelationInstance plucker_quadratic(const Partition& lambda, int d,
                                   PluckerVariant variant);
RelationInstance rectangle_general(int p, int q, int a, int b);

// All operator index pairs (ps, qs) for a partition with n corners and
// pivot d: ps ascending in [1,d], qs descending in [d,n], t = |ps|.
std::vector<std::pair<std::vector<int>, std::vector<int>>> plucker_tuples(
    int n, int d);

// Exact verification over the symbolic X_+; uses a packed multilinear
// expansion when every term is a plain product of two S-factors, and the
// general polynomial route otherwise.
bool verify_relation_exact(const RelationInstance& inst, int slack = 4);

// Schwartz-Zippel mode: evaluates the generator variables at random prime
// field points.
Verdict verify_relation_modular(const RelationInstance& inst,
                                std::uint64_t seed, int trials, int slack = 4);

// Residual as a polynomial (general route), for diagnostics and tests.
SparsePoly relation_residual(const RelationInstance& inst, int slack = 4);

// Classical quadratic relation for Schur polynomials, checked as exact
// polynomial identities in n variables via tableau sums.
bool kleber_classical(const Partition& lambda, int d, int n_vars);

}  // namespace nvs
