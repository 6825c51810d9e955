#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fortlib/vertex_set.hpp"

namespace fortlib {

// Hypercube symmetry: permute the d coordinates, then XOR a d-bit mask.
// These 2^d * d! maps form the full automorphism group of Q_d (checked
// against brute force for small d in the test suite).
struct SignedPermutation {
  std::vector<int> perm;  // bit j of the image is bit perm[j] of the input
  unsigned mask = 0;

  int dimension() const { return static_cast<int>(perm.size()); }

  static SignedPermutation identity(int d);

  int apply_vertex(int v) const;
  VertexSet apply(const VertexSet& s) const;
  unsigned apply_bits(unsigned bits) const;  // coordinate permutation only

  // (a.compose(b)).apply_vertex(v) == a.apply_vertex(b.apply_vertex(v))
  SignedPermutation compose(const SignedPermutation& b) const;
  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation&) const = default;
};

inline constexpr int kMaxSymmetryDim = 8;

long long signed_permutation_group_order(int d);

// Visit every group element; coordinate-permutation-major, mask-minor order.
void for_each_signed_permutation(int d, const std::function<void(const SignedPermutation&)>& fn);

struct CanonicalForm {
  VertexSet canonical;   // minimum bitmask over the orbit
  long long orbit_size = 0;
};

// Exact sweep of all 2^d * d! elements; orbit size via the stabilizer count.
CanonicalForm canonical_form(int d, const VertexSet& s);

bool are_automorphic(int d, const VertexSet& a, const VertexSet& b);

// All distinct images of s, in increasing bitmask order.
std::vector<VertexSet> orbit_of(int d, const VertexSet& s);

struct OrbitClass {
  VertexSet canonical;
  long long orbit_size = 0;
  std::vector<VertexSet> members;  // input sets in this class, sorted
};

// Partition of the input by canonical form, ordered by canonical bitmask.
std::vector<OrbitClass> classify_orbits(int d, const std::vector<VertexSet>& sets);

}  // namespace fortlib
