#include "fortlib/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fortlib/errors.hpp"

namespace fortlib {

SignedPermutation SignedPermutation::identity(int d) {
  SignedPermutation g;
  g.perm.resize(static_cast<size_t>(d));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

unsigned SignedPermutation::apply_bits(unsigned bits) const {
  unsigned out = 0;
  for (size_t j = 0; j < perm.size(); ++j)
    out |= ((bits >> perm[j]) & 1u) << j;
  return out;
}

int SignedPermutation::apply_vertex(int v) const {
  return static_cast<int>(apply_bits(static_cast<unsigned>(v)) ^ mask);
}

VertexSet SignedPermutation::apply(const VertexSet& s) const {
  VertexSet out(s.universe());
  s.for_each([&](int v) { out.set(apply_vertex(v)); });
  return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& b) const {
  // a(b(v)) = P_a(P_b(v) ^ m_b) ^ m_a = (P_a P_b)(v) ^ (P_a(m_b) ^ m_a)
  SignedPermutation g;
  g.perm.resize(perm.size());
  for (size_t j = 0; j < perm.size(); ++j)
    g.perm[j] = b.perm[static_cast<size_t>(perm[j])];
  g.mask = apply_bits(b.mask) ^ mask;
  return g;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation g;
  g.perm.resize(perm.size());
  for (size_t j = 0; j < perm.size(); ++j) g.perm[static_cast<size_t>(perm[j])] = static_cast<int>(j);
  g.mask = g.apply_bits(mask);
  return g;
}

namespace {

void check_dim(int d, const VertexSet* s = nullptr) {
  if (d < 1 || d > kMaxSymmetryDim)
    throw resource_limit("signed-permutation sweeps support 1 <= d <= " +
                         std::to_string(kMaxSymmetryDim));
  if (s && s->universe() != (1 << d))
    throw invalid_input("vertex set universe does not match 2^d");
}

}  // namespace

long long signed_permutation_group_order(int d) {
  long long order = 1ll << d;
  for (int i = 2; i <= d; ++i) order *= i;
  return order;
}

void for_each_signed_permutation(int d,
                                 const std::function<void(const SignedPermutation&)>& fn) {
  check_dim(d);
  SignedPermutation g = SignedPermutation::identity(d);
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      g.mask = mask;
      fn(g);
    }
    g.mask = 0;
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
}

CanonicalForm canonical_form(int d, const VertexSet& s) {
  check_dim(d, &s);
  CanonicalForm result{s, 0};
  long long stabilizer = 0;
  for_each_signed_permutation(d, [&](const SignedPermutation& g) {
    VertexSet image = g.apply(s);
    if (image == s) ++stabilizer;
    if (image < result.canonical) result.canonical = std::move(image);
  });
  result.orbit_size = signed_permutation_group_order(d) / stabilizer;
  return result;
}

bool are_automorphic(int d, const VertexSet& a, const VertexSet& b) {
  return canonical_form(d, a).canonical == canonical_form(d, b).canonical;
}

std::vector<VertexSet> orbit_of(int d, const VertexSet& s) {
  check_dim(d, &s);
  std::set<VertexSet> images;
  for_each_signed_permutation(d, [&](const SignedPermutation& g) { images.insert(g.apply(s)); });
  return {images.begin(), images.end()};
}

std::vector<OrbitClass> classify_orbits(int d, const std::vector<VertexSet>& sets) {
  std::map<VertexSet, OrbitClass> classes;
  for (const auto& s : sets) {
    CanonicalForm form = canonical_form(d, s);
    auto [it, fresh] = classes.try_emplace(form.canonical);
    if (fresh) {
      it->second.canonical = form.canonical;
      it->second.orbit_size = form.orbit_size;
    }
    it->second.members.push_back(s);
  }
  std::vector<OrbitClass> out;
  out.reserve(classes.size());
  for (auto& [canon, cls] : classes) {
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace fortlib
