#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permgraph/element_set.hpp"
#include "permgraph/group_spec.hpp"

namespace permgraph {

inline constexpr std::size_t kDefaultMaxOrder = 4096;
// Elements are stored as 16-bit indices in the Cayley table.
inline constexpr std::size_t kHardMaxOrder = 65535;

// A finite group given by its Cayley table. The identity is always element 0.
// Immutable after construction.
class GroupTable {
 public:
  // Validates shape and the identity/inverse structure of `mul` (row-major,
  // order x order). Associativity is not checked here; see check_axioms().
  GroupTable(std::size_t order, std::vector<std::uint16_t> mul, GroupSpec spec);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::size_t elem_order(Element a) const noexcept { return elem_order_[a]; }
  Element pow(Element a, long long k) const;

  const GroupSpec& spec() const noexcept { return spec_; }
  std::string spec_string() const { return format_group_spec(spec_); }

  bool is_abelian() const noexcept;
  bool is_cyclic() const noexcept;

  // Full table; element a*b at index a*order()+b.
  std::span<const std::uint16_t> table() const noexcept { return mul_; }

 private:
  std::size_t order_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint32_t> elem_order_;
  GroupSpec spec_;
};

// Bijection on {0, ..., m-1}. Composition (a * b)(i) = a(b(i)): b acts first.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t degree);
  // Parses cycle notation such as "(0 1 2)(3 4)" or "()" on `degree` points.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_even() const;
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Result of an axiom check; `failure` names the first violated axiom.
struct AxiomCheck {
  bool ok = true;
  std::string failure;
};

// Associativity (all triples when order <= 64, else `samples` random triples),
// two-sided identity, inverses, element orders and Lagrange.
AxiomCheck check_axioms(const GroupTable& g, std::size_t samples = 100000);

GroupTable make_trivial();
GroupTable make_cyclic(long long n, std::size_t max_order = kDefaultMaxOrder);
GroupTable make_direct_product(const GroupTable& g, const GroupTable& h,
                               std::size_t max_order = kDefaultMaxOrder);
// Order `two_n` group <a, b | a^n = b^2 = 1, ab = ba^-1>; element a^i b^j has
// index j*n + i.
GroupTable make_dihedral(long long two_n, std::size_t max_order = kDefaultMaxOrder);
// Order `four_n` group <a, b | a^2n = 1, b^2 = a^n, bab^-1 = a^-1>.
GroupTable make_generalized_quaternion(long long four_n, std::size_t max_order = kDefaultMaxOrder);
// <a, b | a^(p^(alpha-1)) = b^p = 1, bab^-1 = a^(p^(alpha-2)+1)>.
GroupTable make_modular(long long p, long long alpha, std::size_t max_order = kDefaultMaxOrder);
// Z_q x|_t Z_(p^alpha) = <a, b | a^q = b^(p^alpha) = 1, bab^-1 = a^i> where i is
// the smallest integer in [2, q-1] of multiplicative order p^t mod q (i = 1
// when t = 0).
GroupTable make_metacyclic_semidirect(long long q, long long p, long long alpha, long long t,
                                      std::size_t max_order = kDefaultMaxOrder);
GroupTable make_symmetric(long long m, long long max_degree = 6);
GroupTable make_alternating(long long m, long long max_degree = 6);
GroupTable make_from_generators(std::span<const Permutation> generators,
                                std::size_t max_order = kDefaultMaxOrder);

// Builds the group a spec describes.
GroupTable build_group(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

std::size_t element_order(const GroupTable& g, Element a);

// Number of positive divisors.
long long tau(long long n);
bool is_prime(long long n);
// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<long long, int>> factorize(long long n);
// Multiplicative order of a modulo m (gcd(a, m) must be 1).
long long multiplicative_order(long long a, long long m);

// Exact group isomorphism by generator-image search. Returns the image of every
// element under an isomorphism g -> h, or nullopt. Throws Error{size_limit}
// above `max_order`.
std::optional<std::vector<Element>> find_group_isomorphism(const GroupTable& g, const GroupTable& h,
                                                           std::size_t max_order = 256);
inline bool are_isomorphic_groups(const GroupTable& g, const GroupTable& h,
                                  std::size_t max_order = 256) {
  return find_group_isomorphism(g, h, max_order).has_value();
}

// Small generating set, chosen greedily from elements of largest order.
std::vector<Element> generating_set(const GroupTable& g);

}  // namespace permgraph
