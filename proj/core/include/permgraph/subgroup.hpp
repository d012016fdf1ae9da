#pragma once

#include <optional>
#include <vector>

#include "permgraph/element_set.hpp"
#include "permgraph/group.hpp"

namespace permgraph {

// A subgroup as a set of element indices, with a generator when known to be
// cyclic.
class SubgroupSet {
 public:
  SubgroupSet(ElementSet elements, std::optional<Element> generator = std::nullopt)
      : elements_(std::move(elements)), size_(elements_.size()), generator_(generator) {}

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return size_; }
  const std::optional<Element>& generator() const noexcept { return generator_; }
  bool contains(Element e) const noexcept { return elements_.contains(e); }

  bool operator==(const SubgroupSet& other) const { return elements_ == other.elements_; }

 private:
  ElementSet elements_;
  std::size_t size_;
  std::optional<Element> generator_;
};

// Canonical order: by size, then lexicographically by sorted element list.
bool canonical_less(const SubgroupSet& a, const SubgroupSet& b);

struct CyclicCatalog {
  // Every <x>, deduplicated by element set, in canonical order. Includes the
  // trivial subgroup and, for cyclic groups, the whole group.
  std::vector<SubgroupSet> all;
  // `all` minus the trivial subgroup and the whole group.
  std::vector<SubgroupSet> proper;
};

CyclicCatalog cyclic_subgroups(const GroupTable& g);

// The cyclic subgroup <x>, with x as its generator.
SubgroupSet cyclic_subgroup(const GroupTable& g, Element x);

// {hk : h in H, k in K}.
ElementSet set_product(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

// HK == KH.
bool permutes(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

// Least subgroup containing `seed`.
SubgroupSet subgroup_generated(const GroupTable& g, const ElementSet& seed);

bool is_normal(const GroupTable& g, const SubgroupSet& h);

// Contains identity, closed under multiplication and inverses, size divides
// the group order, and matches the generator's powers when one is recorded.
bool is_valid_subgroup(const GroupTable& g, const SubgroupSet& h);

// Every subgroup of g (including trivial and whole group), canonical order.
// Throws Error{size_limit} when g.order() > max_order.
std::vector<SubgroupSet> all_subgroups(const GroupTable& g, std::size_t max_order = 200);

}  // namespace permgraph
