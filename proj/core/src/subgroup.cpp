#include "permgraph/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "permgraph/error.hpp"

namespace permgraph {

namespace {

// Closure of {e} under right multiplication by `gens`.
ElementSet closure(const GroupTable& g, const std::vector<Element>& gens) {
  ElementSet span(g.order());
  span.insert(0);
  std::vector<Element> members{0};
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Element s : gens) {
      const Element y = g.mul(members[head], s);
      if (!span.contains(y)) {
        span.insert(y);
        members.push_back(y);
      }
    }
  return span;
}

}  // namespace

bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a.elements(), b.elements());
}

SubgroupSet cyclic_subgroup(const GroupTable& g, Element x) {
  ElementSet elems(g.order());
  Element y = 0;
  do {
    elems.insert(y);
    y = g.mul(y, x);
  } while (y != 0);
  return SubgroupSet(std::move(elems), x);
}

CyclicCatalog cyclic_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> covered(n, false);
  CyclicCatalog catalog;
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    // x is the smallest generator of <x>; mark every other generator x^k,
    // gcd(k, |x|) = 1, so <x> is produced exactly once.
    const std::size_t ord = g.elem_order(x);
    Element y = x;
    for (std::size_t k = 1; k <= ord; ++k, y = g.mul(y, x))
      if (std::gcd(k, ord) == 1) covered[y] = true;
    catalog.all.push_back(cyclic_subgroup(g, x));
  }
  std::sort(catalog.all.begin(), catalog.all.end(), canonical_less);
  for (const auto& h : catalog.all)
    if (h.size() != 1 && h.size() != n) catalog.proper.push_back(h);
  return catalog;
}

ElementSet set_product(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  ElementSet out(g.order());
  const auto hs = h.elements().to_vector();
  const auto ks = k.elements().to_vector();
  for (Element a : hs)
    for (Element b : ks) out.insert(g.mul(a, b));
  return out;
}

bool permutes(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  return set_product(g, h, k) == set_product(g, k, h);
}

SubgroupSet subgroup_generated(const GroupTable& g, const ElementSet& seed) {
  const auto gens = seed.to_vector();
  std::optional<Element> generator;
  if (gens.size() == 1) generator = gens.front();
  if (gens.size() == 2 && gens.front() == 0) generator = gens.back();
  return SubgroupSet(closure(g, gens), generator);
}

bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  const auto hs = h.elements().to_vector();
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    for (Element a : hs)
      if (!h.contains(g.mul(g.mul(x, a), xi))) return false;
  }
  return true;
}

bool is_valid_subgroup(const GroupTable& g, const SubgroupSet& h) {
  if (h.elements().universe() != g.order() || !h.contains(0)) return false;
  if (g.order() % h.size() != 0) return false;
  const auto hs = h.elements().to_vector();
  for (Element a : hs) {
    if (!h.contains(g.inv(a))) return false;
    for (Element b : hs)
      if (!h.contains(g.mul(a, b))) return false;
  }
  if (h.generator()) return cyclic_subgroup(g, *h.generator()).elements() == h.elements();
  return true;
}

std::vector<SubgroupSet> all_subgroups(const GroupTable& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(ErrorKind::size_limit, "subgroup enumeration above order " + std::to_string(max_order));
  const CyclicCatalog catalog = cyclic_subgroups(g);

  // Join every known subgroup with every cyclic subgroup until nothing new
  // appears; each subgroup is a join of cyclic ones, so this reaches all.
  struct Entry {
    SubgroupSet group;
    std::vector<Element> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& c : catalog.all) {
    seen.insert(c.elements());
    found.push_back({c, {*c.generator()}});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : catalog.all) {
      if (c.elements().is_subset_of(found[i].group.elements())) continue;
      std::vector<Element> gens = found[i].gens;
      gens.push_back(*c.generator());
      ElementSet joined = closure(g, gens);
      if (seen.insert(joined).second) found.push_back({SubgroupSet(std::move(joined)), std::move(gens)});
    }
  }
  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.group));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace permgraph
