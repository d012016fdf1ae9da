#include "permgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "permgraph/error.hpp"

namespace permgraph {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_parameter, msg); }

void check_cap(long long order, std::size_t max_order) {
  const std::size_t cap = std::min(max_order, kHardMaxOrder);
  if (order < 1 || static_cast<unsigned long long>(order) > cap)
    throw Error(ErrorKind::size_limit,
                "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

long long ipow(long long base, long long exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

long long mod_pow(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// <a, b | a^m = 1, b^s = a^c, b a b^-1 = a^r>, element a^i b^j at index j*m + i.
GroupTable metacyclic_table(long long m, long long s, long long c, long long r, GroupSpec spec,
                            std::size_t max_order) {
  check_cap(m * s, max_order);
  if (mod_pow(r, s, m) != 1 % m || (c * r - c) % m != 0 || std::gcd(r, m) != 1)
    invalid("inconsistent metacyclic parameters");
  std::vector<long long> rpow(static_cast<std::size_t>(s));
  rpow[0] = 1 % m;
  for (long long j = 1; j < s; ++j) rpow[j] = rpow[j - 1] * r % m;

  const auto n = static_cast<std::size_t>(m * s);
  std::vector<std::uint16_t> mul(n * n);
  for (long long j = 0; j < s; ++j)
    for (long long i = 0; i < m; ++i)
      for (long long l = 0; l < s; ++l)
        for (long long k = 0; k < m; ++k) {
          // (a^i b^j)(a^k b^l) = a^(i + k r^j) b^(j+l), and b^s = a^c.
          long long ai = (i + k * rpow[j]) % m;
          long long bj = j + l;
          if (bj >= s) {
            bj -= s;
            ai = (ai + c) % m;
          }
          mul[static_cast<std::size_t>((j * m + i) * m * s + l * m + k)] =
              static_cast<std::uint16_t>(bj * m + ai);
        }
  return GroupTable(n, std::move(mul), std::move(spec));
}

std::size_t lehmer_rank(const std::vector<int>& p) {
  std::size_t rank = 0;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

GroupTable table_from_permutations(const std::vector<Permutation>& elems, GroupSpec spec) {
  const std::size_t n = elems.size();
  const std::size_t degree = elems.front().degree();
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= degree; ++i) fact *= i;
  std::vector<std::uint32_t> index_of_rank(fact, UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i) index_of_rank[lehmer_rank(elems[i].images())] = static_cast<std::uint32_t>(i);
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint16_t>(index_of_rank[lehmer_rank((elems[a] * elems[b]).images())]);
  return GroupTable(n, std::move(mul), std::move(spec));
}

}  // namespace

// --- GroupTable ------------------------------------------------------------

GroupTable::GroupTable(std::size_t order, std::vector<std::uint16_t> mul, GroupSpec spec)
    : order_(order), mul_(std::move(mul)), spec_(std::move(spec)) {
  if (order_ == 0 || order_ > kHardMaxOrder) invalid("group order out of range");
  if (mul_.size() != order_ * order_) invalid("Cayley table has wrong size");
  for (auto v : mul_)
    if (v >= order_) invalid("Cayley table entry out of range");
  for (std::size_t a = 0; a < order_; ++a)
    if (mul_[a] != a || mul_[a * order_] != a) invalid("element 0 is not a two-sided identity");

  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    const auto* row = &mul_[a * order_];
    const auto* hit = std::find(row, row + order_, 0);
    if (hit == row + order_) invalid("element without inverse");
    const auto b = static_cast<std::size_t>(hit - row);
    if (mul_[b * order_ + a] != 0) invalid("inverse is not two-sided");
    inv_[a] = static_cast<std::uint16_t>(b);
  }

  elem_order_.assign(order_, 1);
  for (std::size_t a = 1; a < order_; ++a) {
    std::size_t k = 1;
    std::size_t x = a;
    while (x != 0) {
      x = mul_[x * order_ + a];
      if (++k > order_) invalid("element of infinite order in table");
    }
    elem_order_[a] = static_cast<std::uint32_t>(k);
  }
}

Element GroupTable::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<long long>(elem_order(a));
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul_[a * order_ + b] != mul_[b * order_ + a]) return false;
  return true;
}

bool GroupTable::is_cyclic() const noexcept {
  return std::any_of(elem_order_.begin(), elem_order_.end(),
                     [&](std::uint32_t o) { return o == order_; });
}

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      invalid("image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::parse_error, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw Error(ErrorKind::parse_error, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') throw Error(ErrorKind::parse_error, "bad point in cycle");
      int v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + (text[pos++] - '0');
      if (static_cast<std::size_t>(v) >= degree) invalid("cycle point outside the domain");
      if (used[static_cast<std::size_t>(v)]) invalid("point repeated across cycles");
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) invalid("composing permutations of different degree");
  std::vector<int> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_even() const {
  std::vector<bool> seen(degree(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      if (j != i) out << ' ';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

// --- axioms ----------------------------------------------------------------

AxiomCheck check_axioms(const GroupTable& g, std::size_t samples) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return {false, "identity"};
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return {false, "inverse"};
    const std::size_t k = g.elem_order(a);
    if (n % k != 0) return {false, "lagrange"};
    if (g.pow(a, 0) != 0) return {false, "element order"};
    Element x = a;
    for (std::size_t i = 1; i < k; ++i, x = g.mul(x, a))
      if (x == 0) return {false, "element order"};
    if (x != 0) return {false, "element order"};
  }
  auto assoc = [&](Element a, Element b, Element c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return {false, "associativity"};
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < samples; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) return {false, "associativity"};
  }
  return {};
}

// --- constructors ----------------------------------------------------------

GroupTable make_trivial() { return GroupTable(1, {0}, GroupSpec{Family::table_literal, {}, {}, {}}); }

GroupTable make_cyclic(long long n, std::size_t max_order) {
  if (n < 2) invalid("cyclic group needs n >= 2");
  check_cap(n, max_order);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint16_t> mul(un * un);
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b) mul[a * un + b] = static_cast<std::uint16_t>((a + b) % un);
  return GroupTable(un, std::move(mul), GroupSpec::cyclic(n));
}

GroupTable make_direct_product(const GroupTable& g, const GroupTable& h, std::size_t max_order) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  check_cap(static_cast<long long>(ng * nh), max_order);
  const std::size_t n = ng * nh;
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto first = g.mul(static_cast<Element>(a / nh), static_cast<Element>(b / nh));
      const auto second = h.mul(static_cast<Element>(a % nh), static_cast<Element>(b % nh));
      mul[a * n + b] = static_cast<std::uint16_t>(first * nh + second);
    }
  GroupSpec spec;
  if (g.spec().family == Family::table_literal && ng == 1) {
    spec = h.spec();
  } else if (h.spec().family == Family::table_literal && nh == 1) {
    spec = g.spec();
  } else {
    spec = GroupSpec::product({g.spec(), h.spec()});
  }
  return GroupTable(n, std::move(mul), std::move(spec));
}

GroupTable make_dihedral(long long two_n, std::size_t max_order) {
  if (two_n < 6 || two_n % 2 != 0) invalid("dihedral order must be even and >= 6");
  const long long n = two_n / 2;
  return metacyclic_table(n, 2, 0, n - 1, GroupSpec::dihedral(two_n), max_order);
}

GroupTable make_generalized_quaternion(long long four_n, std::size_t max_order) {
  if (four_n < 8 || four_n % 4 != 0) invalid("generalized quaternion order must be a multiple of 4, >= 8");
  const long long n = four_n / 4;
  return metacyclic_table(2 * n, 2, n, 2 * n - 1, GroupSpec::quaternion(four_n), max_order);
}

GroupTable make_modular(long long p, long long alpha, std::size_t max_order) {
  if (!is_prime(p)) invalid("modular group needs prime p");
  if (alpha < 3) invalid("modular group needs alpha >= 3");
  if (alpha > 62) check_cap(static_cast<long long>(kHardMaxOrder) + 1, max_order);
  const long long order = ipow(p, alpha);
  check_cap(order, max_order);
  const long long m = order / p;
  return metacyclic_table(m, p, 0, ipow(p, alpha - 2) + 1, GroupSpec::modular(p, alpha), max_order);
}

GroupTable make_metacyclic_semidirect(long long q, long long p, long long alpha, long long t,
                                      std::size_t max_order) {
  if (!is_prime(q) || !is_prime(p)) invalid("semidirect product needs primes q and p");
  if (p == q) invalid("semidirect product needs p != q");
  if (alpha < 1 || t < 0 || t > alpha) invalid("semidirect product needs alpha >= 1 and 0 <= t <= alpha");
  const long long pt = ipow(p, t);
  if ((q - 1) % pt != 0) invalid("p^t must divide q-1");
  const long long palpha = ipow(p, alpha);
  check_cap(q * palpha, max_order);
  long long i = 1;
  if (t > 0) {
    for (i = 2; i < q; ++i)
      if (multiplicative_order(i, q) == pt) break;
  }
  return metacyclic_table(q, palpha, 0, i, GroupSpec::semidirect(q, p, alpha, t), max_order);
}

GroupTable make_symmetric(long long m, long long max_degree) {
  if (m < 2) invalid("symmetric group needs degree >= 2");
  if (m > max_degree) throw Error(ErrorKind::size_limit, "symmetric group degree above cap");
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return table_from_permutations(elems, GroupSpec::symmetric(m));
}

GroupTable make_alternating(long long m, long long max_degree) {
  if (m < 2) invalid("alternating group needs degree >= 2");
  if (m > max_degree) throw Error(ErrorKind::size_limit, "alternating group degree above cap");
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> elems;
  do {
    Permutation perm(p);
    if (perm.is_even()) elems.push_back(std::move(perm));
  } while (std::next_permutation(p.begin(), p.end()));
  return table_from_permutations(elems, GroupSpec::alternating(m));
}

GroupTable make_from_generators(std::span<const Permutation> generators, std::size_t max_order) {
  GroupSpec spec{Family::perm_generated, {}, {}, {}};
  for (const auto& gen : generators) spec.generators.push_back(gen.images());
  if (generators.empty()) return GroupTable(1, {0}, std::move(spec));
  const std::size_t degree = generators.front().degree();
  for (const auto& gen : generators)
    if (gen.degree() != degree) invalid("generators act on different domains");

  // Breadth-first closure under right multiplication by generators; every
  // non-identity element x is recorded as parent[x] * generators[via[x]].
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
      return h;
    }
  };
  std::unordered_map<std::vector<int>, std::uint32_t, VecHash> index;
  std::vector<Permutation> elems{Permutation::identity(degree)};
  index.emplace(elems[0].images(), 0);
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> via{0};
  const std::size_t ngen = generators.size();
  std::vector<std::vector<std::uint32_t>> right;  // right[x][s] = x * gen_s
  for (std::size_t head = 0; head < elems.size(); ++head) {
    right.emplace_back(ngen);
    for (std::size_t s = 0; s < ngen; ++s) {
      Permutation y = elems[head] * generators[s];
      auto [it, inserted] = index.emplace(y.images(), static_cast<std::uint32_t>(elems.size()));
      if (inserted) {
        if (elems.size() + 1 > std::min(max_order, kHardMaxOrder))
          throw Error(ErrorKind::size_limit, "permutation group closure exceeds cap");
        elems.push_back(std::move(y));
        parent.push_back(static_cast<std::uint32_t>(head));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right[head][s] = it->second;
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::uint16_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = static_cast<std::uint16_t>(a);
    // BFS order guarantees parent[b] < b.
    for (std::size_t b = 1; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint16_t>(right[mul[a * n + parent[b]]][via[b]]);
  }
  return GroupTable(n, std::move(mul), std::move(spec));
}

GroupTable build_group(const GroupSpec& spec, std::size_t max_order) {
  const auto& p = spec.params;
  auto need = [&](std::size_t k) {
    if (p.size() != k) invalid("wrong number of parameters for " + std::string(to_string(spec.family)));
  };
  switch (spec.family) {
    case Family::cyclic:
      need(1);
      return make_cyclic(p[0], max_order);
    case Family::dihedral:
      need(1);
      return make_dihedral(p[0], max_order);
    case Family::generalized_quaternion:
      need(1);
      return make_generalized_quaternion(p[0], max_order);
    case Family::modular:
      need(2);
      return make_modular(p[0], p[1], max_order);
    case Family::metacyclic_semidirect:
      need(4);
      return make_metacyclic_semidirect(p[0], p[1], p[2], p[3], max_order);
    case Family::symmetric:
      need(1);
      return make_symmetric(p[0]);
    case Family::alternating:
      need(1);
      return make_alternating(p[0]);
    case Family::perm_generated: {
      std::vector<Permutation> gens;
      for (const auto& images : spec.generators) gens.emplace_back(images);
      return make_from_generators(gens, max_order);
    }
    case Family::direct_product: {
      if (spec.factors.size() < 2) invalid("direct product needs at least two factors");
      long long total = 1;
      for (const auto& f : spec.factors) {
        const GroupTable part = build_group(f, max_order);
        total *= static_cast<long long>(part.order());
        check_cap(total, max_order);
      }
      GroupTable acc = build_group(spec.factors[0], max_order);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = make_direct_product(acc, build_group(spec.factors[i], max_order), max_order);
      return acc;
    }
    case Family::table_literal:
      break;
  }
  invalid("a table literal cannot be rebuilt from its descriptor");
}

// --- arithmetic helpers ----------------------------------------------------

std::size_t element_order(const GroupTable& g, Element a) { return g.elem_order(a); }

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long tau(long long n) {
  if (n < 1) invalid("tau needs n >= 1");
  long long count = 1;
  for (const auto& [p, e] : factorize(n)) count *= e + 1;
  return count;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long multiplicative_order(long long a, long long m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) invalid("multiplicative order needs gcd(a, m) = 1");
  long long k = 1;
  long long x = ((a % m) + m) % m;
  while (x != 1) {
    x = x * (((a % m) + m) % m) % m;
    ++k;
  }
  return k;
}

// --- group isomorphism -----------------------------------------------------

std::vector<Element> generating_set(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<Element> gens;
  ElementSet span(n);
  span.insert(0);
  std::size_t spanned = 1;
  for (Element x : by_order) {
    if (spanned == n) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = ElementSet(n);
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
    spanned = members.size();
  }
  return gens;
}

std::optional<std::vector<Element>> find_group_isomorphism(const GroupTable& g, const GroupTable& h,
                                                           std::size_t max_order) {
  if (g.order() > max_order || h.order() > max_order)
    throw Error(ErrorKind::size_limit, "group isomorphism search above order cap");
  const std::size_t n = g.order();
  if (h.order() != n) return std::nullopt;
  {
    std::vector<std::size_t> og(n), oh(n);
    for (Element a = 0; a < n; ++a) {
      og[a] = g.elem_order(a);
      oh[a] = h.elem_order(a);
    }
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh || g.is_abelian() != h.is_abelian()) return std::nullopt;
  }
  if (n == 1) return std::vector<Element>{0};

  const std::vector<Element> gens = generating_set(g);
  const std::size_t k = gens.size();

  // Spanning tree of g over gens: x = parent[x] * gens[via[x]].
  std::vector<Element> order_seen{0};
  std::vector<Element> parent(n, 0), via(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order_seen.size(); ++head)
    for (std::size_t s = 0; s < k; ++s) {
      const Element y = g.mul(order_seen[head], gens[s]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order_seen[head];
        via[y] = static_cast<Element>(s);
        order_seen.push_back(y);
      }
    }

  std::vector<std::vector<Element>> candidates(k);
  for (std::size_t s = 0; s < k; ++s)
    for (Element y = 0; y < n; ++y)
      if (h.elem_order(y) == g.elem_order(gens[s])) candidates[s].push_back(y);

  std::vector<Element> images(k);
  std::vector<Element> phi(n);
  std::vector<bool> used(n);

  auto try_complete = [&]() -> bool {
    std::fill(used.begin(), used.end(), false);
    phi[0] = 0;
    used[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
      const Element x = order_seen[i];
      const Element y = h.mul(phi[parent[x]], images[via[x]]);
      if (used[y]) return false;
      used[y] = true;
      phi[x] = y;
    }
    // A bijection compatible with right multiplication by every generator is
    // a homomorphism.
    for (Element x = 0; x < n; ++x)
      for (std::size_t s = 0; s < k; ++s)
        if (phi[g.mul(x, gens[s])] != h.mul(phi[x], images[s])) return false;
    return true;
  };

  // Depth-first over generator images, pruning on orders of pairwise products.
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k) return try_complete();
    for (Element y : candidates[depth]) {
      bool ok = true;
      for (std::size_t s = 0; s < depth && ok; ++s) {
        ok = g.elem_order(g.mul(gens[s], gens[depth])) == h.elem_order(h.mul(images[s], y)) &&
             g.elem_order(g.mul(gens[depth], gens[s])) == h.elem_order(h.mul(y, images[s])) &&
             (g.mul(gens[s], gens[depth]) == g.mul(gens[depth], gens[s])) ==
                 (h.mul(images[s], y) == h.mul(y, images[s]));
      }
      if (!ok) continue;
      images[depth] = y;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

}  // namespace permgraph
