#include "pqs/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pqs/error.hpp"

namespace pqs {

namespace {

constexpr std::size_t kTableLimit = 2048;

} // namespace

Permutation::Permutation(std::vector<std::uint32_t> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw ValidationError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    throw ValidationError("empty permutation text");

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ValidationError("expected '(' in permutation \"" + std::string(text) + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size())
        throw ValidationError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ValidationError("bad character in permutation \"" + std::string(text) + "\"");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v >= degree)
          throw ValidationError("point " + std::to_string(v) + " outside domain of size " +
                                std::to_string(degree));
        ++pos;
      }
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto x = cycle[k];
      if (moved[x])
        throw ValidationError("cycles are not disjoint in \"" + std::string(text) + "\"");
      moved[x] = true;
      im[x] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
  if (degree() != rhs.degree())
    throw ValidationError("composing permutations of different degree");
  std::vector<std::uint32_t> im(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    im[x] = images_[rhs.images_[x]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(degree());
  for (std::uint32_t x = 0; x < degree(); ++x)
    out.images_[images_[x]] = x;
  return out;
}

bool Permutation::is_identity() const
{
  for (std::uint32_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += '(';
    auto y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first)
        out += ' ';
      out += std::to_string(y);
      first = false;
      y = images_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

bool Subgroup::contains(ElementId g) const
{
  return std::binary_search(members.begin(), members.end(), g);
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId FiniteGroup::pow(ElementId a, long long k) const
{
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElementId result = identity();
  ElementId base = a;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementId FiniteGroup::conjugate(ElementId t, ElementId g) const
{
  return mul(mul(t, g), inv(t));
}

ElementId FiniteGroup::index_of(const Permutation& p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    throw ValidationError("permutation " + p.to_cycle_string() + " is not in the group");
  return it->second;
}

bool FiniteGroup::contains(const Permutation& p) const
{
  return index_.count(p) != 0;
}

FiniteGroup group_from_generators(std::span<const Permutation> gens, std::size_t order_cap)
{
  if (gens.empty())
    throw ValidationError("group needs at least one generator");
  const auto degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw ValidationError("generators act on domains of different size");

  FiniteGroup G;
  G.degree_ = degree;
  auto add = [&](Permutation p) {
    auto [it, inserted] = G.index_.emplace(p, static_cast<ElementId>(G.elements_.size()));
    if (inserted) {
      G.elements_.push_back(std::move(p));
      if (G.elements_.size() > order_cap)
        throw ValidationError("group order exceeds cap of " + std::to_string(order_cap));
    }
    return it->second;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto& g : gens) {
      // copy: add() may reallocate elements_
      Permutation x = G.elements_[head];
      add(g * x);
    }
  }
  for (const auto& g : gens)
    G.generators_.push_back(G.index_.at(g));

  const auto n = G.order();
  G.inverse_.resize(n);
  for (ElementId a = 0; a < n; ++a)
    G.inverse_[a] = G.index_.at(G.elements_[a].inverse());

  if (n <= kTableLimit) {
    G.table_.resize(n * n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        G.table_[static_cast<std::size_t>(a) * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
  }
  return G;
}

std::size_t element_order(const FiniteGroup& G, ElementId g)
{
  std::size_t k = 1;
  for (auto x = g; x != FiniteGroup::identity(); x = G.mul(x, g))
    ++k;
  return k;
}

Subgroup cyclic_subgroup(const FiniteGroup& G, ElementId g)
{
  Subgroup H;
  H.members.push_back(FiniteGroup::identity());
  for (auto x = g; x != FiniteGroup::identity(); x = G.mul(x, g))
    H.members.push_back(x);
  std::sort(H.members.begin(), H.members.end());
  return H;
}

Subgroup generated_subgroup(const FiniteGroup& G, std::span<const ElementId> gens)
{
  std::vector<bool> in(G.order(), false);
  std::vector<ElementId> queue{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : gens) {
      auto y = G.mul(g, queue[head]);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup{std::move(queue)};
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, ElementId t)
{
  Subgroup out;
  out.members.reserve(H.order());
  for (auto h : H.members)
    out.members.push_back(G.conjugate(t, h));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Subgroup intersect_subgroups(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2)
{
  Subgroup out;
  std::set_intersection(H1.members.begin(), H1.members.end(), H2.members.begin(),
                        H2.members.end(), std::back_inserter(out.members));
  for (auto a : out.members) {
    if (!out.contains(G.inv(a)))
      throw InconsistencyError("subgroup intersection not closed under inverse");
    for (auto b : out.members)
      if (!out.contains(G.mul(a, b)))
        throw InconsistencyError("subgroup intersection not closed under products");
  }
  return out;
}

std::vector<ElementId> left_cosets(const FiniteGroup& G, const Subgroup& H)
{
  std::vector<bool> covered(G.order(), false);
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (covered[g])
      continue;
    reps.push_back(g);
    for (auto h : H.members)
      covered[G.mul(g, h)] = true;
  }
  return reps;
}

std::vector<std::size_t> coset_lookup(const FiniteGroup& G, const Subgroup& H,
                                      std::span<const ElementId> reps)
{
  std::vector<std::size_t> lookup(G.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (auto h : H.members)
      lookup[G.mul(reps[c], h)] = c;
  return lookup;
}

std::vector<std::vector<std::size_t>> orbit_partition(const FiniteGroup& G,
                                                      std::size_t npoints,
                                                      const GroupAction& action)
{
  const auto& gens = G.generators();
  for (std::size_t p = 0; p < npoints; ++p) {
    if (action(FiniteGroup::identity(), p) != p)
      throw ValidationError("group action: identity moves point " + std::to_string(p));
    for (auto g : gens)
      for (auto h : gens)
        if (action(g, action(h, p)) != action(G.mul(g, h), p))
          throw ValidationError("group action: compatibility fails at point " +
                                std::to_string(p));
  }

  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(npoints, false);
  for (std::size_t p = 0; p < npoints; ++p) {
    if (seen[p])
      continue;
    std::vector<std::size_t> orbit{p};
    seen[p] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto g : gens) {
        auto q = action(g, orbit[head]);
        if (q >= npoints)
          throw ValidationError("group action leaves the point set");
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

} // namespace pqs
