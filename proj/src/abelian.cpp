#include "gmr/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace gmr {

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords[k]);
  }
  return s + ")";
}

FinAbGroup FinAbGroup::make(std::vector<std::uint32_t> invariant_factors, std::uint64_t order_cap) {
  std::uint64_t order = 1;
  for (auto n : invariant_factors) {
    if (n == 0) invalid_input("E_FACTOR", "invariant factor must be >= 1");
    order *= n;
    if (order > order_cap)
      resource_limit("group order exceeds cap " + std::to_string(order_cap));
  }
  FinAbGroup g;
  g.factors_ = std::move(invariant_factors);
  g.order_ = static_cast<Index>(order);
  g.strides_.assign(g.factors_.size(), 1);
  for (std::size_t k = g.factors_.size(); k-- > 1;)
    g.strides_[k - 1] = g.strides_[k] * g.factors_[k];
  return g;
}

GroupElement FinAbGroup::element(Index a) const {
  GroupElement e;
  e.coords.resize(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) e.coords[k] = coord(a, k);
  return e;
}

bool FinAbGroup::contains(const GroupElement& e) const {
  if (e.coords.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (e.coords[k] >= factors_[k]) return false;
  return true;
}

Index FinAbGroup::index(const GroupElement& e) const {
  if (!contains(e))
    invalid_input("E_COORDINATES", "element " + e.to_string() + " does not belong to the group");
  Index a = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) a += e.coords[k] * strides_[k];
  return a;
}

Index FinAbGroup::add(Index a, Index b) const {
  Index r = 0;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const std::uint32_t n = factors_[k];
    const std::uint32_t s = a % n + b % n;
    a /= n;
    b /= n;
    r += (s >= n ? s - n : s) * strides_[k];
  }
  return r;
}

Index FinAbGroup::neg(Index a) const {
  Index r = 0;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const std::uint32_t n = factors_[k];
    const std::uint32_t c = a % n;
    a /= n;
    r += (c == 0 ? 0 : n - c) * strides_[k];
  }
  return r;
}

Index FinAbGroup::scale(Index a, std::int64_t n) const {
  Index r = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::int64_t f = factors_[k];
    std::int64_t c = (static_cast<std::int64_t>(coord(a, k)) * (n % f)) % f;
    if (c < 0) c += f;
    r += static_cast<Index>(c) * strides_[k];
  }
  return r;
}

Index FinAbGroup::element_order(Index a) const {
  std::uint64_t l = 1;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::uint64_t f = factors_[k];
    const std::uint64_t c = coord(a, k);
    l = std::lcm(l, f / std::gcd(f, c));
  }
  return static_cast<Index>(l);
}

std::vector<Index> FinAbGroup::generators() const {
  std::vector<Index> gens;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (factors_[k] > 1) gens.push_back(strides_[k]);
  return gens;
}

// ---------------------------------------------------------------------------

SpanBuilder::SpanBuilder(const FinAbGroup& g) : group_(&g), mask_(g.order(), 0), members_{0} {
  mask_[0] = 1;
}

bool SpanBuilder::add(Index g) {
  if (mask_[g]) return false;
  const std::size_t old = members_.size();
  Index m = g;
  while (!mask_[m]) {
    for (std::size_t h = 0; h < old; ++h) {
      const Index x = group_->add(members_[h], m);
      mask_[x] = 1;
      members_.push_back(x);
    }
    m = group_->add(m, g);
  }
  return true;
}

SpanBuilder::SpanBuilder(const Subgroup& start)
    : group_(&start.parent()), mask_(start.parent().order(), 0), members_(start.members()) {
  for (Index m : members_) mask_[m] = 1;
}

Subgroup SpanBuilder::finish() && {
  std::sort(members_.begin(), members_.end());
  return Subgroup(*group_, std::move(members_));
}

Subgroup Subgroup::zero(const FinAbGroup& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::whole(const FinAbGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::from_members(const FinAbGroup& g, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Index m : members)
    if (m >= g.order()) invalid_input("E_COORDINATES", "subgroup member outside the group");
  // A nonempty finite subset closed under addition is a subgroup; closure
  // under adding a generating set of the candidate itself is equivalent.
  Subgroup candidate = generated_by(g, members);
  if (candidate.members_ != members)
    invalid_input("E_NOT_SUBGROUP", "member set is not closed under addition");
  return candidate;
}

Subgroup Subgroup::generated_by(const FinAbGroup& g, std::span<const Index> gens) {
  SpanBuilder span(g);
  for (Index x : gens) {
    if (x >= g.order()) invalid_input("E_COORDINATES", "generator outside the group");
    span.add(x);
  }
  return std::move(span).finish();
}

bool Subgroup::contains(Index a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::vector<Index> Subgroup::generators() const {
  SpanBuilder span(parent_);
  std::vector<Index> gens;
  for (Index m : members_) {
    if (span.size() == members_.size()) break;
    if (span.add(m)) gens.push_back(m);
  }
  return gens;
}

Subgroup Subgroup::join(const Subgroup& other) const {
  if (other.members_.size() > members_.size()) return other.join(*this);
  SpanBuilder span(*this);
  for (Index m : other.generators()) span.add(m);
  return std::move(span).finish();
}

Subgroup Subgroup::meet(const Subgroup& other) const {
  std::vector<Index> both;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(both));
  return Subgroup(parent_, std::move(both));
}

// ---------------------------------------------------------------------------

bool is_additive(const FinAbGroup& g, const Endomorphism& map) {
  if (map.size() != g.order()) return false;
  if (map[0] != 0) return false;
  const auto gens = g.generators();
  for (Index x = 0; x < g.order(); ++x)
    for (Index e : gens)
      if (map[g.add(x, e)] != g.add(map[x], map[e])) return false;
  return true;
}

Subgroup subgroup_closure(const FinAbGroup& g, std::span<const GroupElement> seed,
                          std::span<const Endomorphism> closers) {
  for (const auto& c : closers) {
    if (c.size() != g.order()) invalid_input("E_CLOSER", "closer table is not total");
    for (Index v : c)
      if (v >= g.order()) invalid_input("E_CLOSER", "closer table entry outside the group");
    if (!is_additive(g, c)) invalid_input("E_CLOSER", "closer is not additive");
  }
  std::vector<Index> seeds;
  for (const auto& e : seed) seeds.push_back(g.index(e));
  return close_subgroup(g, seeds, [&](Index x, std::vector<Index>& out) {
    for (const auto& c : closers) out.push_back(c[x]);
  });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Index> prime_factors(Index n) {
  std::vector<Index> ps;
  for (Index p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

AbelianPresentation present_abelian(Index order, const std::function<Index(Index, Index)>& add) {
  auto times = [&](Index x, std::uint64_t n) {
    Index acc = 0, base = x;
    while (n) {
      if (n & 1) acc = add(acc, base);
      base = add(base, base);
      n >>= 1;
    }
    return acc;
  };
  const auto primes = prime_factors(order);

  // Element orders divide the group order.
  std::vector<Index> ord(order, order);
  for (Index x = 0; x < order; ++x)
    for (Index p : primes)
      while (ord[x] % p == 0 && times(x, ord[x] / p) == 0) ord[x] /= p;

  std::vector<Index> basis;
  std::vector<std::uint32_t> factors;

  for (Index p : primes) {
    std::vector<Index> sylow;
    for (Index x = 0; x < order; ++x) {
      Index o = ord[x];
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    // Greedy basis: repeatedly take the element of largest order modulo the
    // current span H and correct it by an element of H so that its order
    // equals that relative order; <x'> then meets H trivially.
    std::vector<std::uint8_t> in_span(order, 0);
    std::vector<Index> span{0};
    in_span[0] = 1;
    while (span.size() < sylow.size()) {
      Index best = 0, best_rel = 0;
      for (Index x : sylow) {
        if (in_span[x]) continue;
        Index rel = 1, y = x;
        while (!in_span[y]) {
          y = times(y, p);
          rel *= p;
        }
        if (rel > best_rel) {
          best_rel = rel;
          best = x;
        }
      }
      const Index target = times(best, best_rel);
      Index correction = order;
      for (Index h : span)
        if (times(h, best_rel) == target) {
          correction = h;
          break;
        }
      if (correction == order)
        throw std::logic_error("present_abelian: no order-preserving lift found");
      const Index fixed = add(best, times(correction, ord[correction] - 1));
      const std::size_t old = span.size();
      Index m = fixed;
      for (Index c = 1; c < best_rel; ++c) {
        for (std::size_t h = 0; h < old; ++h) {
          const Index s = add(span[h], m);
          in_span[s] = 1;
          span.push_back(s);
        }
        m = add(m, fixed);
      }
      basis.push_back(fixed);
      factors.push_back(best_rel);
    }
  }

  AbelianPresentation out;
  out.group = FinAbGroup::make(factors, order);
  out.to_group.assign(order, order);
  out.from_group.assign(order, 0);
  // Walk coordinates in lexicographic order, maintaining the element
  // sum_k c_k * basis_k incrementally per prefix.
  const std::size_t r = factors.size();
  std::vector<Index> prefix(r + 1, 0);
  std::vector<std::uint32_t> c(r, 0);
  for (Index idx = 0; idx < order; ++idx) {
    const Index x = prefix[r];
    if (out.to_group[x] != order) throw std::logic_error("present_abelian: map not injective");
    out.to_group[x] = idx;
    out.from_group[idx] = x;
    // Increment the mixed-radix counter.
    std::size_t k = r;
    while (k-- > 0) {
      if (++c[k] < factors[k]) break;
      c[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
    prefix[k + 1] = add(prefix[k + 1], basis[k]);
    for (std::size_t t = k + 1; t < r; ++t) prefix[t + 1] = prefix[t];
  }
  return out;
}

}  // namespace gmr
