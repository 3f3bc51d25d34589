#include "osw/relations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "osw/errors.hpp"

namespace osw {

Partition Partition::from_class_of(std::vector<int> ids) {
  Partition p;
  const int n = static_cast<int>(ids.size());
  std::vector<int> renumber(n, -1);
  int next = 0;
  p.class_of.resize(n);
  for (int e = 0; e < n; ++e) {
    int id = ids[e];
    if (renumber[id] < 0) renumber[id] = next++;
    p.class_of[e] = renumber[id];
  }
  p.classes.assign(next, Subset{});
  for (int e = 0; e < n; ++e) p.classes[p.class_of[e]].add(e);
  return p;
}

Partition Partition::identity(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return from_class_of(std::move(ids));
}

Partition Partition::universal(int n) {
  return from_class_of(std::vector<int>(n, 0));
}

Partition Partition::common_refinement(const Partition& a, const Partition& b) {
  const int n = a.size();
  std::vector<int> ids(n);
  for (int e = 0; e < n; ++e)
    ids[e] = a.class_of[e] * (b.num_classes()) + b.class_of[e];
  // renumbered by first appearance in from_class_of
  std::vector<int> dense(n);
  std::vector<int> seen;
  for (int e = 0; e < n; ++e) {
    auto it = std::find(seen.begin(), seen.end(), ids[e]);
    if (it == seen.end()) {
      seen.push_back(ids[e]);
      dense[e] = static_cast<int>(seen.size()) - 1;
    } else {
      dense[e] = static_cast<int>(it - seen.begin());
    }
  }
  return from_class_of(std::move(dense));
}

bool Partition::refines(const Partition& coarser) const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (same_class(a, b) && !coarser.same_class(a, b)) return false;
  return true;
}

Partition green(const OrderedSemigroup& s, GreenRelation rel) {
  if (rel == GreenRelation::H)
    return Partition::common_refinement(green(s, GreenRelation::L),
                                        green(s, GreenRelation::R));
  IdealSide side = rel == GreenRelation::L   ? IdealSide::Left
                   : rel == GreenRelation::R ? IdealSide::Right
                                             : IdealSide::TwoSided;
  const int n = s.size();
  std::vector<Subset> ideal(n);
  for (int a = 0; a < n; ++a) ideal[a] = principal_ideal(s, a, side);
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) {
    ids[a] = a;
    for (int b = 0; b < a; ++b)
      if (ideal[b] == ideal[a]) {
        ids[a] = ids[b];
        break;
      }
  }
  return Partition::from_class_of(std::move(ids));
}

Partition j_via_sandwich(const OrderedSemigroup& s) {
  const int n = s.size();
  for (int e = 0; e < n; ++e)
    if (!s.leq(e, s.mul(e, e))) throw NotIdempotentOrderedError(e);

  // half(a,b): exist x,y with a <= a*x*b*y*a
  auto half = [&](int a, int b) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (s.leq(a, s.mul(s.mul(s.mul(s.mul(a, x), b), y), a))) return true;
    return false;
  };

  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rel[a * n + b] = half(a, b) && half(b, a);

  for (int a = 0; a < n; ++a)
    if (!rel[a * n + a])
      throw InternalCheckFailedError(
          "sandwich relation is not reflexive at element " + std::to_string(a) +
          " on structure " + s.name());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c])
          throw InternalCheckFailedError(
              "sandwich relation is not transitive at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ") on structure " +
              s.name());

  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) {
    ids[a] = a;
    for (int b = 0; b < a; ++b)
      if (rel[a * n + b]) {
        ids[a] = ids[b];
        break;
      }
  }
  return Partition::from_class_of(std::move(ids));
}

CongruenceFlags congruence_kind(const OrderedSemigroup& s, const Partition& p) {
  const int n = s.size();
  CongruenceFlags f;

  for (int a = 0; a < n && f.left_congruence; ++a)
    for (int b = 0; b < n && f.left_congruence; ++b) {
      if (!p.same_class(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (!p.same_class(s.mul(c, a), s.mul(c, b))) {
          f.left_congruence = false;
          f.left_witness = {a, b, c};
          break;
        }
    }
  for (int a = 0; a < n && f.right_congruence; ++a)
    for (int b = 0; b < n && f.right_congruence; ++b) {
      if (!p.same_class(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (!p.same_class(s.mul(a, c), s.mul(b, c))) {
          f.right_congruence = false;
          f.right_witness = {a, b, c};
          break;
        }
    }
  f.congruence = f.left_congruence && f.right_congruence;

  bool laws = true;
  for (int a = 0; a < n && laws; ++a)
    if (!p.same_class(a, s.mul(a, a))) {
      laws = false;
      f.semilattice_witness = {a};
    }
  for (int a = 0; a < n && laws; ++a)
    for (int b = 0; b < n && laws; ++b)
      if (!p.same_class(s.mul(a, b), s.mul(b, a))) {
        laws = false;
        f.semilattice_witness = {a, b};
      }
  f.semilattice = f.congruence && laws;

  bool complete_law = true;
  for (int a = 0; a < n && complete_law; ++a)
    for (int b = 0; b < n && complete_law; ++b)
      if (s.leq(a, b) && !p.same_class(a, s.mul(a, b))) {
        complete_law = false;
        f.complete_witness = {a, b};
      }
  f.complete_semilattice = f.semilattice && complete_law;
  return f;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
    return true;
  }
};

Partition partition_from_uf(UnionFind& uf, int n) {
  std::vector<int> ids(n);
  for (int e = 0; e < n; ++e) ids[e] = uf.find(e);
  return Partition::from_class_of(std::move(ids));
}

}  // namespace

Partition congruence_closure(const OrderedSemigroup& s,
                             const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.size();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    // a~b newly merged: every left and right translate must follow
    for (int c = 0; c < n; ++c) {
      work.emplace_back(s.mul(c, a), s.mul(c, b));
      work.emplace_back(s.mul(a, c), s.mul(b, c));
    }
  }
  return partition_from_uf(uf, n);
}

Partition least_complete_semilattice_congruence(const OrderedSemigroup& s) {
  const int n = s.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) pairs.emplace_back(a, s.mul(a, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      pairs.emplace_back(s.mul(a, b), s.mul(b, a));
      if (s.leq(a, b)) pairs.emplace_back(a, s.mul(a, b));
    }

  // The generator set already contains every law instance, so the closure
  // passes on the first iteration; the loop re-seeds defensively and
  // terminates because the class count strictly decreases.
  for (;;) {
    Partition p = congruence_closure(s, pairs);
    CongruenceFlags f = congruence_kind(s, p);
    if (f.semilattice && f.complete_semilattice) return p;
    if (f.semilattice_witness) {
      const auto& w = *f.semilattice_witness;
      if (w.size() == 1)
        pairs.emplace_back(w[0], s.mul(w[0], w[0]));
      else
        pairs.emplace_back(s.mul(w[0], w[1]), s.mul(w[1], w[0]));
    } else if (f.complete_witness) {
      const auto& w = *f.complete_witness;
      pairs.emplace_back(w[0], s.mul(w[0], w[1]));
    } else {
      throw InternalCheckFailedError(
          "congruence closure produced a non-congruence on " + s.name());
    }
  }
}

std::vector<Partition> all_semilattice_congruences(const OrderedSemigroup& s) {
  const int n = s.size();
  if (n > 8)
    throw SizeBoundError("semilattice congruence enumeration supports n <= 8, got " +
                         std::to_string(n));
  std::vector<Partition> out;
  // restricted growth strings in lexicographic order
  std::vector<int> rgs(n, 0);
  auto emit = [&] {
    Partition p = Partition::from_class_of(rgs);
    if (congruence_kind(s, p).semilattice) out.push_back(std::move(p));
  };
  for (;;) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int maxprev = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxprev) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

}  // namespace osw
