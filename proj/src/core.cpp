#include "osw/core.hpp"

#include <algorithm>

namespace osw {

OrderedSemigroup OrderedSemigroup::from_parts_unchecked(std::string name, int n,
                                                        std::vector<std::uint8_t> table,
                                                        std::vector<Subset> below,
                                                        std::vector<std::string> labels) {
  OrderedSemigroup s;
  s.name_ = std::move(name);
  s.n_ = n;
  s.table_ = std::move(table);
  s.below_ = std::move(below);
  s.labels_ = std::move(labels);
  s.above_.assign(n, Subset{});
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < n; ++t)
      if (s.below_[a].contains(t)) s.above_[t].add(a);
  return s;
}

std::string_view validation_kind_name(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::NonAssociative: return "non-associative";
    case ValidationKind::NotReflexive: return "not-reflexive";
    case ValidationKind::NotAntisymmetric: return "not-antisymmetric";
    case ValidationKind::NotTransitive: return "not-transitive";
    case ValidationKind::Incompatible: return "incompatible";
    case ValidationKind::MalformedTable: return "malformed-table";
    case ValidationKind::IndexOutOfRange: return "index-out-of-range";
  }
  return "unknown";
}

namespace {

// Shared law checks over a fully materialized (table, leq) pair. One error
// per kind, lexicographically first witness.
void check_laws(int n, const std::vector<std::uint8_t>& table,
                const std::vector<std::uint8_t>& leq,
                std::vector<ValidationError>& errors, bool closure_applied) {
  auto mul = [&](int a, int b) { return table[a * n + b]; };
  auto le = [&](int a, int b) { return leq[a * n + b] != 0; };

  [&] {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            errors.push_back({ValidationKind::NonAssociative,
                              {i, j, k},
                              "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                                  std::to_string(k) + " != " + std::to_string(i) + "*(" +
                                  std::to_string(j) + "*" + std::to_string(k) + ")"});
            return;
          }
  }();

  if (!closure_applied) {
    for (int i = 0; i < n; ++i) {
      if (!le(i, i)) {
        errors.push_back({ValidationKind::NotReflexive, {i}, ""});
        break;
      }
    }
    bool trans_violation = false;
    for (int i = 0; i < n && !trans_violation; ++i)
      for (int j = 0; j < n && !trans_violation; ++j)
        for (int k = 0; k < n && !trans_violation; ++k)
          if (le(i, j) && le(j, k) && !le(i, k)) {
            errors.push_back({ValidationKind::NotTransitive, {i, j, k}, ""});
            trans_violation = true;
          }
  }

  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = i + 1; j < n && !found; ++j) {
      if (le(i, j) && le(j, i)) {
        errors.push_back({ValidationKind::NotAntisymmetric, {i, j}, ""});
        found = true;
      }
    }
    if (found) break;
  }

  bool incompat = false;
  for (int a = 0; a < n && !incompat; ++a)
    for (int b = 0; b < n && !incompat; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < n && !incompat; ++c) {
        if (!le(mul(c, a), mul(c, b)) || !le(mul(a, c), mul(b, c))) {
          errors.push_back({ValidationKind::Incompatible,
                            {a, b, c},
                            std::to_string(a) + " <= " + std::to_string(b) +
                                " but multiplication by " + std::to_string(c) +
                                " does not preserve it"});
          incompat = true;
        }
      }
    }
}

ValidationResult finish(std::string name, int n, std::vector<std::uint8_t> table,
                        const std::vector<std::uint8_t>& leq,
                        std::vector<std::string> labels,
                        std::vector<ValidationError> errors) {
  if (!errors.empty()) return {std::nullopt, std::move(errors)};
  std::vector<Subset> below(n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (leq[a * n + b]) below[b].add(a);
  return {OrderedSemigroup::from_parts_unchecked(std::move(name), n, std::move(table),
                                                 std::move(below), std::move(labels)),
          {}};
}

}  // namespace

ValidationResult validate(const RawStructure& raw) {
  std::vector<ValidationError> errors;
  const int n = raw.n;

  if (n < 1 || n > kMaxElements) {
    errors.push_back({ValidationKind::MalformedTable,
                      {},
                      "n must be between 1 and " + std::to_string(kMaxElements)});
    return {std::nullopt, std::move(errors)};
  }
  if (static_cast<int>(raw.table.size()) != n) {
    errors.push_back({ValidationKind::MalformedTable,
                      {},
                      "expected " + std::to_string(n) + " table rows, got " +
                          std::to_string(raw.table.size())});
    return {std::nullopt, std::move(errors)};
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw.table[i].size()) != n) {
      errors.push_back({ValidationKind::MalformedTable, {i}, "row has wrong length"});
      return {std::nullopt, std::move(errors)};
    }
  }
  if (!raw.labels.empty() && static_cast<int>(raw.labels.size()) != n) {
    errors.push_back({ValidationKind::MalformedTable, {}, "labels list has wrong length"});
    return {std::nullopt, std::move(errors)};
  }

  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = raw.table[i][j];
      if (v < 0 || v >= n) {
        if (errors.empty() || errors.back().kind != ValidationKind::IndexOutOfRange)
          errors.push_back({ValidationKind::IndexOutOfRange,
                            {i, j},
                            "table entry " + std::to_string(v) + " outside [0," +
                                std::to_string(n) + ")"});
        v = 0;  // placeholder; structure is rejected anyway
      }
      table[i * n + j] = static_cast<std::uint8_t>(v);
    }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (std::size_t k = 0; k < raw.order.size(); ++k) {
    auto [i, j] = raw.order[k];
    if (i < 0 || i >= n || j < 0 || j >= n) {
      errors.push_back({ValidationKind::IndexOutOfRange,
                        {static_cast<int>(k)},
                        "order pair [" + std::to_string(i) + "," + std::to_string(j) +
                            "] outside [0," + std::to_string(n) + ")"});
      return {std::nullopt, std::move(errors)};
    }
    leq[i * n + j] = 1;
  }
  if (!errors.empty()) return {std::nullopt, std::move(errors)};

  // Reflexive-transitive closure (Warshall), so inputs can list Hasse-style
  // minimal pairs only.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  check_laws(n, table, leq, errors, /*closure_applied=*/true);
  return finish(raw.name, n, std::move(table), leq, raw.labels, std::move(errors));
}

ValidationResult validate_order_matrix(std::string name, int n,
                                       const std::vector<std::uint8_t>& table,
                                       const std::vector<std::uint8_t>& leq,
                                       std::vector<std::string> labels) {
  std::vector<ValidationError> errors;
  if (n < 1 || n > kMaxElements ||
      table.size() != static_cast<std::size_t>(n) * n ||
      leq.size() != static_cast<std::size_t>(n) * n) {
    errors.push_back({ValidationKind::MalformedTable, {}, "bad dimensions"});
    return {std::nullopt, std::move(errors)};
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i * n + j] >= n) {
        errors.push_back({ValidationKind::IndexOutOfRange, {i, j}, ""});
        return {std::nullopt, std::move(errors)};
      }
  check_laws(n, table, leq, errors, /*closure_applied=*/false);
  return finish(std::move(name), n, table, leq, std::move(labels), std::move(errors));
}

Subset downset(const OrderedSemigroup& s, Subset h) {
  Subset out;
  for (int e = 0; e < s.size(); ++e)
    if (h.contains(e)) out |= s.below(e);
  return out;
}

Subset principal_ideal(const OrderedSemigroup& s, int a, IdealSide side) {
  const int n = s.size();
  Subset gen = Subset::single(a);
  if (side == IdealSide::Left || side == IdealSide::TwoSided)
    for (int x = 0; x < n; ++x) gen.add(s.mul(x, a));
  if (side == IdealSide::Right || side == IdealSide::TwoSided)
    for (int x = 0; x < n; ++x) gen.add(s.mul(a, x));
  if (side == IdealSide::TwoSided)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) gen.add(s.mul(s.mul(x, a), y));
  return downset(s, gen);
}

Subset sandwich(const OrderedSemigroup& s, int a, int b) {
  Subset out;
  for (int x = 0; x < s.size(); ++x) out.add(s.mul(s.mul(a, x), b));
  return out;
}

OrderedSemigroup restrict_to_subset(const OrderedSemigroup& s, Subset members,
                                    std::string name) {
  if (members.empty()) throw ClassNotClosedError("cannot restrict to the empty subset");
  const std::vector<int> elems = members.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<int> local(s.size(), -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;

  std::vector<std::uint8_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = s.mul(elems[i], elems[j]);
      if (!members.contains(prod))
        throw ClassNotClosedError("subset of " + s.name() + " is not product-closed: " +
                                  std::to_string(elems[i]) + "*" + std::to_string(elems[j]) +
                                  " = " + std::to_string(prod) + " lies outside");
      table[i * m + j] = static_cast<std::uint8_t>(local[prod]);
    }
  std::vector<Subset> below(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (s.leq(elems[i], elems[j])) below[j].add(i);
  return OrderedSemigroup::from_parts_unchecked(std::move(name), m, std::move(table),
                                                std::move(below));
}

Verdict check_power_monotonicity(const OrderedSemigroup& s) {
  const int n = s.size();
  const int max_exp = 2 * n + 1;
  Verdict v;
  for (int a = 0; a < n; ++a) {
    std::vector<int> pow(max_exp + 1);
    pow[1] = a;
    for (int e = 2; e <= max_exp; ++e) pow[e] = s.mul(pow[e - 1], a);
    for (int m = 1; m <= max_exp; ++m)
      for (int e = m; e <= max_exp; ++e)
        if (!s.leq(pow[m], pow[e])) {
          v.holds = false;
          v.counterexample = {a, m, e};
          return v;
        }
  }
  return v;
}

}  // namespace osw
