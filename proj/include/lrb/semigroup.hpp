#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrb/error.hpp"

namespace lrb {

// Elements of a finite semigroup are dense indices into its table.
using ElementId = int;

// A finite monoid as a complete product table. Row index is the left
// factor, column index the right factor.
struct MultiplicationTable {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<ElementId> products;  // n*n, row-major
  ElementId identity = 0;

  ElementId product(ElementId a, ElementId b) const {
    return products[static_cast<std::size_t>(a) * n + b];
  }
  const std::string& label(ElementId s) const {
    return labels[static_cast<std::size_t>(s)];
  }
  std::optional<ElementId> find_label(std::string_view label) const {
    for (int i = 0; i < n; ++i)
      if (labels[static_cast<std::size_t>(i)] == label) return i;
    return std::nullopt;
  }
};

// A closed associative table with no designated identity element.
struct SemigroupData {
  std::vector<std::string> labels;
  std::vector<ElementId> products;  // n*n, row-major
};

struct TableDiagnostic {
  enum class Kind { ok, structure, closure, associativity, identity_law };
  Kind kind = Kind::ok;
  // Offending indices; meaning depends on kind (triple for associativity,
  // single element for the identity law, table cell for closure).
  ElementId a = -1, b = -1, c = -1;
  std::string message;

  bool ok() const { return kind == Kind::ok; }
};

inline TableDiagnostic validate_semigroup(const MultiplicationTable& t) {
  const auto fail = [](TableDiagnostic::Kind kind, ElementId a, ElementId b, ElementId c,
                       std::string message) {
    TableDiagnostic d;
    d.kind = kind;
    d.a = a;
    d.b = b;
    d.c = c;
    d.message = std::move(message);
    return d;
  };

  if (t.n < 1 || static_cast<int>(t.labels.size()) != t.n ||
      static_cast<std::size_t>(t.n) * t.n != t.products.size())
    return fail(TableDiagnostic::Kind::structure, -1, -1, -1,
                "inconsistent table dimensions");
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      if (t.labels[static_cast<std::size_t>(i)] == t.labels[static_cast<std::size_t>(j)])
        return fail(TableDiagnostic::Kind::structure, i, j, -1,
                    "duplicate label '" + t.labels[static_cast<std::size_t>(i)] + "'");
  if (t.identity < 0 || t.identity >= t.n)
    return fail(TableDiagnostic::Kind::structure, t.identity, -1, -1,
                "identity index out of range");

  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      const ElementId p = t.product(a, b);
      if (p < 0 || p >= t.n)
        return fail(TableDiagnostic::Kind::closure, a, b, -1,
                    "product(" + t.label(a) + ", " + t.label(b) + ") out of range");
    }

  for (int s = 0; s < t.n; ++s) {
    if (t.product(t.identity, s) != s || t.product(s, t.identity) != s)
      return fail(TableDiagnostic::Kind::identity_law, s, -1, -1,
                  "identity law fails at element '" + t.label(s) + "'");
  }

  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      const ElementId ab = t.product(a, b);
      for (int c = 0; c < t.n; ++c)
        if (t.product(ab, c) != t.product(a, t.product(b, c)))
          return fail(TableDiagnostic::Kind::associativity, a, b, c,
                      "associativity fails at (" + t.label(a) + ", " + t.label(b) + ", " +
                          t.label(c) + ")");
    }

  return {};
}

// Verdicts for the two defining identities x^2 = x and xyx = xy.
struct LawReport {
  bool is_band = true;
  bool is_left_regular = true;
  std::vector<std::pair<ElementId, ElementId>> band_counterexamples;
  std::vector<std::pair<ElementId, ElementId>> left_regular_counterexamples;
};

inline LawReport verify_left_regular_band(const MultiplicationTable& t,
                                          std::size_t counterexample_cap = 32) {
  LawReport report;
  for (int x = 0; x < t.n; ++x)
    if (t.product(x, x) != x) {
      report.is_band = false;
      if (report.band_counterexamples.size() < counterexample_cap)
        report.band_counterexamples.emplace_back(x, x);
    }
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      const ElementId xy = t.product(x, y);
      if (t.product(xy, x) != xy) {
        report.is_left_regular = false;
        if (report.left_regular_counterexamples.size() < counterexample_cap)
          report.left_regular_counterexamples.emplace_back(x, y);
      }
    }
  return report;
}

inline bool is_left_regular_band(const MultiplicationTable& t) {
  const LawReport r = verify_left_regular_band(t, 1);
  return r.is_band && r.is_left_regular;
}

// Adds a fresh two-sided identity at index 0 unless some element already
// acts as one, in which case the table is returned unchanged. A 1-element
// table always gains a fresh identity: its sole idempotent reads as a plain
// band element, not as an identity.
inline MultiplicationTable adjoin_identity(const SemigroupData& data) {
  const int n = static_cast<int>(data.labels.size());
  if (n == 0) throw Error("cannot adjoin an identity to an empty table");
  if (static_cast<std::size_t>(n) * n != data.products.size())
    throw Error("inconsistent table dimensions");
  const auto product = [&](ElementId a, ElementId b) {
    return data.products[static_cast<std::size_t>(a) * n + b];
  };

  for (int e = 0; n >= 2 && e < n; ++e) {
    bool is_identity = true;
    for (int s = 0; s < n && is_identity; ++s)
      is_identity = product(e, s) == s && product(s, e) == s;
    if (is_identity) {
      MultiplicationTable t;
      t.n = n;
      t.labels = data.labels;
      t.products = data.products;
      t.identity = e;
      return t;
    }
  }

  MultiplicationTable t;
  t.n = n + 1;
  const auto taken = [&](const std::string& candidate) {
    for (const auto& l : data.labels)
      if (l == candidate) return true;
    return false;
  };
  std::string identity_label = "e";
  if (taken(identity_label)) identity_label = "id";
  for (int k = 1; taken(identity_label); ++k) identity_label = "id" + std::to_string(k);
  t.labels.push_back(identity_label);
  t.labels.insert(t.labels.end(), data.labels.begin(), data.labels.end());
  t.products.assign(static_cast<std::size_t>(t.n) * t.n, 0);
  for (int s = 0; s < t.n; ++s) {
    t.products[static_cast<std::size_t>(0) * t.n + s] = s;
    t.products[static_cast<std::size_t>(s) * t.n + 0] = s;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t.products[static_cast<std::size_t>(a + 1) * t.n + (b + 1)] =
          product(a, b) + 1;
  t.identity = 0;
  return t;
}

struct ClosureOptions {
  std::size_t element_cap = 100000;
};

// Abstract elements are canonical byte encodings; two elements are equal
// exactly when their encodings are.
using ProductOracle =
    std::function<std::string(const std::string&, const std::string&)>;

// Table of the submonoid generated by the seeds: breadth-first discovery
// order, one fresh identity adjoined when no element acts as one. Throws
// when the cap is hit or when the closed table is not associative (an
// oracle inconsistent with its own equality decisions).
inline MultiplicationTable close_generators(
    const std::vector<std::string>& generator_labels, const ProductOracle& product,
    const std::vector<std::string>& seeds, const ClosureOptions& options = {}) {
  if (generator_labels.size() != seeds.size())
    throw Error("one label per seed element required");

  std::vector<std::string> encodings;  // discovery order
  std::vector<std::string> labels;
  std::unordered_map<std::string, ElementId> index_of;
  std::vector<ElementId> generator_ids;

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto [it, inserted] = index_of.try_emplace(seeds[i], encodings.size());
    if (inserted) {
      encodings.push_back(seeds[i]);
      labels.push_back(generator_labels[i]);
    }
    generator_ids.push_back(it->second);
  }

  for (std::size_t next = 0; next < encodings.size(); ++next) {
    for (const ElementId g : generator_ids) {
      const std::string result =
          product(encodings[next], encodings[static_cast<std::size_t>(g)]);
      const auto [it, inserted] = index_of.try_emplace(result, encodings.size());
      if (inserted) {
        if (encodings.size() >= options.element_cap)
          throw Error("closure exceeds the element cap");
        encodings.push_back(result);
        labels.push_back(result);
      }
    }
  }

  // Disambiguate labels of discovered elements that collide with earlier ones.
  {
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (seen.count(labels[i]))
        labels[i] += "#" + std::to_string(i);
      seen.emplace(labels[i], 1);
    }
  }

  const int closure_size = static_cast<int>(encodings.size());
  if (closure_size == 0) {
    MultiplicationTable trivial;
    trivial.n = 1;
    trivial.labels = {"e"};
    trivial.products = {0};
    trivial.identity = 0;
    return trivial;
  }
  SemigroupData data;
  data.labels = std::move(labels);
  data.products.resize(static_cast<std::size_t>(closure_size) * closure_size);
  for (int a = 0; a < closure_size; ++a)
    for (int b = 0; b < closure_size; ++b) {
      const std::string result = product(encodings[static_cast<std::size_t>(a)],
                                         encodings[static_cast<std::size_t>(b)]);
      const auto it = index_of.find(result);
      if (it == index_of.end())
        throw Error("oracle left the closure on (" + data.labels[a] + ", " +
                    data.labels[b] + ")");
      data.products[static_cast<std::size_t>(a) * closure_size + b] = it->second;
    }

  MultiplicationTable table = adjoin_identity(data);

  // An identity found among the closure elements moves to index 0.
  if (table.identity != 0) {
    const int n = table.n;
    std::vector<ElementId> order(static_cast<std::size_t>(n));
    order[0] = table.identity;
    for (int i = 0, pos = 1; i < n; ++i)
      if (i != table.identity) order[static_cast<std::size_t>(pos++)] = i;
    std::vector<ElementId> inverse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(order[i])] = i;

    MultiplicationTable moved;
    moved.n = n;
    moved.identity = 0;
    moved.labels.resize(static_cast<std::size_t>(n));
    moved.products.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      moved.labels[static_cast<std::size_t>(i)] = table.labels[static_cast<std::size_t>(order[i])];
      for (int j = 0; j < n; ++j)
        moved.products[static_cast<std::size_t>(i) * n + j] =
            inverse[static_cast<std::size_t>(table.product(order[i], order[j]))];
    }
    table = std::move(moved);
  }

  const TableDiagnostic diagnostic = validate_semigroup(table);
  if (!diagnostic.ok())
    throw Error("oracle produced an inconsistent closure: " + diagnostic.message);
  return table;
}

}  // namespace lrb
