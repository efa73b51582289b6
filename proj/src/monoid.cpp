#include "mvw/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mvw {

FiniteMonoid::FiniteMonoid(const std::vector<std::vector<int>>& table,
                           int identity, std::vector<std::string> labels) {
  size_ = static_cast<int>(table.size());
  if (size_ == 0) {
    throw Error(ErrorKind::format_error, "multiplication table is empty");
  }
  table_.reserve(static_cast<std::size_t>(size_) * size_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != size_) {
      throw Error(ErrorKind::format_error, "multiplication table is not square");
    }
    for (int entry : row) {
      if (entry < 0 || entry >= size_) {
        throw Error(ErrorKind::range_error,
                    "table entry " + std::to_string(entry) +
                        " out of range [0, " + std::to_string(size_) + ")");
      }
      table_.push_back(entry);
    }
  }
  if (identity < 0 || identity >= size_) {
    throw Error(ErrorKind::range_error, "identity index out of range");
  }
  identity_ = identity;
  if (!labels.empty() && static_cast<int>(labels.size()) != size_) {
    throw Error(ErrorKind::format_error,
                "label count does not match monoid size");
  }
  labels_ = std::move(labels);
  validate();
}

FiniteMonoid FiniteMonoid::from_trusted_table(std::vector<int> flat_table,
                                              int size, int identity,
                                              std::vector<std::string> labels) {
  FiniteMonoid m;
  m.size_ = size;
  m.identity_ = identity;
  m.table_ = std::move(flat_table);
  m.labels_ = std::move(labels);
  return m;
}

void FiniteMonoid::validate() const {
  for (int x = 0; x < size_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      throw Error(ErrorKind::identity_violation,
                  "identity law fails at element " + std::to_string(x));
    }
  }
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      int xy = mul(x, y);
      for (int z = 0; z < size_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          throw AssociativityError(
              x, y, z,
              "associativity fails at (" + std::to_string(x) + ", " +
                  std::to_string(y) + ", " + std::to_string(z) + ")");
        }
      }
    }
  }
}

int FiniteMonoid::power(int x, long k) const {
  check_element(x);
  if (k < 0) {
    throw Error(ErrorKind::range_error, "negative exponent");
  }
  int acc = identity_;
  int base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteMonoid::idempotent_power(int x) const {
  check_element(x);
  // Walk x, x^2, ... until the cycle closes; the idempotent is x^m for the
  // least multiple m of the cycle length with m >= the tail length.
  std::vector<int> powers{identity_};  // powers[k] = x^k
  std::vector<int> first_seen(static_cast<std::size_t>(size_), -1);
  int cur = x;
  int exponent = 1;
  while (first_seen[static_cast<std::size_t>(cur)] < 0) {
    first_seen[static_cast<std::size_t>(cur)] = exponent;
    powers.push_back(cur);
    cur = mul(cur, x);
    ++exponent;
  }
  int tail = first_seen[static_cast<std::size_t>(cur)];
  int cycle = exponent - tail;
  int m = ((tail + cycle - 1) / cycle) * cycle;
  return powers[static_cast<std::size_t>(m)];
}

std::string FiniteMonoid::label(int x) const {
  check_element(x);
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

int FiniteMonoid::element_by_label(const std::string& label) const {
  for (int x = 0; x < size_; ++x) {
    if (this->label(x) == label) return x;
  }
  throw Error(ErrorKind::format_error, "no element labeled \"" + label + "\"");
}

std::vector<std::vector<int>> FiniteMonoid::table_rows() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(size_));
  for (int x = 0; x < size_; ++x) {
    rows[static_cast<std::size_t>(x)].assign(
        table_.begin() + static_cast<std::size_t>(x) * size_,
        table_.begin() + static_cast<std::size_t>(x + 1) * size_);
  }
  return rows;
}

namespace {

std::vector<bool> right_ideal(const FiniteMonoid& m, int u) {
  std::vector<bool> ideal(static_cast<std::size_t>(m.size()), false);
  for (int x = 0; x < m.size(); ++x) ideal[static_cast<std::size_t>(m.mul(u, x))] = true;
  return ideal;
}

std::vector<bool> left_ideal(const FiniteMonoid& m, int u) {
  std::vector<bool> ideal(static_cast<std::size_t>(m.size()), false);
  for (int x = 0; x < m.size(); ++x) ideal[static_cast<std::size_t>(m.mul(x, u))] = true;
  return ideal;
}

GreenOrder compare_ideals(const std::vector<bool>& a, const std::vector<bool>& b) {
  bool a_in_b = true, b_in_a = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) a_in_b = false;
    if (b[i] && !a[i]) b_in_a = false;
  }
  if (a_in_b && b_in_a) return GreenOrder::same_class;
  if (a_in_b) return GreenOrder::strictly_below;
  if (b_in_a) return GreenOrder::strictly_above;
  return GreenOrder::incomparable;
}

void partition_by_ideal(const std::vector<std::vector<bool>>& ideals,
                        std::vector<int>& class_of,
                        std::vector<std::vector<int>>& classes) {
  std::map<std::vector<bool>, int> seen;
  class_of.assign(ideals.size(), -1);
  for (std::size_t u = 0; u < ideals.size(); ++u) {
    auto [it, inserted] = seen.try_emplace(ideals[u], static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    class_of[u] = it->second;
    classes[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(u));
  }
}

}  // namespace

const char* green_order_name(GreenOrder order) {
  switch (order) {
    case GreenOrder::same_class: return "same-class";
    case GreenOrder::strictly_below: return "strictly-below";
    case GreenOrder::strictly_above: return "strictly-above";
    case GreenOrder::incomparable: return "incomparable";
  }
  return "?";
}

GreenSummary green(const FiniteMonoid& m) {
  GreenSummary g;
  g.r_ideals.reserve(static_cast<std::size_t>(m.size()));
  g.l_ideals.reserve(static_cast<std::size_t>(m.size()));
  for (int u = 0; u < m.size(); ++u) {
    g.r_ideals.push_back(right_ideal(m, u));
    g.l_ideals.push_back(left_ideal(m, u));
  }
  partition_by_ideal(g.r_ideals, g.r_class_of, g.r_classes);
  partition_by_ideal(g.l_ideals, g.l_class_of, g.l_classes);
  return g;
}

GreenOrder r_compare(const FiniteMonoid& m, int u, int v) {
  return compare_ideals(right_ideal(m, u), right_ideal(m, v));
}

GreenOrder l_compare(const FiniteMonoid& m, int u, int v) {
  return compare_ideals(left_ideal(m, u), left_ideal(m, v));
}

bool is_r_trivial(const FiniteMonoid& m) {
  for (const auto& cls : green(m).r_classes) {
    if (cls.size() > 1) return false;
  }
  return true;
}

bool is_l_trivial(const FiniteMonoid& m) {
  for (const auto& cls : green(m).l_classes) {
    if (cls.size() > 1) return false;
  }
  return true;
}

int pair_index(const FiniteMonoid&, const FiniteMonoid& m2, int x1, int x2) {
  return x1 * m2.size() + x2;
}

std::pair<int, int> unpair_index(const FiniteMonoid&, const FiniteMonoid& m2,
                                 int x) {
  return {x / m2.size(), x % m2.size()};
}

FiniteMonoid direct_product(const FiniteMonoid& m1, const FiniteMonoid& m2,
                            std::size_t size_cap) {
  std::size_t n = static_cast<std::size_t>(m1.size()) * m2.size();
  if (n > size_cap) {
    throw Error(ErrorKind::size_budget_exceeded,
                "direct product has " + std::to_string(n) +
                    " elements, cap is " + std::to_string(size_cap));
  }
  int n2 = m2.size();
  std::vector<int> table(n * n);
  for (int x1 = 0; x1 < m1.size(); ++x1) {
    for (int x2 = 0; x2 < n2; ++x2) {
      std::size_t row = static_cast<std::size_t>(x1) * n2 + x2;
      for (int y1 = 0; y1 < m1.size(); ++y1) {
        for (int y2 = 0; y2 < n2; ++y2) {
          std::size_t col = static_cast<std::size_t>(y1) * n2 + y2;
          table[row * n + col] = m1.mul(x1, y1) * n2 + m2.mul(x2, y2);
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (m1.has_labels() && m2.has_labels()) {
    labels.reserve(n);
    for (int x1 = 0; x1 < m1.size(); ++x1) {
      for (int x2 = 0; x2 < n2; ++x2) {
        labels.push_back("(" + m1.label(x1) + "," + m2.label(x2) + ")");
      }
    }
  }
  int identity = m1.identity() * n2 + m2.identity();
  return FiniteMonoid::from_trusted_table(std::move(table), static_cast<int>(n),
                                          identity, std::move(labels));
}

TransformationMonoid make_from_transformations(
    int points, const std::vector<std::vector<int>>& generators,
    std::size_t size_cap) {
  if (points <= 0) {
    throw Error(ErrorKind::range_error, "point count must be positive");
  }
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != points) {
      throw Error(ErrorKind::format_error,
                  "generator is not a total map on the points");
    }
    for (int image : g) {
      if (image < 0 || image >= points) {
        throw Error(ErrorKind::range_error, "generator image out of range");
      }
    }
  }

  std::vector<int> identity_map(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) identity_map[static_cast<std::size_t>(p)] = p;

  // Product fg = "apply f, then g", so word -> action is a homomorphism.
  auto compose = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (std::size_t p = 0; p < f.size(); ++p) {
      h[p] = g[static_cast<std::size_t>(f[p])];
    }
    return h;
  };

  std::vector<std::vector<int>> maps{identity_map};
  std::vector<std::vector<int>> words{{}};
  std::map<std::vector<int>, int> index{{identity_map, 0}};
  std::vector<int> generator_element(generators.size(), -1);

  std::deque<int> todo{0};
  while (!todo.empty()) {
    int e = todo.front();
    todo.pop_front();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      auto next = compose(maps[static_cast<std::size_t>(e)], generators[gi]);
      auto [it, inserted] = index.try_emplace(next, static_cast<int>(maps.size()));
      if (inserted) {
        if (maps.size() + 1 > size_cap) {
          throw Error(ErrorKind::size_budget_exceeded,
                      "transformation closure exceeds cap of " +
                          std::to_string(size_cap));
        }
        maps.push_back(std::move(next));
        auto word = words[static_cast<std::size_t>(e)];
        word.push_back(static_cast<int>(gi));
        words.push_back(std::move(word));
        todo.push_back(it->second);
      }
      if (e == 0) generator_element[gi] = it->second;
    }
  }

  std::size_t n = maps.size();
  std::vector<int> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = index.at(compose(maps[x], maps[y]));
    }
  }

  std::vector<std::string> labels;
  if (generators.size() <= 26) {
    labels.reserve(n);
    for (const auto& word : words) {
      if (word.empty()) {
        labels.emplace_back("1");
      } else {
        std::string s;
        for (int gi : word) s.push_back(static_cast<char>('a' + gi));
        labels.push_back(std::move(s));
      }
    }
  }

  TransformationMonoid result{
      FiniteMonoid::from_trusted_table(std::move(table), static_cast<int>(n), 0,
                                       std::move(labels)),
      std::move(generator_element), std::move(maps), std::move(words)};
  return result;
}

}  // namespace mvw
