#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvw/errors.hpp"
#include "mvw/limits.hpp"

namespace mvw {

/// A finite monoid given by its complete multiplication table. Elements are
/// dense indices in [0, size); immutable after construction.
///
/// The public constructor verifies the identity laws and associativity
/// eagerly (with a witness triple on failure). Internal builders whose
/// output is associative by construction use from_trusted_table to skip the
/// cubic check; validate() re-asserts the laws on demand.
class FiniteMonoid {
 public:
  FiniteMonoid(const std::vector<std::vector<int>>& table, int identity,
               std::vector<std::string> labels = {});

  static FiniteMonoid from_trusted_table(std::vector<int> flat_table, int size,
                                         int identity,
                                         std::vector<std::string> labels = {});

  int size() const { return size_; }
  int identity() const { return identity_; }

  int mul(int x, int y) const {
    check_element(x);
    check_element(y);
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }

  int power(int x, long k) const;
  /// The unique idempotent in {x, x^2, x^3, ...}.
  int idempotent_power(int x) const;
  bool is_idempotent(int x) const { return mul(x, x) == x; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// First element whose label matches, if any.
  int element_by_label(const std::string& label) const;

  const std::vector<int>& flat_table() const { return table_; }
  std::vector<std::vector<int>> table_rows() const;

  /// Re-asserts the monoid laws; throws like the checking constructor.
  void validate() const;

  bool operator==(const FiniteMonoid& other) const {
    return size_ == other.size_ && identity_ == other.identity_ &&
           table_ == other.table_;
  }

 private:
  FiniteMonoid() = default;

  void check_element(int x) const {
    if (x < 0 || x >= size_) {
      throw Error(ErrorKind::range_error,
                  "element " + std::to_string(x) + " out of range [0, " +
                      std::to_string(size_) + ")");
    }
  }

  int size_ = 1;
  int identity_ = 0;
  std::vector<int> table_;  // row-major, row = left factor
  std::vector<std::string> labels_;
};

/// Green's relations R and L: class partitions plus the right/left ideals
/// uM and Mu that define them.
struct GreenSummary {
  std::vector<int> r_class_of, l_class_of;
  std::vector<std::vector<int>> r_classes, l_classes;
  std::vector<std::vector<bool>> r_ideals, l_ideals;  // element -> membership

  bool same_r(int u, int v) const { return r_class_of[u] == r_class_of[v]; }
  bool same_l(int u, int v) const { return l_class_of[u] == l_class_of[v]; }
};

GreenSummary green(const FiniteMonoid& m);

enum class GreenOrder { same_class, strictly_below, strictly_above, incomparable };

const char* green_order_name(GreenOrder order);

/// Compares uM and vM by inclusion.
GreenOrder r_compare(const FiniteMonoid& m, int u, int v);
/// Compares Mu and Mv by inclusion.
GreenOrder l_compare(const FiniteMonoid& m, int u, int v);

bool is_r_trivial(const FiniteMonoid& m);
bool is_l_trivial(const FiniteMonoid& m);

/// Componentwise product on pairs (x1, x2) <-> x1 * |m2| + x2.
FiniteMonoid direct_product(const FiniteMonoid& m1, const FiniteMonoid& m2,
                            std::size_t size_cap = limits::product_size_cap);

int pair_index(const FiniteMonoid& m1, const FiniteMonoid& m2, int x1, int x2);
std::pair<int, int> unpair_index(const FiniteMonoid& m1, const FiniteMonoid& m2,
                                 int x);

/// Closure of total maps on {0, ..., points-1} under "apply f, then g"
/// composition, together with the identity map. element_word holds, per
/// element, a shortest word over the generator indices producing it.
struct TransformationMonoid {
  FiniteMonoid monoid;
  std::vector<int> generator_element;
  std::vector<std::vector<int>> element_map;
  std::vector<std::vector<int>> element_word;
};

TransformationMonoid make_from_transformations(
    int points, const std::vector<std::vector<int>>& generators,
    std::size_t size_cap = limits::transformation_size_cap);

}  // namespace mvw
