#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tgraph/errors.hpp"

namespace tgraph {

using Int = std::int64_t;

// One exponent per generator: an element a^{e(0)} b^{e(1)} ... in normal form.
using Exponents = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Row v holds the exponent vector of vertex v; rows are in lexicographic order.
using ElementTable =
    Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr Int kDefaultElementCap = 1'000'000;

// Exponent ranges (e_1,...,e_k), each >= 2, defining a normal-form family.
// The element count (product of the ranges) is checked against a cap at
// construction. Immutable after construction.
class GeneratorBounds {
 public:
  explicit GeneratorBounds(Exponents bounds, Int element_cap = kDefaultElementCap);
  GeneratorBounds(std::initializer_list<Int> bounds,
                  Int element_cap = kDefaultElementCap);

  Eigen::Index generator_count() const { return bounds_.size(); }
  const Exponents& values() const { return bounds_; }
  Int operator[](Eigen::Index i) const { return bounds_[i]; }
  Int element_count() const { return element_count_; }

  bool contains(const Exponents& e) const;

  // Lexicographic vertex numbering. index_of and element_at are mutually
  // inverse on valid inputs.
  Int index_of(const Exponents& e) const;
  Exponents element_at(Int index) const;
  ElementTable enumerate_elements() const;

  friend bool operator==(const GeneratorBounds& a, const GeneratorBounds& b) {
    return a.bounds_ == b.bounds_;
  }

 private:
  Exponents bounds_;
  Int element_count_ = 0;
};

// The named families with a fixed normal form.
struct NamedGroup {
  enum class Kind { Cyclic, DirectProductOfCyclics, Dihedral, Quaternion8, Symmetric5 };

  Kind kind = Kind::Cyclic;
  std::vector<Int> params;  // Cyclic: {m}; Dihedral: {n}; product: the orders

  static NamedGroup cyclic(Int m);
  static NamedGroup product(std::vector<Int> orders);
  static NamedGroup dihedral(Int n);
  static NamedGroup q8();
  static NamedGroup s5();

  // Tagged-string form: "cyclic:12", "product:2,4", "dihedral:7", "q8", "s5".
  static NamedGroup parse(std::string_view tag);
  std::string tag() const;
};

GeneratorBounds bounds_of(const NamedGroup& group,
                          Int element_cap = kDefaultElementCap);

// Renders an exponent vector as a word in the generators a, b, c, ...;
// zero exponents are dropped and the identity renders as "1".
// Example: (1,3) -> "a^1 b^3".
std::string word_of(const Exponents& e);

}  // namespace tgraph
