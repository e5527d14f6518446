#include "tgraph/presentation.hpp"

#include <charconv>
#include <utility>

namespace tgraph {

namespace {

Int checked_product(const Exponents& bounds, Int cap) {
  Int product = 1;
  for (Eigen::Index i = 0; i < bounds.size(); ++i) {
    if (__builtin_mul_overflow(product, bounds[i], &product) || product > cap) {
      throw SizeLimitError("element count exceeds cap of " + std::to_string(cap));
    }
  }
  return product;
}

Int parse_int(std::string_view text) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer in group tag: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    values.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

GeneratorBounds::GeneratorBounds(Exponents bounds, Int element_cap)
    : bounds_(std::move(bounds)) {
  if (bounds_.size() == 0) {
    throw std::invalid_argument("bounds need at least one generator");
  }
  for (Eigen::Index i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i] < 2) {
      throw std::invalid_argument("every exponent bound must be >= 2, got " +
                                  std::to_string(bounds_[i]));
    }
  }
  element_count_ = checked_product(bounds_, element_cap);
}

GeneratorBounds::GeneratorBounds(std::initializer_list<Int> bounds, Int element_cap)
    : GeneratorBounds(Eigen::Map<const Exponents>(bounds.begin(),
                                                  static_cast<Eigen::Index>(bounds.size())),
                      element_cap) {}

bool GeneratorBounds::contains(const Exponents& e) const {
  if (e.size() != bounds_.size()) return false;
  return (e.array() >= 0).all() && (e.array() < bounds_.array()).all();
}

Int GeneratorBounds::index_of(const Exponents& e) const {
  if (e.size() != bounds_.size()) {
    throw IncompatibleElements("element has wrong generator count");
  }
  if (!contains(e)) {
    throw std::invalid_argument("exponent vector out of range for these bounds");
  }
  Int index = 0;
  for (Eigen::Index i = 0; i < bounds_.size(); ++i) {
    index = index * bounds_[i] + e[i];
  }
  return index;
}

Exponents GeneratorBounds::element_at(Int index) const {
  if (index < 0 || index >= element_count_) {
    throw std::out_of_range("element index out of range");
  }
  Exponents e(bounds_.size());
  for (Eigen::Index i = bounds_.size() - 1; i >= 0; --i) {
    e[i] = index % bounds_[i];
    index /= bounds_[i];
  }
  return e;
}

ElementTable GeneratorBounds::enumerate_elements() const {
  const Eigen::Index k = bounds_.size();
  ElementTable table(element_count_, k);
  table.row(0).setZero();
  for (Int v = 1; v < element_count_; ++v) {
    table.row(v) = table.row(v - 1);
    for (Eigen::Index i = k - 1; i >= 0; --i) {  // odometer step
      if (++table(v, i) < bounds_[i]) break;
      table(v, i) = 0;
    }
  }
  return table;
}

NamedGroup NamedGroup::cyclic(Int m) { return {Kind::Cyclic, {m}}; }

NamedGroup NamedGroup::product(std::vector<Int> orders) {
  return {Kind::DirectProductOfCyclics, std::move(orders)};
}

NamedGroup NamedGroup::dihedral(Int n) { return {Kind::Dihedral, {n}}; }

NamedGroup NamedGroup::q8() { return {Kind::Quaternion8, {}}; }

NamedGroup NamedGroup::s5() { return {Kind::Symmetric5, {}}; }

NamedGroup NamedGroup::parse(std::string_view tag) {
  const auto colon = tag.find(':');
  const std::string_view name = tag.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : tag.substr(colon + 1);
  if (name == "cyclic") return cyclic(parse_int(args));
  if (name == "product") return product(parse_int_list(args));
  if (name == "dihedral") return dihedral(parse_int(args));
  if (name == "q8" && args.empty()) return q8();
  if (name == "s5" && args.empty()) return s5();
  throw std::invalid_argument("unknown group tag: '" + std::string(tag) + "'");
}

std::string NamedGroup::tag() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic:" + std::to_string(params[0]);
    case Kind::DirectProductOfCyclics: {
      std::string out = "product:";
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(params[i]);
      }
      return out;
    }
    case Kind::Dihedral:
      return "dihedral:" + std::to_string(params[0]);
    case Kind::Quaternion8:
      return "q8";
    case Kind::Symmetric5:
      return "s5";
  }
  throw std::logic_error("unreachable");
}

GeneratorBounds bounds_of(const NamedGroup& group, Int element_cap) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (group.kind) {
    case NamedGroup::Kind::Cyclic:
      require(group.params.size() == 1 && group.params[0] >= 2,
              "cyclic group needs an order >= 2");
      return GeneratorBounds({group.params[0]}, element_cap);
    case NamedGroup::Kind::DirectProductOfCyclics: {
      require(!group.params.empty(), "product needs at least one factor");
      Exponents b(static_cast<Eigen::Index>(group.params.size()));
      for (std::size_t i = 0; i < group.params.size(); ++i) {
        require(group.params[i] >= 2, "every factor order must be >= 2");
        b[static_cast<Eigen::Index>(i)] = group.params[i];
      }
      return GeneratorBounds(std::move(b), element_cap);
    }
    case NamedGroup::Kind::Dihedral:
      require(group.params.size() == 1 && group.params[0] >= 2,
              "dihedral group needs n >= 2");
      return GeneratorBounds({2, group.params[0]}, element_cap);
    case NamedGroup::Kind::Quaternion8:
      return GeneratorBounds({2, 4}, element_cap);
    case NamedGroup::Kind::Symmetric5:
      return GeneratorBounds({2, 3, 4, 5}, element_cap);
  }
  throw std::logic_error("unreachable");
}

std::string word_of(const Exponents& e) {
  std::string word;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!word.empty()) word += ' ';
    if (i < 26) {
      word += static_cast<char>('a' + i);
    } else {
      word += 'g';
      word += std::to_string(i);
    }
    word += '^';
    word += std::to_string(e[i]);
  }
  return word.empty() ? "1" : word;
}

}  // namespace tgraph
