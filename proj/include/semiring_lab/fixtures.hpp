#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semiring.hpp"

namespace semiring_lab {

/// The two-element Boolean semiring ({0,1}, or, and).
inline FiniteSemiring bool2() {
  return FiniteSemiring::validate({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

/// The ring of integers modulo n, n >= 2.
inline FiniteSemiring zmod(int n) {
  if (n < 2 || static_cast<std::size_t>(n) > max_order) throw BadParams("zmod needs 2 <= n <= 64");
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  return FiniteSemiring::validate(add, mul);
}

/// {0..k} with saturating arithmetic: x+y = min(x+y, k), xy = min(xy, k).
inline FiniteSemiring trunc(int k) {
  if (k < 1 || static_cast<std::size_t>(k) >= max_order) throw BadParams("trunc needs 1 <= k < 64");
  const int n = k + 1;
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a][b] = std::min(a + b, k);
      mul[a][b] = std::min(a * b, k);
    }
  return FiniteSemiring::validate(add, mul);
}

/// Labels of A x B: (0,0) first, (1,1) second, the rest in lexicographic order.
inline std::vector<std::pair<Element, Element>> product_pairs(const FiniteSemiring& a, const FiniteSemiring& b) {
  std::vector<std::pair<Element, Element>> out{{0, 0}, {1, 1}};
  for (Element x = 0; x < static_cast<Element>(a.order()); ++x)
    for (Element y = 0; y < static_cast<Element>(b.order()); ++y)
      if (!(x == 0 && y == 0) && !(x == 1 && y == 1)) out.emplace_back(x, y);
  return out;
}

/// Componentwise product, labelled as in product_pairs.
inline FiniteSemiring prod(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.order() * b.order() > max_order) throw BadParams("product order exceeds 64");
  const auto pairs = product_pairs(a, b);
  const std::size_t n = pairs.size();
  auto index = [&](std::pair<Element, Element> p) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
  };
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [x1, y1] = pairs[i];
      auto [x2, y2] = pairs[j];
      add[i][j] = index({a.add(x1, x2), b.add(y1, y2)});
      mul[i][j] = index({a.mul(x1, x2), b.mul(y1, y2)});
    }
  return FiniteSemiring::validate(add, mul);
}

namespace detail {

class FixtureParser {
 public:
  explicit FixtureParser(std::string_view text) : text_(text) {}

  FiniteSemiring parse() {
    auto s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  FiniteSemiring expr() {
    skip_ws();
    std::string name;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name == "bool2") return bool2();
    if (name == "zmod" || name == "trunc") {
      expect('(');
      int v = number();
      expect(')');
      return name == "zmod" ? zmod(v) : trunc(v);
    }
    if (name == "prod") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return prod(a, b);
    }
    fail("unknown fixture '" + name + "'");
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("expected a small integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw BadParams("fixture '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds a named fixture: "bool2", "zmod(n)", "trunc(k)" or "prod(A,B)".
inline FiniteSemiring fixture(std::string_view name) { return detail::FixtureParser(name).parse(); }

/// The fixture set used by the axiom and PROVEN suites, smallest first.
inline std::vector<std::string> standard_fixture_names() {
  return {"bool2",       "zmod(2)",           "zmod(3)",           "zmod(4)",          "zmod(5)",
          "zmod(6)",     "trunc(1)",          "trunc(2)",          "trunc(3)",         "prod(zmod(2),bool2)",
          "prod(bool2,bool2)", "prod(zmod(2),zmod(2))", "prod(zmod(2),zmod(3))", "prod(bool2,zmod(3))",
          "prod(bool2,trunc(2))", "prod(trunc(2),zmod(2))"};
}

}  // namespace semiring_lab
