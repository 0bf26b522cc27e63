#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "flis/errors.hpp"

namespace flis {

/// A leaf count, or kImpossible when no induced subtree of that size exists.
/// kImpossible stands for "minus infinity" and compares below every real count.
using LeafCount = int;
inline constexpr LeafCount kImpossible = -1;

/// The sequence i -> max leaves over induced subtrees with i vertices,
/// indexed 0..order. Rendered as space-separated counts with "*" for
/// impossible entries.
class LeafFunction {
 public:
  LeafFunction() = default;
  explicit LeafFunction(std::vector<LeafCount> values) : values_(std::move(values)) {}

  /// All entries impossible; the usual search initialization then sets [0]=0.
  static LeafFunction all_impossible(std::size_t order) {
    return LeafFunction(std::vector<LeafCount>(order + 1, kImpossible));
  }

  std::size_t size() const { return values_.size(); }
  std::size_t order() const { return values_.empty() ? 0 : values_.size() - 1; }

  LeafCount operator[](std::size_t i) const { return values_[i]; }
  LeafCount& operator[](std::size_t i) { return values_[i]; }

  bool possible(std::size_t i) const { return values_[i] != kImpossible; }

  const std::vector<LeafCount>& values() const { return values_; }

  bool operator==(const LeafFunction&) const = default;

  bool non_decreasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (values_[i] < values_[i - 1]) return false;
    return true;
  }

  std::string to_table() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ' ';
      if (values_[i] == kImpossible)
        out += '*';
      else
        out += std::to_string(values_[i]);
    }
    return out;
  }

  std::string to_csv() const {
    std::string out = "i,leaves\n";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out += std::to_string(i);
      out += ',';
      if (values_[i] != kImpossible) out += std::to_string(values_[i]);
      out += '\n';
    }
    return out;
  }

  /// Parses the table form back, e.g. "0 0 2 2 3 2 * * *".
  static LeafFunction from_table(std::string_view text) {
    std::vector<LeafCount> vals;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "*") {
        vals.push_back(kImpossible);
        continue;
      }
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size() || v < 0)
        throw ParseError("bad leaf-function entry: " + tok);
      vals.push_back(v);
    }
    if (vals.empty()) throw ParseError("empty leaf-function table");
    return LeafFunction(std::move(vals));
  }

 private:
  std::vector<LeafCount> values_;
};

}  // namespace flis
