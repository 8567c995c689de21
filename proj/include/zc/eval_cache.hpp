#pragma once

#include <map>
#include <optional>
#include <string>

#include "zc/rational.hpp"
#include "zc/word.hpp"

namespace zc {

/// On-disk cache of evaluated values, keyed by (word, c, digits). A single
/// schema-versioned JSON file; caches written by other schema versions are
/// ignored on load.
class EvalCache {
 public:
  static constexpr const char* kFormatTag = "zc-eval-cache/1";

  EvalCache() = default;
  explicit EvalCache(std::string path) : path_(std::move(path)) { load(); }

  static std::string key(const Word& w, const Rational& c, long digits);

  std::optional<std::string> lookup(const Word& w, const Rational& c, long digits) const;
  void store(const Word& w, const Rational& c, long digits, const std::string& decimal);

  bool dirty() const { return dirty_; }
  size_t size() const { return entries_.size(); }
  /// Writes the cache back if anything changed.
  void save() const;

 private:
  void load();

  std::string path_;
  std::map<std::string, std::string> entries_;
  bool dirty_ = false;
};

}  // namespace zc
