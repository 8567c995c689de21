#include "zc/eval_cache.hpp"

#include <fstream>

#include "json.hpp"

namespace zc {

std::string EvalCache::key(const Word& w, const Rational& c, long digits) {
  return w.str() + "|" + format_rational(c) + "|" + std::to_string(digits);
}

std::optional<std::string> EvalCache::lookup(const Word& w, const Rational& c,
                                             long digits) const {
  auto it = entries_.find(key(w, c, digits));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void EvalCache::store(const Word& w, const Rational& c, long digits, const std::string& decimal) {
  auto [it, inserted] = entries_.insert_or_assign(key(w, c, digits), decimal);
  (void)it;
  dirty_ = true;
}

void EvalCache::load() {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return;  // unreadable cache: start fresh
  }
  if (!doc.is_object() || doc.value("format", "") != kFormatTag) return;
  auto it = doc.find("entries");
  if (it == doc.end() || !it->is_object()) return;
  for (const auto& [k, v] : it->items()) {
    if (v.is_string()) entries_[k] = v.get<std::string>();
  }
}

void EvalCache::save() const {
  if (path_.empty() || !dirty_) return;
  nlohmann::json doc;
  doc["format"] = kFormatTag;
  doc["entries"] = nlohmann::json::object();
  for (const auto& [k, v] : entries_) doc["entries"][k] = v;
  std::ofstream out(path_);
  out << doc.dump(1) << "\n";
}

}  // namespace zc
