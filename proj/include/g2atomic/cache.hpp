#pragma once

// On-disk store of atomic expansions: a JSON object keyed by "a,b" whose
// values use the expansion schema of serialize.hpp.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "g2atomic/combo.hpp"

namespace g2 {

class AtomicCache {
public:
  enum class LoadStatus { Missing, Loaded, Rejected };

  explicit AtomicCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Reads the file and recomputes one randomly chosen entry. A parse error
  /// or a mismatching entry rejects the whole file (the cache starts empty
  /// and `reason()` says why).
  LoadStatus load();

  [[nodiscard]] const std::string& reason() const { return reason_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool dirty() const { return dirty_; }

  [[nodiscard]] std::optional<Combination> find(Weight lam) const;
  void insert(Weight lam, const Combination& atomic_expansion);

  /// Writes all entries, keys sorted, one JSON document.
  void save() const;

private:
  std::filesystem::path path_;
  std::map<Weight, Combination> entries_;
  std::string reason_;
  bool dirty_ = false;
};

}  // namespace g2
