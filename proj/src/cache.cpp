#include "g2atomic/cache.hpp"

#include <fstream>
#include <iterator>
#include <random>

#include "g2atomic/precanonical.hpp"
#include "g2atomic/serialize.hpp"

namespace g2 {

namespace {

std::string key_of(Weight w) { return std::to_string(w.a) + "," + std::to_string(w.b); }

}  // namespace

AtomicCache::LoadStatus AtomicCache::load() {
  entries_.clear();
  reason_.clear();
  dirty_ = false;
  std::ifstream in(path_);
  if (!in) return LoadStatus::Missing;

  const auto reject = [&](std::string why) {
    entries_.clear();
    reason_ = std::move(why);
    return LoadStatus::Rejected;
  };
  try {
    const Json doc = Json::parse(in);
    if (!doc.is_object()) return reject("top level is not an object");
    for (const auto& [key, value] : doc.items()) {
      Expansion e = expansion_from_json(value);
      if (key != key_of(e.weight)) return reject("key '" + key + "' does not match weight " + e.weight.to_string());
      if (!e.weight.is_dominant()) return reject("entry " + key + " is not dominant");
      if (!e.terms.basis().equivalent(BasisLabel::atomic())) return reject("entry " + key + " is not atomic");
      entries_.insert_or_assign(e.weight, std::move(e.terms));
    }
  } catch (const std::exception& ex) {
    return reject(ex.what());
  }
  if (entries_.empty()) return LoadStatus::Loaded;

  std::mt19937_64 rng{std::random_device{}()};
  std::uniform_int_distribution<std::size_t> pick(0, entries_.size() - 1);
  const auto& [lam, stored] = *std::next(entries_.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
  if (!(atomic(lam) == stored)) return reject("entry " + key_of(lam) + " does not match recomputation");
  return LoadStatus::Loaded;
}

std::optional<Combination> AtomicCache::find(Weight lam) const {
  const auto it = entries_.find(lam);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void AtomicCache::insert(Weight lam, const Combination& atomic_expansion) {
  entries_.insert_or_assign(lam, atomic_expansion);
  dirty_ = true;
}

void AtomicCache::save() const {
  // Keys in lattice order so the file itself is deterministic.
  Json doc = Json::object();
  for (const auto& [lam, x] : entries_) doc[key_of(lam)] = expansion_to_json(x, lam);
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
  out << doc.dump() << "\n";
}

}  // namespace g2
