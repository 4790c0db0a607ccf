#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fbc/error.hpp"
#include "fbc/finite_quotients.hpp"

namespace fbc {

std::string presentation_hash(const Presentation& p) {
  std::vector<std::string> keys;
  for (const Word& r : p.relators()) {
    const CyclicWord c = canonical_cyclic(r);
    std::string key;
    for (Letter l : c.letters()) key += std::to_string(l.value()) + ",";
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  std::string text = "n=" + std::to_string(p.generator_count());
  for (const auto& k : keys) text += ";" + k;

  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FingerprintCache::FingerprintCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string hash, label;
    QuotientCounts counts;
    if (std::getline(fields, hash, '\t') && std::getline(fields, label, '\t') &&
        (fields >> counts.homs >> counts.epis)) {
      entries_[{hash, label}] = counts;
    }
  }
}

std::optional<QuotientCounts> FingerprintCache::lookup(const std::string& hash,
                                                       const std::string& label) const {
  const auto it = entries_.find({hash, label});
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void FingerprintCache::record(const std::string& hash, const std::string& label,
                              const QuotientCounts& counts) {
  entries_[{hash, label}] = counts;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot append to fingerprint cache " + path_.string());
  out << hash << '\t' << label << '\t' << counts.homs << '\t' << counts.epis << '\n';
}

Fingerprint fingerprint(const Presentation& p, std::span<const FiniteGroup> library,
                        const EnumerationOptions& options, FingerprintCache* cache) {
  Fingerprint fp;
  const std::string hash = cache ? presentation_hash(p) : std::string();
  for (const FiniteGroup& q : library) {
    std::optional<QuotientCounts> counts;
    if (cache) counts = cache->lookup(hash, q.label());
    if (!counts) {
      counts = count_quotients(p, q, options);
      if (cache) cache->record(hash, q.label(), *counts);
    }
    fp.entries.push_back({q.label(), q.order(), counts->homs, counts->epis});
  }
  return fp;
}

FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
  const bool same_library =
      a.entries.size() == b.entries.size() &&
      std::equal(a.entries.begin(), a.entries.end(), b.entries.begin(),
                 [](const FingerprintEntry& x, const FingerprintEntry& y) { return x.label == y.label; });
  if (!same_library) throw LibraryMismatch("fingerprints were taken over different libraries");

  FingerprintComparison cmp;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].homs != b.entries[i].homs || a.entries[i].epis != b.entries[i].epis) {
      cmp.identical = false;
      cmp.first_difference = i;
      break;
    }
  }
  return cmp;
}

std::string FingerprintComparison::describe(const Fingerprint& a, const Fingerprint& b) const {
  std::ostringstream os;
  if (identical) {
    os << "IDENTICAL over library [";
    for (std::size_t i = 0; i < a.entries.size(); ++i) os << (i ? ", " : "") << a.entries[i].label;
    os << "]";
    return os.str();
  }
  const auto& x = a.entries[*first_difference];
  const auto& y = b.entries[*first_difference];
  os << "DIFFER at " << x.label << ": homs " << x.homs << " vs " << y.homs << ", epis " << x.epis
     << " vs " << y.epis;
  return os.str();
}

}  // namespace fbc
