#include <algorithm>
#include <numeric>
#include <set>

#include "fbc/error.hpp"
#include "fbc/finite_quotients.hpp"
#include "parallel.hpp"

namespace fbc {

std::vector<int> assignment_order(const Presentation& p) {
  const int n = p.generator_count();
  std::vector<std::set<int>> support;
  for (const Word& r : p.relators()) {
    std::set<int> s;
    for (Letter l : r.letters()) s.insert(l.gen() - 1);
    if (!s.empty()) support.push_back(std::move(s));
  }
  std::vector<char> in_some(static_cast<std::size_t>(n), 0);
  for (const auto& s : support) {
    for (int g : s) in_some[static_cast<std::size_t>(g)] = 1;
  }

  // Greedy: the generator that closes the most relators, then the one that
  // occurs in the most still-open relators.
  std::vector<int> order;
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  auto closes = [&](int g) {
    int c = 0;
    for (const auto& s : support) {
      if (!s.count(g)) continue;
      bool rest = std::all_of(s.begin(), s.end(), [&](int h) { return h == g || chosen[static_cast<std::size_t>(h)]; });
      c += rest ? 1 : 0;
    }
    return c;
  };
  auto open_occurrences = [&](int g) {
    int c = 0;
    for (const auto& s : support) {
      if (!s.count(g)) continue;
      bool open = std::any_of(s.begin(), s.end(), [&](int h) { return h != g && !chosen[static_cast<std::size_t>(h)]; });
      c += open ? 1 : 0;
    }
    return c;
  };
  for (;;) {
    int best = -1;
    std::pair<int, int> best_key{-1, -1};
    for (int g = 0; g < n; ++g) {
      if (chosen[static_cast<std::size_t>(g)] || !in_some[static_cast<std::size_t>(g)]) continue;
      const std::pair<int, int> key{closes(g), open_occurrences(g)};
      if (key > best_key) {
        best_key = key;
        best = g;
      }
    }
    if (best < 0) break;
    chosen[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  for (int g = 0; g < n; ++g) {
    if (!in_some[static_cast<std::size_t>(g)]) order.push_back(g);
  }
  return order;
}

namespace {

struct CompiledLetter {
  std::uint32_t slot;
  bool inverse;
};

class Search {
 public:
  Search(const Presentation& p, const FiniteGroup& q, std::span<const int> order, bool want_epis)
      : q_(q), want_epis_(want_epis) {
    const auto n = static_cast<std::size_t>(p.generator_count());
    std::vector<std::uint32_t> slot_of(n, 0);
    std::vector<char> seen(n, 0);
    if (order.size() != n) throw std::invalid_argument("assignment order must list every generator");
    for (std::size_t s = 0; s < n; ++s) {
      const auto g = static_cast<std::size_t>(order[s]);
      if (g >= n || seen[g]) throw std::invalid_argument("assignment order is not a permutation");
      seen[g] = 1;
      slot_of[g] = static_cast<std::uint32_t>(s);
    }

    std::vector<char> constrained(n, 0);
    checks_.resize(n);
    for (const Word& r : p.relators()) {
      if (r.empty()) continue;
      std::vector<CompiledLetter> compiled;
      std::uint32_t last = 0;
      for (Letter l : r.letters()) {
        const std::uint32_t s = slot_of[static_cast<std::size_t>(l.gen() - 1)];
        compiled.push_back({s, !l.positive()});
        last = std::max(last, s);
        constrained[s] = 1;
      }
      checks_[last].push_back(std::move(compiled));
    }

    // Trailing unconstrained slots contribute a factor |Q| each to the hom count.
    depth_ = n;
    if (!want_epis_) {
      while (depth_ > 0 && !constrained[depth_ - 1]) --depth_;
    }
    free_factor_ = 1;
    for (std::size_t s = depth_; s < n; ++s) {
      if (free_factor_ > UINT64_MAX / q_.order()) throw CapacityExceeded("hom count overflows 64 bits");
      free_factor_ *= q_.order();
    }
    slots_ = n;
  }

  QuotientCounts run(unsigned workers) const {
    if (depth_ == 0) return {free_factor_, 0};
    std::vector<QuotientCounts> per_root(q_.order());
    detail::parallel_for(q_.order(), workers, [&](std::size_t root) {
      std::vector<std::uint32_t> assign(slots_, q_.identity());
      assign[0] = static_cast<std::uint32_t>(root);
      QuotientCounts c;
      if (passes(0, assign)) descend(1, assign, c);
      per_root[root] = c;
    });
    QuotientCounts total;
    for (const auto& c : per_root) {
      total.homs += c.homs;
      total.epis += c.epis;
    }
    if (total.homs > UINT64_MAX / free_factor_) throw CapacityExceeded("hom count overflows 64 bits");
    total.homs *= free_factor_;
    return total;
  }

 private:
  bool passes(std::size_t slot, const std::vector<std::uint32_t>& assign) const {
    for (const auto& rel : checks_[slot]) {
      std::uint32_t acc = q_.identity();
      for (const CompiledLetter& l : rel) {
        const std::uint32_t g = assign[l.slot];
        acc = q_.mul(acc, l.inverse ? q_.inverse(g) : g);
      }
      if (acc != q_.identity()) return false;
    }
    return true;
  }

  void descend(std::size_t slot, std::vector<std::uint32_t>& assign, QuotientCounts& c) const {
    if (slot == depth_) {
      ++c.homs;
      if (want_epis_ && q_.generated_order(assign) == q_.order()) ++c.epis;
      return;
    }
    for (std::uint32_t x = 0; x < q_.order(); ++x) {
      assign[slot] = x;
      if (passes(slot, assign)) descend(slot + 1, assign, c);
    }
  }

  const FiniteGroup& q_;
  bool want_epis_;
  std::vector<std::vector<std::vector<CompiledLetter>>> checks_;
  std::size_t depth_ = 0;
  std::size_t slots_ = 0;
  std::uint64_t free_factor_ = 1;
};

}  // namespace

QuotientCounts count_quotients_in_order(const Presentation& p, const FiniteGroup& q,
                                        std::span<const int> order,
                                        const EnumerationOptions& options) {
  return Search(p, q, order, true).run(options.workers);
}

QuotientCounts count_quotients(const Presentation& p, const FiniteGroup& q,
                               const EnumerationOptions& options) {
  const auto order = assignment_order(p);
  return count_quotients_in_order(p, q, order, options);
}

std::uint64_t count_homs(const Presentation& p, const FiniteGroup& q, const EnumerationOptions& options) {
  const auto order = assignment_order(p);
  return Search(p, q, order, false).run(options.workers).homs;
}

std::uint64_t count_epis(const Presentation& p, const FiniteGroup& q, const EnumerationOptions& options) {
  return count_quotients(p, q, options).epis;
}

}  // namespace fbc
