#include "fbc/finite_quotients.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "fbc/error.hpp"

namespace fbc {

Permutation parse_cycles(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t degree = min_degree;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", 1, i + 1);
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle", 1, i + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t point = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), point);
      if (ec != std::errc{} || point == 0) throw ParseError("points are 1-based integers", 1, i + 1);
      i = static_cast<std::size_t>(ptr - text.data());
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) {
        throw ParseError("repeated point in cycle", 1, i);
      }
      cycle.push_back(point - 1);
      degree = std::max<std::size_t>(degree, point);
    }
    cycles.push_back(std::move(cycle));
    skip();
  }
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  // Cycles compose right to left, as products of permutations acting on the left.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0U);
    for (std::size_t k = 0; k < it->size(); ++k) c[(*it)[k]] = (*it)[(k + 1) % it->size()];
    Permutation next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = c[p[x]];
    p = std::move(next);
  }
  return p;
}

FiniteGroup::FiniteGroup(std::string label, std::size_t order, std::vector<std::uint32_t> table,
                         std::uint32_t identity)
    : label_(std::move(label)), order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0 || table_.size() != order_ * order_ || identity_ >= order_) {
    throw std::invalid_argument("malformed multiplication table for " + label_);
  }
  inverse_.assign(order_, static_cast<std::uint32_t>(order_));
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      throw std::invalid_argument("identity law fails in " + label_);
    }
    for (std::uint32_t y = 0; y < order_; ++y) {
      if (table_[x * order_ + y] >= order_) throw std::invalid_argument("entry out of range in " + label_);
      if (mul(x, y) == identity_) inverse_[x] = y;
    }
    if (inverse_[x] == order_ || mul(inverse_[x], x) != identity_) {
      throw std::invalid_argument("inverse law fails in " + label_);
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order_ - 1));
  for (int k = 0; k < 256; ++k) {
    const auto x = pick(rng), y = pick(rng), z = pick(rng);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
      throw std::invalid_argument("associativity fails in " + label_);
    }
  }
}

std::size_t FiniteGroup::generated_order(std::span<const std::uint32_t> gens) const {
  std::vector<char> seen(order_, 0);
  std::vector<std::uint32_t> queue{identity_};
  seen[identity_] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

FiniteGroup build_group_from_permutations(std::string label, std::span<const Permutation> gens,
                                          std::size_t order_cap) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  auto widen = [degree](Permutation p) {
    const std::size_t old = p.size();
    p.resize(degree);
    for (std::size_t x = old; x < degree; ++x) p[x] = static_cast<std::uint32_t>(x);
    return p;
  };
  // (x * y)(p) = x(y(p))
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation z(degree);
    for (std::size_t p = 0; p < degree; ++p) z[p] = x[y[p]];
    return z;
  };

  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, boost::hash<Permutation>> index;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  elements.push_back(id);
  index.emplace(id, 0);
  std::vector<Permutation> wide;
  for (const auto& g : gens) wide.push_back(widen(g));

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : wide) {
      Permutation y = compose(elements[head], g);
      if (index.count(y)) continue;
      if (elements.size() >= order_cap) {
        throw OrderCapExceeded("group " + label + " exceeds order cap " + std::to_string(order_cap));
      }
      index.emplace(y, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = index.at(compose(elements[x], elements[y]));
  }
  return FiniteGroup(std::move(label), n, std::move(table), 0);
}

FiniteGroup load_permutation_group_file(const std::filesystem::path& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read permutation group file " + path.string());
  std::vector<Permutation> gens;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      gens.push_back(parse_cycles(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": bad generator", number, e.column());
    }
  }
  if (gens.empty()) gens.push_back(Permutation{0});
  return build_group_from_permutations(path.stem().string(), gens, order_cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::uint32_t> table(n * n);
  auto idx = [&](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint32_t>(x * b.order() + y);
  };
  for (std::uint32_t x1 = 0; x1 < a.order(); ++x1) {
    for (std::uint32_t y1 = 0; y1 < b.order(); ++y1) {
      for (std::uint32_t x2 = 0; x2 < a.order(); ++x2) {
        for (std::uint32_t y2 = 0; y2 < b.order(); ++y2) {
          table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  return FiniteGroup(a.label() + "x" + b.label(), n, std::move(table), idx(a.identity(), b.identity()));
}

namespace {

std::string cycle_text(std::size_t from, std::size_t to) {
  std::ostringstream os;
  os << '(';
  for (std::size_t p = from; p <= to; ++p) os << (p > from ? " " : "") << p;
  os << ')';
  return os.str();
}

FiniteGroup from_cycles(std::string label, std::initializer_list<std::string> gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g));
  return build_group_from_permutations(std::move(label), perms);
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 1) return FiniteGroup("Z1", 1, {0}, 0);
  return from_cycles("Z" + std::to_string(n), {cycle_text(1, n)});
}

FiniteGroup dihedral_group(std::size_t n) {
  // Rotation and the reflection p ↦ n + 2 − p (mod n) of an n-gon.
  std::string reflection;
  for (std::size_t p = 2; p < n + 2 - p; ++p) {
    reflection += "(" + std::to_string(p) + " " + std::to_string(n + 2 - p) + ")";
  }
  if (reflection.empty()) reflection = "()";
  auto g = from_cycles("D" + std::to_string(n), {cycle_text(1, n), reflection});
  return g;
}

FiniteGroup quaternion_group() {
  // Left regular action of i and j on {1, -1, i, -i, j, -j, k, -k}.
  return from_cycles("Q8", {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"});
}

FiniteGroup alternating_group(std::size_t n) {
  if (n < 3) return FiniteGroup("A" + std::to_string(n), 1, {0}, 0);
  std::vector<std::string> gens;
  gens.push_back(cycle_text(1, 3));
  for (std::size_t k = 4; k <= n; ++k) gens.push_back("(1 2 " + std::to_string(k) + ")");
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g));
  return build_group_from_permutations("A" + std::to_string(n), perms);
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 2) return FiniteGroup("S" + std::to_string(n), 1, {0}, 0);
  return from_cycles("S" + std::to_string(n), {cycle_text(1, n), "(1 2)"});
}

std::vector<FiniteGroup> standard_library(bool deep) {
  std::vector<FiniteGroup> lib;
  for (std::size_t n = 2; n <= 12; ++n) lib.push_back(cyclic_group(n));
  lib.push_back(dihedral_group(4));
  lib.push_back(dihedral_group(5));
  lib.push_back(dihedral_group(6));
  lib.push_back(quaternion_group());
  lib.push_back(alternating_group(4));
  lib.push_back(symmetric_group(4));
  lib.push_back(alternating_group(5));
  if (deep) lib.push_back(symmetric_group(5));
  return lib;
}

}  // namespace fbc
