#include "fbc/free_map.hpp"

#include <algorithm>
#include <string>

#include "fbc/error.hpp"

namespace fbc {

FreeMap::FreeMap(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw RankMismatch("rank must be positive");
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw RankMismatch("expected " + std::to_string(rank) + " generator images, got " +
                       std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (w.rank() != rank) {
      throw RankMismatch("image of rank " + std::to_string(w.rank()) + " in a rank " +
                         std::to_string(rank) + " map");
    }
  }
}

FreeMap FreeMap::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) images.push_back(Word::generator(rank, g));
  return FreeMap(rank, std::move(images));
}

std::size_t FreeMap::max_image_length() const {
  std::size_t m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

Word apply(const FreeMap& f, const Word& w, std::size_t cap) {
  if (w.rank() != f.rank()) {
    throw RankMismatch("word of rank " + std::to_string(w.rank()) + " given to a rank " +
                       std::to_string(f.rank()) + " map");
  }
  // Images of all 2r letters in one array, indexed by Letter::value() + r.
  const int r = f.rank();
  std::vector<Letter> flat;
  std::vector<std::size_t> start(static_cast<std::size_t>(2 * r + 2), 0);
  for (int v = -r; v <= r; ++v) {
    start[static_cast<std::size_t>(v + r)] = flat.size();
    if (v == 0) continue;
    const auto img = f.image(v < 0 ? -v : v).letters();
    if (v > 0) {
      flat.insert(flat.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) flat.push_back(it->inverse());
    }
  }
  start.back() = flat.size();

  std::size_t bound = 0;
  for (Letter l : w.letters()) {
    const auto k = static_cast<std::size_t>(l.value() + r);
    bound += start[k + 1] - start[k];
  }
  if (bound > cap) {
    // The result may still fit; reduce letter by letter so the cap applies to what is kept.
    ReducingBuffer buf(r, cap);
    for (Letter l : w.letters()) {
      const auto k = static_cast<std::size_t>(l.value() + r);
      buf.append_reduced(std::span<const Letter>(flat.data() + start[k], flat.data() + start[k + 1]));
    }
    return std::move(buf).take();
  }

  std::vector<Letter> out(bound);
  Letter* const base = out.data();
  Letter* o = base;
  const Letter* const images = flat.data();
  for (Letter l : w.letters()) {
    const auto k = static_cast<std::size_t>(l.value() + r);
    const Letter* p = images + start[k];
    const Letter* const e = images + start[k + 1];
    while (p != e && o != base && o[-1] == p->inverse()) {
      --o;
      ++p;
    }
    o = std::copy(p, e, o);
  }
  out.resize(static_cast<std::size_t>(o - base));
  return Word(r, std::move(out));
}

FreeMap compose(const FreeMap& f, const FreeMap& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("cannot compose maps of rank " + std::to_string(f.rank()) + " and " +
                       std::to_string(g.rank()));
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (const Word& gx : g.images()) images.push_back(apply(f, gx));
  return FreeMap(f.rank(), std::move(images));
}

IntMatrix abelianization_matrix(const FreeMap& f) {
  const auto r = static_cast<std::size_t>(f.rank());
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (Letter l : f.images()[j].letters()) m(static_cast<std::size_t>(l.gen() - 1), j) += l.sign();
  }
  return m;
}

IntMatrix transition_matrix(const FreeMap& f) {
  const auto r = static_cast<std::size_t>(f.rank());
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (Letter l : f.images()[j].letters()) m(static_cast<std::size_t>(l.gen() - 1), j) += 1;
  }
  return m;
}

namespace {

// Left half of w (rounded up), and the left half of w⁻¹, as letter keys.
void halves(const Word& w, std::vector<int>& front, std::vector<int>& back) {
  const auto letters = w.letters();
  const std::size_t h = (letters.size() + 1) / 2;
  front.clear();
  back.clear();
  for (std::size_t i = 0; i < h; ++i) {
    front.push_back(letters[i].order_key());
    back.push_back(letters[letters.size() - 1 - i].inverse().order_key());
  }
}

// The classical Nielsen well-order: length first, then the pair of left
// halves of w and w⁻¹ (smaller one first). Invariant under w ↦ w⁻¹.
class NielsenOrder {
 public:
  bool less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    halves(a, a_front_, a_back_);
    halves(b, b_front_, b_back_);
    auto& a_lo = std::min(a_front_, a_back_);
    auto& a_hi = std::max(a_front_, a_back_);
    auto& b_lo = std::min(b_front_, b_back_);
    auto& b_hi = std::max(b_front_, b_back_);
    if (a_lo != b_lo) return a_lo < b_lo;
    return a_hi < b_hi;
  }

 private:
  std::vector<int> a_front_, a_back_, b_front_, b_back_;
};

}  // namespace

std::optional<FreeMap> invert(const FreeMap& f) {
  if (abs(determinant(abelianization_matrix(f))) != 1) return std::nullopt;

  const int r = f.rank();
  const auto n = static_cast<std::size_t>(r);
  std::vector<Word> tuple(f.images().begin(), f.images().end());
  // Invariant: tuple[i] == f(expr[i]).
  const FreeMap id = FreeMap::identity(r);
  std::vector<Word> expr(id.images().begin(), id.images().end());

  NielsenOrder order;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          const Word uj = sign > 0 ? tuple[j] : tuple[j].inverse();
          const Word ej = sign > 0 ? expr[j] : expr[j].inverse();
          Word right = multiply(tuple[i], uj);
          if (order.less(right, tuple[i])) {
            tuple[i] = std::move(right);
            expr[i] = multiply(expr[i], ej);
            changed = true;
          }
          Word left = multiply(uj, tuple[i]);
          if (order.less(left, tuple[i])) {
            tuple[i] = std::move(left);
            expr[i] = multiply(ej, expr[i]);
            changed = true;
          }
          if (tuple[i].empty()) return std::nullopt;
        }
      }
    }
  }

  // A Nielsen-reduced basis is a signed permutation of the generators.
  std::vector<std::optional<Word>> inverse_images(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (tuple[i].size() != 1) return std::nullopt;
    const Letter l = tuple[i].front();
    auto& slot = inverse_images[static_cast<std::size_t>(l.gen() - 1)];
    if (slot) return std::nullopt;
    slot = l.positive() ? expr[i] : expr[i].inverse();
  }
  std::vector<Word> images;
  images.reserve(n);
  for (auto& w : inverse_images) images.push_back(std::move(*w));
  return FreeMap(r, std::move(images));
}

FreeMap conjugate(const FreeMap& sigma, const FreeMap& f) {
  const auto sigma_inv = invert(sigma);
  if (!sigma_inv) throw NotAutomorphism("conjugating map is not an automorphism");
  return compose(sigma, compose(f, *sigma_inv));
}

FreeMap NielsenMove::as_map(int rank) const {
  auto in_range = [rank](int g) { return g >= 1 && g <= rank; };
  if (!in_range(target) || ((kind != Kind::Invert) && (!in_range(other) || other == target))) {
    throw InvalidLetter("Nielsen move generators out of range or equal");
  }
  const FreeMap id = FreeMap::identity(rank);
  std::vector<Word> images(id.images().begin(), id.images().end());
  auto& xi = images[static_cast<std::size_t>(target - 1)];
  switch (kind) {
    case Kind::RightMultiply:
      xi = multiply(Word::generator(rank, target), Word::generator(rank, other, sign));
      break;
    case Kind::LeftMultiply:
      xi = multiply(Word::generator(rank, other, sign), Word::generator(rank, target));
      break;
    case Kind::Invert:
      xi = Word::generator(rank, target, -1);
      break;
    case Kind::Swap:
      std::swap(xi, images[static_cast<std::size_t>(other - 1)]);
      break;
  }
  return FreeMap(rank, std::move(images));
}

FreeMap random_nielsen_automorphism(int rank, int moves, std::mt19937_64& rng) {
  FreeMap out = FreeMap::identity(rank);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> kind(0, 9);
  for (int k = 0; k < moves; ++k) {
    NielsenMove move{NielsenMove::Kind::Invert, gen(rng)};
    const int roll = kind(rng);
    if (rank > 1 && roll < 9) {
      do {
        move.other = gen(rng);
      } while (move.other == move.target);
      move.sign = (rng() & 1U) ? 1 : -1;
      move.kind = roll < 4   ? NielsenMove::Kind::RightMultiply
                  : roll < 8 ? NielsenMove::Kind::LeftMultiply
                             : NielsenMove::Kind::Swap;
    }
    out = compose(out, move.as_map(rank));
  }
  return out;
}

}  // namespace fbc
