#pragma once

#include "schottky/schedule.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schottky {

bool is_reduced(std::span<const Letter> letters);

// Reduced multi-index (i_1, ..., i_n): nonempty, no equal adjacent letters.
// Names the element h_{i_1} o ... o h_{i_n}.
class ReducedWord {
 public:
  explicit ReducedWord(std::vector<Letter> letters);
  ReducedWord(std::initializer_list<Letter> letters) : ReducedWord(std::vector<Letter>(letters)) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  // Drops the first letter; the word must have length >= 2.
  ReducedWord suffix() const;
  // Drops the last letter; the word must have length >= 2.
  ReducedWord prefix() const;
  ReducedWord append(Letter letter) const;
  ReducedWord prepend(Letter letter) const;

  std::string to_string() const;

  auto operator<=>(const ReducedWord&) const = default;
  bool operator==(const ReducedWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Parses "1,2,1". Throws std::invalid_argument for malformed or non-reduced input.
ReducedWord parse_word(std::string_view text);

// Finite window (k, k+m] of the alphabet {i : i > k}.
struct WordWindow {
  Letter k = 0;
  Letter m = 1;

  Letter first() const { return k + 1; }
  Letter last() const { return k + m; }
  bool contains(Letter i) const { return i > k && i <= k + m; }
};

// m (m-1)^{n-1}, the number of reduced words of length n over m letters.
std::uint64_t reduced_word_count(std::uint64_t m, std::size_t n);

// Calls `visit` for every reduced word of length exactly n over the window,
// in lexicographic depth-first order. With `first_letter` set only that
// subtree is visited, which lets independent workers split the stream.
void for_each_word(WordWindow window, std::size_t n, std::optional<Letter> first_letter,
                   const std::function<void(const ReducedWord&)>& visit);

std::vector<ReducedWord> enumerate_words(WordWindow window, std::size_t n);

// C_w = h_{i_1} o ... o h_{i_{n-1}} (C_{i_n}).
template <Scalar T>
Circle<T> word_disk(const GeneratorSchedule& schedule, const ReducedWord& word,
                    mpfr_prec_t prec = kDefaultPrecision) {
  const auto letters = word.letters();
  Circle<T> disk = schedule.circle<T>(letters.back(), prec);
  for (std::size_t k = letters.size() - 1; k-- > 0;) {
    disk = invert(schedule.circle<T>(letters[k], prec), disk);
  }
  return disk;
}

class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Both sides of r_w <= r_{suffix} / (|c_{i_1} - c_{i_2}| - 1)^2, plus the
// weaker r_w <= mu^2 r_{suffix}.
struct BeardonMargin {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational ratio;  // lhs / rhs
  Rational mu_rhs;
  bool holds_mu = false;
};

// Throws HypothesisError when |c_{i_1} - c_{i_2}| <= 1 or the word is too short.
BeardonMargin beardon_check(const GeneratorSchedule& schedule, const ReducedWord& word, const Rational& mu);
// Uses mu over every generator of the schedule.
BeardonMargin beardon_check(const GeneratorSchedule& schedule, const ReducedWord& word);

// max over pairs i != j in `indices` of 1 / (|c_i - c_j| - 1).
Rational mu_constant(const GeneratorSchedule& schedule, std::span<const Letter> indices);
Rational mu_constant(const GeneratorSchedule& schedule);

class InvariantViolation : public GeometryError {
 public:
  InvariantViolation(const std::string& what, ReducedWord a, ReducedWord b)
      : GeometryError(what), first_(std::move(a)), second_(std::move(b)) {}
  const ReducedWord& first() const { return first_; }
  const ReducedWord& second() const { return second_; }

 private:
  ReducedWord first_;
  ReducedWord second_;
};

template <Scalar T>
struct DiskNode {
  ReducedWord word;
  Circle<T> disk;
  std::optional<std::size_t> parent;  // index into the previous level
};

struct DiskTreeOptions {
  // Nodes whose radius is certainly below the floor get no children.
  std::optional<Rational> prune_floor;
  mpfr_prec_t precision = kDefaultPrecision;
};

// Levels 1..depth of nested disks. Level n holds the components of the
// truncated H_{k,n}; a child extends its parent's word by one letter.
template <Scalar T>
struct DiskTree {
  WordWindow window;
  std::vector<std::vector<DiskNode<T>>> levels;  // levels[0] is depth 1
  std::vector<std::uint64_t> pruned;             // nodes not materialised, per level
};

namespace detail {

template <Scalar T>
bool below_floor(const Circle<T>& c, const std::optional<Rational>& floor, mpfr_prec_t prec) {
  if (!floor) return false;
  return sign_of(lift<T>(*floor, prec) - c.radius) == Sign::positive;
}

template <Scalar T>
void check_level_disjoint(const std::vector<DiskNode<T>>& level) {
  std::vector<std::size_t> order(level.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if constexpr (std::same_as<T, Rational>) {
      return level[a].disk.center < level[b].disk.center;
    } else {
      return level[a].disk.center.mid() < level[b].disk.center.mid();
    }
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& a = level[order[k - 1]];
    const auto& b = level[order[k]];
    if (disks_disjoint(a.disk, b.disk) == std::optional<bool>(false)) {
      throw InvariantViolation("disks of " + a.word.to_string() + " and " + b.word.to_string() + " intersect",
                               a.word, b.word);
    }
  }
}

}  // namespace detail

template <Scalar T>
DiskTree<T> build_disk_tree(const GeneratorSchedule& schedule, WordWindow window, std::size_t depth,
                            const DiskTreeOptions& options = {}) {
  DiskTree<T> tree{window, {}, std::vector<std::uint64_t>(depth, 0)};
  if (depth == 0) return tree;
  const mpfr_prec_t prec = options.precision;

  std::vector<DiskNode<T>> level;
  for (Letter i = window.first(); i <= window.last(); ++i) {
    level.push_back({ReducedWord{i}, schedule.circle<T>(i, prec), std::nullopt});
  }
  detail::check_level_disjoint(level);
  tree.levels.push_back(std::move(level));

  for (std::size_t n = 2; n <= depth; ++n) {
    const auto& parents = tree.levels.back();
    std::vector<DiskNode<T>> next;
    std::uint64_t skipped = 0;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      const auto& parent = parents[p];
      if (detail::below_floor(parent.disk, options.prune_floor, prec)) {
        skipped += window.m - 1;
        continue;
      }
      for (Letter i = window.first(); i <= window.last(); ++i) {
        if (i == parent.word.back()) continue;
        ReducedWord word = parent.word.append(i);
        Circle<T> disk = word_disk<T>(schedule, word, prec);
        if (disk_contains(parent.disk, disk) == std::optional<bool>(false)) {
          throw InvariantViolation("disk of " + word.to_string() + " is not nested in its parent", parent.word,
                                   word);
        }
        next.push_back({std::move(word), std::move(disk), p});
      }
    }
    // Subtrees already cut at shallower levels keep growing by (m-1) per level.
    tree.pruned[n - 1] = skipped + tree.pruned[n - 2] * (window.m - 1);
    detail::check_level_disjoint(next);
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

}  // namespace schottky
