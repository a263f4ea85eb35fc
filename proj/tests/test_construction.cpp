#include "doctest.h"
#include "support.hpp"

#include "schottky/certificate.hpp"
#include "schottky/words.hpp"

#include <set>

using namespace schottky;

namespace {

using R = Rational;

// Brute-force oracle: every tuple over the window, keeping the reduced ones.
std::vector<std::vector<Letter>> brute_force_words(WordWindow w, std::size_t n) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur(n, w.first());
  while (true) {
    if (is_reduced(cur)) out.push_back(cur);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (cur[pos] < w.last()) {
        ++cur[pos];
        break;
      }
      cur[pos] = w.first();
      if (pos == 0) return out;
    }
  }
}

}  // namespace

TEST_CASE("closed-form schedule values") {
  const auto s = paper_schedule(3);
  CHECK(s.provenance() == Provenance::paper);
  CHECK(s.entry(1).center == 0);
  CHECK(s.entry(1).radius == R(1, 4));
  CHECK(s.entry(2).center == 65);
  CHECK(s.entry(2).radius == pow2(-8));
  CHECK(s.entry(3).center == 2114);
  CHECK(s.entry(3).radius == pow2(-18));
  // Recurrence oracle, evaluated independently.
  R c = 0;
  for (Letter i = 2; i <= 12; ++i) {
    c += pow2(static_cast<long>(i * i + 2)) + 1;
    CHECK(paper_center(i) == c);
    CHECK(paper_radius(i) == pow2(-2 * static_cast<long>(i * i)));
  }
  CHECK_THROWS_AS(s.entry(4), std::out_of_range);
}

TEST_CASE("schedule validation") {
  CHECK(validate_schedule(paper_schedule(10)).empty());

  const GeneratorSchedule overlapping(Provenance::user, {{1, R(0), R(1)}, {2, R(1), R(1)}});
  const auto v = validate_schedule(overlapping);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::overlapping_disks);
  CHECK(v[0].first == 1);
  CHECK(v[0].second == 2);

  const GeneratorSchedule big(Provenance::user, {{1, R(0), R(2)}, {2, R(100), R(1, 2)}});
  const auto w = validate_schedule(big);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == ViolationKind::radius_exceeds_one);
  CHECK(w[0].first == 1);
}

TEST_CASE("schedule JSON round trip") {
  const auto s = paper_schedule(6);
  const std::string text = schedule_to_json(s);
  const auto back = schedule_from_json(text);
  CHECK(back == s);
  CHECK(schedule_to_json(back) == text);

  const std::string user = R"({"model":"upper-half-plane","provenance":"user",
    "entries":[{"i":1,"c":"0","r":"0.25"},{"i":2,"c":"10","r":"1/8"}]})";
  const auto u = schedule_from_json(user);
  CHECK(u.provenance() == Provenance::user);
  CHECK(u.entry(1).radius == R(1, 4));
  CHECK(u.entry(2).center == 10);

  CHECK_THROWS_AS(schedule_from_json("{"), ScheduleError);
  CHECK_THROWS_AS(schedule_from_json(R"({"model":"disk","provenance":"user","entries":[]})"), ScheduleError);
  const std::string bad = R"({"model":"upper-half-plane","provenance":"user",
    "entries":[{"i":1,"c":"0","r":"1"},{"i":2,"c":"1","r":"1"}]})";
  try {
    schedule_from_json(bad);
    FAIL("inadmissible schedule accepted");
  } catch (const ScheduleError& e) {
    CHECK(e.violations().size() == 1);
  }
}

TEST_CASE("reduced words") {
  CHECK(is_reduced(std::vector<Letter>{1, 2, 1}));
  CHECK_FALSE(is_reduced(std::vector<Letter>{1, 1}));
  CHECK_THROWS_AS(ReducedWord({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(std::vector<Letter>{}), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,x"), std::invalid_argument);
  const auto w = parse_word("3,4,3");
  CHECK(w.to_string() == "3,4,3");
  CHECK(w.suffix() == ReducedWord{4, 3});
  CHECK(w.prefix() == ReducedWord{3, 4});
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_words({0, 2}, 1).size() == 2);
  CHECK(enumerate_words({0, 3}, 2).size() == 6);
  CHECK(enumerate_words({0, 1}, 2).empty());
  const auto words = enumerate_words({2, 4}, 3);
  REQUIRE(words.size() == 36);
  CHECK(words.front() == ReducedWord{3, 4, 3});

  for (Letter m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const WordWindow window{1, m};
      const auto got = enumerate_words(window, n);
      const auto oracle = brute_force_words(window, n);
      REQUIRE(got.size() == oracle.size());
      CHECK(got.size() == reduced_word_count(m, n));
      for (std::size_t j = 0; j < got.size(); ++j) {
        CHECK(std::vector<Letter>(got[j].letters().begin(), got[j].letters().end()) == oracle[j]);
      }
    }
  }
}

TEST_CASE("split enumeration by first letter reproduces the stream") {
  const WordWindow window{2, 4};
  std::vector<ReducedWord> joined;
  for (Letter i = window.first(); i <= window.last(); ++i) {
    for_each_word(window, 3, i, [&](const ReducedWord& w) { joined.push_back(w); });
  }
  CHECK(joined == enumerate_words(window, 3));
}

TEST_CASE("word disk examples") {
  const auto s = paper_schedule(6);
  const auto c2 = word_disk<R>(s, ReducedWord{2});
  CHECK(c2.center == 65);
  CHECK(c2.radius == pow2(-8));

  const auto d = word_disk<R>(s, ReducedWord{1, 2});
  const R den = R(4225) - pow2(-16);
  CHECK(d.center == 65 * pow2(-4) / den);
  CHECK(d.radius == pow2(-12) / den);
  CHECK(disk_contains(s.circle<R>(1), d) == std::optional<bool>(true));

  const auto di = word_disk<Interval>(s, ReducedWord{1, 2});
  CHECK(di.center.contains(d.center));
  CHECK(di.radius.contains(d.radius));
}

TEST_CASE("beardon check examples") {
  const auto s = paper_schedule(6);
  const auto m12 = beardon_check(s, ReducedWord{1, 2});
  CHECK(m12.rhs == pow2(-20));
  CHECK(m12.lhs == pow2(-12) / (R(4225) - pow2(-16)));
  CHECK(m12.holds);
  CHECK(m12.ratio == m12.lhs / m12.rhs);

  const auto m21 = beardon_check(s, ReducedWord{2, 1});
  CHECK(m21.rhs == pow2(-14));
  CHECK(m21.lhs == word_disk<R>(s, ReducedWord{2, 1}).radius);
  CHECK(m21.holds);

  for (const auto& w : enumerate_words({2, 4}, 3)) CHECK(beardon_check(s, w).holds);

  CHECK_THROWS_AS(beardon_check(s, ReducedWord{3}), HypothesisError);
  const GeneratorSchedule close(Provenance::user, {{1, R(0), R(1, 4)}, {2, R(1), R(1, 4)}});
  CHECK_THROWS_AS(beardon_check(close, ReducedWord{1, 2}), HypothesisError);
}

TEST_CASE("mu constant examples") {
  const auto s = paper_schedule(6);
  CHECK(mu_constant(s, std::vector<Letter>{1, 2}) == R(1, 64));
  CHECK(mu_constant(s, std::vector<Letter>{1, 2, 3}) == R(1, 64));
  CHECK(mu_constant(s, std::vector<Letter>{2, 3}) == R(1, 2048));
  CHECK(mu_constant(s) == R(1, 64));
  const GeneratorSchedule close(Provenance::user, {{1, R(0), R(1, 4)}, {2, R(1), R(1, 4)}});
  CHECK_THROWS_AS(mu_constant(close), HypothesisError);
}

TEST_CASE("disk tree structure") {
  const auto s = paper_schedule(6);
  const auto tree = build_disk_tree<R>(s, {2, 3}, 3);
  REQUIRE(tree.levels.size() == 3);
  REQUIRE(tree.levels[0].size() == 3);
  for (Letter i = 3; i <= 5; ++i) {
    CHECK(tree.levels[0][i - 3].disk.center == paper_center(i));
    CHECK(tree.levels[0][i - 3].disk.radius == paper_radius(i));
  }
  for (std::size_t n = 1; n <= 3; ++n) CHECK(tree.levels[n - 1].size() == reduced_word_count(3, n));
  R min_top = tree.levels[0][0].disk.radius;
  for (const auto& node : tree.levels[0]) min_top = std::min(min_top, node.disk.radius);
  for (const auto& node : tree.levels[1]) {
    CHECK(node.disk.radius < min_top);
    const auto& parent = tree.levels[0][*node.parent];
    CHECK(node.word.prefix() == parent.word);
  }

  const auto ti = build_disk_tree<Interval>(s, {2, 3}, 3);
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t j = 0; j < ti.levels[n].size(); ++j) {
      CHECK(ti.levels[n][j].disk.center.contains(tree.levels[n][j].disk.center));
    }
  }
}

TEST_CASE("disk tree pruning counts skipped words") {
  const auto s = paper_schedule(6);
  DiskTreeOptions options;
  options.prune_floor = pow2(-40);
  const auto tree = build_disk_tree<R>(s, {2, 3}, 3, options);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(tree.levels[n - 1].size() + tree.pruned[n - 1] == reduced_word_count(3, n));
  }
  CHECK(tree.pruned[1] > 0);
}

TEST_CASE("disk tree rejects an inadmissible schedule") {
  const GeneratorSchedule overlapping(Provenance::user, {{1, R(0), R(1)}, {2, R(1), R(1)}});
  CHECK_THROWS_AS(build_disk_tree<R>(overlapping, {0, 2}, 2), InvariantViolation);
}

TEST_CASE("property: functoriality, cancellation and radius decay") {
  const auto s = paper_schedule(6);
  const WordWindow window{0, 4};
  std::vector<Letter> indices;
  for (Letter i = window.first(); i <= window.last(); ++i) indices.push_back(i);
  const R mu = mu_constant(s, indices);
  int failures = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : enumerate_words(window, n)) {
      const auto disk = word_disk<R>(s, w);
      const auto tail = word_disk<R>(s, w.suffix());
      const auto image = invert(s.circle<R>(w.front()), tail);
      if (image.center != disk.center || image.radius != disk.radius) ++failures;
      const auto back = invert(s.circle<R>(w.front()), disk);
      if (back.center != tail.center || back.radius != tail.radius) ++failures;
      if (!(disk.radius < tail.radius)) ++failures;
      R bound = s.entry(w.back()).radius;
      for (std::size_t j = 1; j < n; ++j) bound *= mu * mu;
      if (disk.radius > bound) ++failures;
      if (disk_contains(s.circle<R>(w.front()), disk) != std::optional<bool>(true)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("beardon sweep over a window") {
  const auto s = paper_schedule(8);
  const auto sweep = beardon_sweep(s, {2, 5}, 4);
  CHECK(sweep.words == 320 + 80 + 20);
  CHECK(sweep.failures == 0);
  CHECK(sweep.max_ratio <= 1);
  CHECK(sweep.max_ratio > 0);
}
