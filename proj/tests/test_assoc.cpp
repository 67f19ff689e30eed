#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "motkit/assoc.hpp"

using namespace motkit;

namespace {

// Exhaustive-permutation oracle: the best achievable total overlap over all
// matchings of size min(rows, cols). Independent of the solver under test.
double brute_force_best(const OverlapMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  if (m.rows > m.cols) {
    OverlapMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return brute_force_best(t);
  }
  double best = -1.0;
  std::vector<int> cols(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) cols[j] = static_cast<int>(j);
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) total += m.at(i, static_cast<std::size_t>(cols[i]));
    best = std::max(best, total);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

double matching_total(const OverlapMatrix& m, const std::vector<std::pair<int, int>>& pairs) {
  double total = 0.0;
  for (const auto& [r, c] : pairs)
    total += m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return total;
}

}  // namespace

TEST_CASE("solve_assignment on tiny matrices") {
  SUBCASE("1x1") {
    OverlapMatrix m(1, 1);
    m.at(0, 0) = 0.7;
    const auto pairs = solve_assignment(m);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{0, 0});
  }

  SUBCASE("2x2 prefers the higher total, not the greedy pick") {
    OverlapMatrix m(2, 2);
    m.at(0, 0) = 0.9;
    m.at(0, 1) = 0.1;
    m.at(1, 0) = 0.8;
    m.at(1, 1) = 0.2;
    // 0.9 + 0.2 = 1.1 beats 0.1 + 0.8 = 0.9
    const auto pairs = solve_assignment(m);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<int, int>{0, 0});
    CHECK(pairs[1] == std::pair<int, int>{1, 1});
  }

  SUBCASE("empty dimensions") {
    CHECK(solve_assignment(OverlapMatrix(0, 5)).empty());
    CHECK(solve_assignment(OverlapMatrix(5, 0)).empty());
    CHECK(solve_assignment(OverlapMatrix(0, 0)).empty());
  }
}

TEST_CASE("solve_assignment matches the brute-force oracle exactly") {
  // Entries are dyadic rationals (k/1024), so every sum, difference, and
  // dual potential inside the solver is exact in double arithmetic and
  // "equal totals" is a well-defined, tolerance-free comparison.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  std::uniform_int_distribution<int> grid(0, 1024);
  for (int trial = 0; trial < 400; ++trial) {
    OverlapMatrix m(dim(rng), dim(rng));
    for (auto& v : m.values) v = grid(rng) / 1024.0;

    const auto pairs = solve_assignment(m);
    CHECK(pairs.size() == std::min(m.rows, m.cols));
    if (m.rows == 0 || m.cols == 0) continue;

    std::vector<char> row_used(m.rows, 0), col_used(m.cols, 0);
    for (const auto& [r, c] : pairs) {
      CHECK(!row_used[static_cast<std::size_t>(r)]);
      CHECK(!col_used[static_cast<std::size_t>(c)]);
      row_used[static_cast<std::size_t>(r)] = 1;
      col_used[static_cast<std::size_t>(c)] = 1;
    }
    CHECK(matching_total(m, pairs) == brute_force_best(m));
  }
}

TEST_CASE("solve_assignment is optimal on continuous values too") {
  std::mt19937 rng(515151);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    OverlapMatrix m(dim(rng), dim(rng));
    for (auto& v : m.values) v = value(rng);
    const double total = matching_total(m, solve_assignment(m));
    // Rounding inside the cost transform can shift genuine near-ties by an
    // ulp; anything beyond that margin would be a real optimality bug.
    CHECK(total == doctest::Approx(brute_force_best(m)).epsilon(1e-12));
  }
}

TEST_CASE("associate basics") {
  const Box b{0, 0, 10, 10};

  SUBCASE("identity boxes match at full overlap") {
    const std::vector<Box> one{b};
    const auto fa = associate(one, one, 0.3);
    REQUIRE(fa.matches.size() == 1);
    CHECK(fa.matches[0].detection == 0);
    CHECK(fa.matches[0].track == 0);
    CHECK(fa.matches[0].overlap == doctest::Approx(1.0));
    CHECK(fa.unmatched_detections.empty());
    CHECK(fa.unmatched_tracks.empty());
  }

  SUBCASE("below-gate pairs are demoted on both sides") {
    const std::vector<Box> dets{b};
    const std::vector<Box> preds{Box{100, 100, 110, 110}};
    const auto fa = associate(dets, preds, 0.3);
    CHECK(fa.matches.empty());
    CHECK(fa.unmatched_detections == std::vector<int>{0});
    CHECK(fa.unmatched_tracks == std::vector<int>{0});
  }

  SUBCASE("one prediction takes the better of two detections") {
    // both detections inside the 10x10 prediction: overlaps 0.6 and 0.4
    const std::vector<Box> dets{Box{0, 0, 10, 6}, Box{0, 0, 10, 4}};
    const std::vector<Box> preds{b};
    const auto fa = associate(dets, preds, 0.3);
    REQUIRE(fa.matches.size() == 1);
    CHECK(fa.matches[0].detection == 0);
    CHECK(fa.matches[0].overlap == doctest::Approx(0.6));
    CHECK(fa.unmatched_detections == std::vector<int>{1});
    CHECK(fa.unmatched_tracks.empty());
  }

  SUBCASE("empty inputs yield all-unmatched output") {
    const std::vector<Box> none;
    const std::vector<Box> two{b, Box{20, 20, 30, 30}};
    auto fa = associate(none, two, 0.3);
    CHECK(fa.matches.empty());
    CHECK(fa.unmatched_tracks == std::vector<int>{0, 1});
    fa = associate(two, none, 0.3);
    CHECK(fa.unmatched_detections == std::vector<int>{0, 1});
  }
}

namespace {

std::vector<Box> random_boxes(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(0.0, 200.0);
  std::uniform_real_distribution<double> size(5.0, 60.0);
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = coord(rng), y = coord(rng);
    boxes.push_back(Box{x, y, x + size(rng), y + size(rng)});
  }
  return boxes;
}

}  // namespace

TEST_CASE("associate partitions every index exactly once") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> count(0, 12);
  std::uniform_real_distribution<double> gate(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dets = random_boxes(rng, count(rng));
    const auto preds = random_boxes(rng, count(rng));
    const auto fa = associate(dets, preds, gate(rng));
    CHECK(fa.matches.size() + fa.unmatched_detections.size() == dets.size());
    CHECK(fa.matches.size() + fa.unmatched_tracks.size() == preds.size());
    std::vector<char> d(dets.size(), 0), t(preds.size(), 0);
    for (const auto& m : fa.matches) {
      CHECK(!d[static_cast<std::size_t>(m.detection)]);
      CHECK(!t[static_cast<std::size_t>(m.track)]);
      d[static_cast<std::size_t>(m.detection)] = 1;
      t[static_cast<std::size_t>(m.track)] = 1;
    }
    for (const int i : fa.unmatched_detections) d[static_cast<std::size_t>(i)] += 1;
    for (const int j : fa.unmatched_tracks) t[static_cast<std::size_t>(j)] += 1;
    CHECK(std::count(d.begin(), d.end(), 1) == static_cast<long>(dets.size()));
    CHECK(std::count(t.begin(), t.end(), 1) == static_cast<long>(preds.size()));
  }
}

TEST_CASE("raising the gate never increases the match count") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dets = random_boxes(rng, 8);
    const auto preds = random_boxes(rng, 8);
    std::size_t prev = associate(dets, preds, 0.0).matches.size();
    for (double gate = 0.1; gate <= 1.0; gate += 0.1) {
      const std::size_t cur = associate(dets, preds, gate).matches.size();
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("detection order only relabels indices when overlaps are distinct") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dets = random_boxes(rng, 6);
    const auto preds = random_boxes(rng, 6);
    const auto forward = associate(dets, preds, 0.05);

    std::vector<Box> reversed(dets.rbegin(), dets.rend());
    const auto backward = associate(reversed, preds, 0.05);

    auto relabel = [&](int i) { return static_cast<int>(dets.size()) - 1 - i; };
    REQUIRE(forward.matches.size() == backward.matches.size());
    std::vector<std::pair<int, int>> f, b;
    for (const auto& m : forward.matches) f.emplace_back(m.detection, m.track);
    for (const auto& m : backward.matches) b.emplace_back(relabel(m.detection), m.track);
    std::sort(f.begin(), f.end());
    std::sort(b.begin(), b.end());
    CHECK(f == b);
  }
}
