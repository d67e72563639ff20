#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tweetlab/errors.hpp"
#include "tweetlab/evaluation.hpp"

using namespace tweetlab;

namespace {

std::vector<LabeledDocument> labeled(std::size_t pos, std::size_t neg, std::size_t length = 40) {
  std::vector<LabeledDocument> corpus;
  for (std::size_t i = 0; i < pos + neg; ++i) {
    Document d;
    d.record_id = std::to_string(i);
    d.tokens = {"t" + std::to_string(i)};
    d.char_length = length;
    corpus.emplace_back(d, i < pos ? 1 : 0);
  }
  return corpus;
}

std::set<std::string> ids(const std::vector<LabeledDocument>& docs) {
  std::set<std::string> out;
  for (const auto& [d, y] : docs) out.insert(d.record_id);
  return out;
}

std::size_t count_label(const std::vector<LabeledDocument>& docs, int label) {
  return static_cast<std::size_t>(
      std::count_if(docs.begin(), docs.end(), [&](const auto& p) { return p.second == label; }));
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("length bucket") {
  LengthBucket b(77);
  Document d;
  d.char_length = 76;
  CHECK(b.contains(d));
  d.char_length = 77;
  CHECK_FALSE(b.contains(d));
  CHECK(b.name() == "lt77");
  CHECK_THROWS_AS(LengthBucket(0), std::invalid_argument);
}

TEST_CASE("balanced split sizes") {
  auto split = balanced_split(labeled(100, 100), LengthBucket(77), 70, 1);
  CHECK(count_label(split.test, 1) == 35);
  CHECK(count_label(split.test, 0) == 35);
  CHECK(count_label(split.train, 1) == 65);
  CHECK(count_label(split.train, 0) == 65);

  auto skewed = balanced_split(labeled(60, 200), LengthBucket(77), 70, 1);
  CHECK(count_label(skewed.train, 1) == 25);
  CHECK(count_label(skewed.train, 0) == 25);
}

TEST_CASE("deficient class is named") {
  try {
    balanced_split(labeled(30, 100), LengthBucket(77), 70, 1);
    FAIL("expected SplitError");
  } catch (const SplitError& e) {
    CHECK(e.deficient_class() == 1);
  }
  CHECK_THROWS_AS(balanced_split(labeled(100, 10), LengthBucket(77), 70, 1), SplitError);
  CHECK_THROWS_AS(balanced_split(labeled(100, 100, 90), LengthBucket(77), 70, 1), SplitError);
  CHECK_THROWS_AS(balanced_split(labeled(100, 100), LengthBucket(77), 71, 1), std::invalid_argument);
}

TEST_CASE("split determinism and disjointness") {
  auto corpus = labeled(100, 120);
  auto a = balanced_split(corpus, LengthBucket(77), 70, 9);
  auto b = balanced_split(corpus, LengthBucket(77), 70, 9);
  CHECK(ids(a.test) == ids(b.test));
  CHECK(ids(a.train) == ids(b.train));
  CHECK(ids(balanced_split(corpus, LengthBucket(77), 70, 10).test) != ids(a.test));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = balanced_split(corpus, LengthBucket(77), 70, seed);
    auto train = ids(s.train);
    for (const auto& id : ids(s.test)) CHECK(train.count(id) == 0);
  }
}

TEST_CASE("confusion") {
  std::vector<int> actual = {1, 0}, predicted = {1, 0};
  CHECK(confusion(predicted, actual) == ConfusionMatrix{1, 0, 0, 1});
  std::vector<int> one = {1}, zero = {0};
  CHECK(confusion(zero, one) == ConfusionMatrix{0, 0, 1, 0});
  CHECK_THROWS_AS(confusion(one, actual), std::invalid_argument);

  std::vector<int> p, a;
  auto add = [&](int actual_label, int predicted_label, int n) {
    for (int i = 0; i < n; ++i) {
      a.push_back(actual_label);
      p.push_back(predicted_label);
    }
  };
  add(0, 0, 34);
  add(0, 1, 1);
  add(1, 0, 5);
  add(1, 1, 30);
  CHECK(confusion(p, a) == ConfusionMatrix{34, 1, 5, 30});
}

TEST_CASE("metrics") {
  auto m = metrics({34, 1, 5, 30});
  CHECK(m.accuracy == doctest::Approx(0.9143).epsilon(5e-5 / 0.9143));
  CHECK(*m.sensitivity == doctest::Approx(0.857).epsilon(5e-4 / 0.857));
  CHECK(*m.specificity == doctest::Approx(0.971).epsilon(5e-4 / 0.971));

  auto lr = metrics({30, 5, 13, 22});
  CHECK(lr.accuracy == doctest::Approx(0.7429).epsilon(5e-5 / 0.7429));
  CHECK(*lr.sensitivity == doctest::Approx(0.629).epsilon(5e-4 / 0.629));
  CHECK(*lr.specificity == doctest::Approx(0.857).epsilon(5e-4 / 0.857));

  auto perfect = metrics({4, 0, 0, 6});
  CHECK(perfect.accuracy == 1.0);
  CHECK(*perfect.sensitivity == 1.0);
  CHECK(*perfect.specificity == 1.0);

  auto no_positives = metrics({3, 1, 0, 0});
  CHECK_FALSE(no_positives.sensitivity.has_value());
  CHECK(*no_positives.specificity == 0.75);
  CHECK_THROWS_AS(metrics({}), UndefinedMetric);
}

TEST_CASE("metric invariants") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> p(40), a(40);
    for (std::size_t i = 0; i < 40; ++i) {
      p[i] = static_cast<int>(rng() % 2);
      a[i] = static_cast<int>(rng() % 2);
    }
    a[0] = 0;
    a[1] = 1;
    auto base = metrics(confusion(p, a));

    std::vector<std::size_t> order(40);
    for (std::size_t i = 0; i < 40; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> ps, as;
    for (auto i : order) {
      ps.push_back(p[i]);
      as.push_back(a[i]);
    }
    auto permuted = metrics(confusion(ps, as));
    CHECK(permuted.accuracy == base.accuracy);
    CHECK(permuted.sensitivity == base.sensitivity);
    CHECK(permuted.specificity == base.specificity);

    for (auto& v : ps) v = 1 - v;
    for (auto& v : as) v = 1 - v;
    auto swapped = metrics(confusion(ps, as));
    CHECK(swapped.accuracy == base.accuracy);
    CHECK(swapped.sensitivity == base.specificity);
    CHECK(swapped.specificity == base.sensitivity);
    CHECK(base.accuracy >= 0.0);
    CHECK(base.accuracy <= 1.0);
  }
}

TEST_CASE("report json") {
  EvaluationReport r;
  r.classifier = "nb";
  r.bucket = LengthBucket(120);
  r.matrix = {3, 1, 0, 0};
  r.scores = metrics(r.matrix);
  auto j = to_json(r);
  CHECK(j.at("bucket").at("name") == "lt120");
  CHECK(j.at("sensitivity").is_null());
  CHECK(j.at("specificity") == 0.75);
}

}  // TEST_SUITE
