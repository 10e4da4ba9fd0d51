#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "cyberlex/evaluator.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cyberlex;

TEST_CASE("roc_curve: perfect, partial, inverted") {
  RocCurve perfect = roc_curve({0.9, 0.8, 0.4, 0.3}, {1, 1, 0, 0});
  CHECK(perfect.auc == 1.0);
  CHECK(perfect.points.front().fpr == 0.0);
  CHECK(perfect.points.front().tpr == 0.0);
  CHECK(std::isinf(perfect.points.front().threshold));
  CHECK(perfect.points.back().fpr == 1.0);
  CHECK(perfect.points.back().tpr == 1.0);

  CHECK(roc_curve({0.9, 0.35, 0.4, 0.3}, {1, 1, 0, 0}).auc ==
        doctest::Approx(0.75));
  CHECK(roc_curve({0.9, 0.8, 0.4, 0.3}, {0, 0, 1, 1}).auc == 0.0);
}

TEST_CASE("roc_curve: monotone points, input validation") {
  RocCurve c = roc_curve({0.5, 0.1, 0.5, 0.9, 0.2}, {1, 0, 0, 1, 1});
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    CHECK(c.points[i].fpr >= c.points[i - 1].fpr);
    CHECK(c.points[i].tpr >= c.points[i - 1].tpr);
    CHECK(c.points[i].threshold <= c.points[i - 1].threshold);
  }
  CHECK_THROWS_AS(roc_curve({0.5}, {1}), Error);           // single class
  CHECK_THROWS_AS(roc_curve({0.5, 0.2}, {1}), Error);      // length mismatch
  CHECK_THROWS_AS(roc_curve({0.5, 0.2}, {1, 2}), Error);   // bad label
  CHECK_THROWS_AS(roc_curve({}, {}), Error);
}

TEST_CASE("auc equals concordance probability on random inputs") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::bernoulli_distribution label(0.4);
  std::uniform_int_distribution<int> coarse(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> scores;
    std::vector<int> labels;
    bool pos = false, neg = false;
    for (int i = 0; i < 500; ++i) {
      // coarse grid in half the trials so score ties actually occur
      scores.push_back(trial % 2 == 0 ? score(rng)
                                      : coarse(rng) / 10.0);
      labels.push_back(label(rng) ? 1 : 0);
      (labels.back() ? pos : neg) = true;
    }
    if (!pos || !neg) continue;
    double auc = roc_curve(scores, labels).auc;
    double want = oracle::concordance_auc(scores, labels);
    CHECK(std::abs(auc - want) <= 1e-9);
  }
}

TEST_CASE("roc curve is invariant under strictly monotone transforms") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 300; ++i) {
    scores.push_back(score(rng));
    labels.push_back(i % 3 == 0 ? 1 : 0);
  }
  auto base = roc_curve(scores, labels);

  std::vector<double> warped(scores);
  for (double& s : warped) s = std::exp(4.0 * s) - 7.0;
  auto transformed = roc_curve(warped, labels);

  REQUIRE(base.points.size() == transformed.points.size());
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    CHECK(base.points[i].fpr == transformed.points[i].fpr);
    CHECK(base.points[i].tpr == transformed.points[i].tpr);
  }
  CHECK(base.auc == doctest::Approx(transformed.auc).epsilon(1e-12));
}

TEST_CASE("optimal_threshold: youden with precision-favoring ties") {
  // perfect separation: the largest distinct score with J = 1 is 0.4
  auto perfect = roc_curve({0.9, 0.8, 0.4, 0.3}, {1, 1, 0, 0});
  CHECK(optimal_threshold(perfect) == 0.4);

  // degenerate one-point interior curve
  auto flat = roc_curve({0.5, 0.5}, {1, 0});
  CHECK(optimal_threshold(flat) == 0.5);

  // random scores: J* stays near zero
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 1000; ++i) {
    scores.push_back(score(rng));
    labels.push_back(i % 2);
  }
  auto curve = roc_curve(scores, labels);
  double best_j = 0.0;
  for (const auto& p : curve.points) {
    best_j = std::max(best_j, p.tpr - p.fpr);
  }
  CHECK(best_j <= 0.1);
  CHECK(curve.auc == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("confusion: strict threshold rule") {
  auto cm = confusion({1.0, 0.0}, {1, 0}, 0.5);
  CHECK(cm.tp == 1);
  CHECK(cm.tn == 1);
  CHECK(cm.fp == 0);
  CHECK(cm.fn == 0);

  // threshold below the minimum predicts everything positive
  auto all_pos = confusion({0.2, 0.7, 0.4}, {1, 0, 1}, 0.1);
  CHECK(all_pos.fn == 0);
  CHECK(all_pos.tn == 0);
  CHECK(all_pos.tp == 2);
  CHECK(all_pos.fp == 1);

  // scores equal to the threshold are negative under the strict rule
  auto border = confusion({0.5, 0.5}, {1, 0}, 0.5);
  CHECK(border.tp == 0);
  CHECK(border.fn == 1);
  CHECK(border.tn == 1);
}

TEST_CASE("metrics: worked confusion matrix") {
  MetricSet m = metrics({86, 63, 25, 38});
  CHECK(m.precision == doctest::Approx(0.577).epsilon(0.001));
  CHECK(m.recall == doctest::Approx(0.775).epsilon(0.001));
  CHECK(m.f1 == doctest::Approx(0.661).epsilon(0.001));
  CHECK(m.accuracy == doctest::Approx(124.0 / 212.0).epsilon(1e-9));
  CHECK(m.error_rate == doctest::Approx(1.0 - 124.0 / 212.0).epsilon(1e-9));
}

TEST_CASE("metrics: conventions and edge cases") {
  MetricSet perfect = metrics({10, 0, 0, 0});
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);
  CHECK(perfect.accuracy == 1.0);

  MetricSet zeros = metrics({0, 0, 5, 5});
  CHECK(zeros.precision == 0.0);
  CHECK(zeros.recall == 0.0);
  CHECK(zeros.f1 == 0.0);

  CHECK_THROWS_AS(metrics({0, 0, 0, 0}), Error);

  // error_rate complements accuracy exactly
  MetricSet m = metrics({3, 4, 5, 6});
  CHECK(m.error_rate == 1.0 - m.accuracy);
}

TEST_CASE("metrics at extreme thresholds") {
  std::vector<double> scores = {0.1, 0.5, 0.9, 0.7};
  std::vector<int> labels = {0, 1, 1, 0};
  auto low = metrics(confusion(scores, labels, -1e300));
  CHECK(low.recall == 1.0);
  auto high = confusion(scores, labels, 1e300);
  CHECK(high.fp == 0);
  CHECK(high.tp == 0);
}

TEST_CASE("evaluate + report JSON") {
  testutil::TempDir tmp;
  std::vector<double> scores = {0.9, 0.8, 0.7, 0.3, 0.2, 0.1};
  std::vector<int> labels = {1, 1, 1, 0, 0, 0};
  EvalReport report = evaluate(scores, labels);
  CHECK(report.roc.auc == 1.0);
  CHECK(report.metric_set.f1 == 1.0);

  auto path = tmp.file("report.json");
  save_eval_report(report, path);
  auto doc = nlohmann::json::parse(testutil::read_file(path));
  CHECK(doc["auc"] == 1.0);
  CHECK(doc["confusion"]["tp"] == 3);
  CHECK(doc["metrics"]["precision"] == 1.0);
  REQUIRE(doc["roc"].is_array());
  // endpoint thresholds are null in JSON
  CHECK(doc["roc"][0][2].is_null());
  CHECK(doc["roc"].back()[2].is_null());
  CHECK(doc["roc"][0][0] == 0.0);
}
