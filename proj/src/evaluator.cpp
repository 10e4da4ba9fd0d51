#include "cyberlex/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace cyberlex {

namespace {

void check_inputs(const std::vector<double>& scores,
                  const std::vector<int>& labels) {
  if (scores.size() != labels.size()) {
    throw Error("scores and labels differ in length");
  }
  if (scores.empty()) throw Error("no scores to evaluate");
  bool has_pos = false, has_neg = false;
  for (int l : labels) {
    if (l != 0 && l != 1) throw Error("labels must be 0 or 1");
    (l == 1 ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg) {
    throw Error("evaluation requires both classes to be present");
  }
}

}  // namespace

RocCurve roc_curve(const std::vector<double>& scores,
                   const std::vector<int>& labels) {
  check_inputs(scores, labels);

  std::uint64_t n_pos = 0, n_neg = 0;
  for (int l : labels) (l == 1 ? n_pos : n_neg)++;

  // group items by distinct score, descending
  std::vector<std::pair<double, int>> items(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    items[i] = {scores[i], labels[i]};
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  RocCurve curve;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  curve.points.push_back({0.0, 0.0, kInf});

  // at threshold t = s_k the positives are the items with score > s_k,
  // i.e. everything in earlier (higher) score groups
  std::uint64_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < items.size()) {
    double s = items[i].first;
    curve.points.push_back({static_cast<double>(fp) / n_neg,
                            static_cast<double>(tp) / n_pos, s});
    while (i < items.size() && items[i].first == s) {
      (items[i].second == 1 ? tp : fp)++;
      ++i;
    }
  }
  curve.points.push_back({1.0, 1.0, -kInf});

  double auc = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const RocPoint& a = curve.points[k - 1];
    const RocPoint& b = curve.points[k];
    auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  curve.auc = auc;
  return curve;
}

double optimal_threshold(const RocCurve& roc) {
  if (roc.points.empty()) throw Error("optimal_threshold: empty curve");
  bool found = false;
  double best_j = 0.0, best_t = 0.0;
  // points descend in threshold, so the first maximum is the largest one
  for (const RocPoint& p : roc.points) {
    if (std::isinf(p.threshold)) continue;
    double j = p.tpr - p.fpr;
    if (!found || j > best_j) {
      found = true;
      best_j = j;
      best_t = p.threshold;
    }
  }
  if (!found) throw Error("optimal_threshold: curve has no finite threshold");
  return best_t;
}

ConfusionMatrix confusion(const std::vector<double>& scores,
                          const std::vector<int>& labels, double threshold) {
  check_inputs(scores, labels);
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    bool predicted = scores[i] > threshold;
    bool actual = labels[i] == 1;
    if (predicted && actual) cm.tp++;
    else if (predicted && !actual) cm.fp++;
    else if (!predicted && actual) cm.fn++;
    else cm.tn++;
  }
  return cm;
}

MetricSet metrics(const ConfusionMatrix& cm) {
  std::uint64_t total = cm.tp + cm.fp + cm.fn + cm.tn;
  if (total == 0) throw Error("metrics: empty confusion matrix");

  MetricSet m;
  double tp = static_cast<double>(cm.tp);
  m.precision = cm.tp + cm.fp > 0 ? tp / static_cast<double>(cm.tp + cm.fp) : 0.0;
  m.recall = cm.tp + cm.fn > 0 ? tp / static_cast<double>(cm.tp + cm.fn) : 0.0;
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  m.error_rate = 1.0 - m.accuracy;
  return m;
}

EvalReport evaluate(const std::vector<double>& scores,
                    const std::vector<int>& labels) {
  EvalReport report;
  report.roc = roc_curve(scores, labels);
  report.threshold = optimal_threshold(report.roc);
  report.cm = confusion(scores, labels, report.threshold);
  report.metric_set = metrics(report.cm);
  return report;
}

void save_eval_report(const EvalReport& report, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["auc"] = report.roc.auc;
  doc["threshold"] = report.threshold;
  doc["confusion"] = {{"tp", report.cm.tp},
                      {"fp", report.cm.fp},
                      {"fn", report.cm.fn},
                      {"tn", report.cm.tn}};
  doc["metrics"] = {{"precision", report.metric_set.precision},
                    {"recall", report.metric_set.recall},
                    {"accuracy", report.metric_set.accuracy},
                    {"f1", report.metric_set.f1},
                    {"error_rate", report.metric_set.error_rate}};
  nlohmann::ordered_json roc = nlohmann::ordered_json::array();
  for (const RocPoint& p : report.roc.points) {
    // nlohmann serializes non-finite numbers as null, which is what the
    // +/-inf endpoints should look like in JSON
    roc.push_back({p.fpr, p.tpr, p.threshold});
  }
  doc["roc"] = std::move(roc);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write evaluation report: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw Error("short write to evaluation report: " + path);
}

}  // namespace cyberlex
