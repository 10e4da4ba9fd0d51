#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyberlex/common.hpp"

namespace cyberlex {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;
};

// Points sorted by threshold descending, from (0,0) at +inf to (1,1) at
// -inf. Prediction rule throughout is strict: positive iff score > t.
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

RocCurve roc_curve(const std::vector<double>& scores,
                   const std::vector<int>& labels);

// Threshold maximizing Youden's J = tpr - fpr over the curve's finite
// thresholds; ties go to the larger threshold (fewer positives).
double optimal_threshold(const RocCurve& roc);

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
};

ConfusionMatrix confusion(const std::vector<double>& scores,
                          const std::vector<int>& labels, double threshold);

struct MetricSet {
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
  double f1 = 0.0;
  double error_rate = 0.0;
};

// Zero denominators yield 0 rather than an error; an all-zero matrix is
// still rejected.
MetricSet metrics(const ConfusionMatrix& cm);

struct EvalReport {
  RocCurve roc;
  double threshold = 0.0;
  ConfusionMatrix cm;
  MetricSet metric_set;
};

EvalReport evaluate(const std::vector<double>& scores,
                    const std::vector<int>& labels);

// JSON: {auc, threshold, confusion, metrics, roc: [[fpr, tpr, thr], ...]};
// the +/-inf endpoint thresholds serialize as null.
void save_eval_report(const EvalReport& report, const std::string& path);

}  // namespace cyberlex
