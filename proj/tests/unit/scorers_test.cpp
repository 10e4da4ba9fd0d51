#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "cyberlex/scorers.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cyberlex;

namespace {

const std::vector<std::string> kSixVocab = {"attack", "hack",    "target",
                                            "code",   "activist", "zionist"};
const std::vector<std::vector<std::uint64_t>> kSixCells = {
    {0, 2372, 731, 46, 63, 27},
    {2372, 0, 611, 48, 72, 59},
    {731, 611, 0, 18, 22, 16},
    {46, 48, 18, 0, 4, 0},
    {63, 72, 22, 4, 0, 2},
    {27, 59, 16, 0, 2, 0},
};

oracle::DocTerms random_docs(std::mt19937& rng, std::size_t max_docs,
                             std::size_t vocab_size) {
  std::uniform_int_distribution<std::size_t> n_docs(1, max_docs);
  std::uniform_int_distribution<std::size_t> doc_len(0, 10);
  std::uniform_int_distribution<std::size_t> term(0, vocab_size - 1);
  oracle::DocTerms docs(n_docs(rng));
  for (auto& d : docs) {
    std::size_t len = doc_len(rng);
    for (std::size_t k = 0; k < len; ++k) {
      d.push_back("t" + std::to_string(term(rng)));
    }
  }
  return docs;
}

std::vector<std::string> vocab_of(const oracle::DocTerms& docs) {
  std::set<std::string> v;
  for (const auto& d : docs) v.insert(d.begin(), d.end());
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("tfidf: direct formula evaluations") {
  // N=2, term once in d1 of length 4, absent from d2
  auto m = build_term_doc({{"t", "x", "x", "x"}, {"x", "y"}}, {"d1", "d2"}, 1);
  auto scores = tfidf_scores(m, LogBase::Natural);
  auto t = m.term_index("t").value();
  CHECK(scores[t] == doctest::Approx(0.25 * std::log(2.0)).epsilon(1e-12));

  // term in every document scores 0
  auto x = m.term_index("x").value();
  CHECK(scores[x] == doctest::Approx(0.0));

  // N=4, term in one doc of length 1
  auto m2 = build_term_doc({{"solo"}, {"a"}, {"a"}, {"a"}},
                           {"d1", "d2", "d3", "d4"}, 1);
  auto s2 = tfidf_scores(m2, LogBase::Natural);
  CHECK(s2[m2.term_index("solo").value()] ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("tfidf: one-document corpus is identically zero") {
  auto m = build_term_doc({{"a", "b", "b", "c"}}, {"d1"}, 1);
  for (double s : tfidf_scores(m)) CHECK(s == doctest::Approx(0.0));
}

TEST_CASE("tfidf: log bases and sum aggregation") {
  auto m = build_term_doc({{"t", "x"}, {"x"}, {"t", "t", "x"}},
                          {"d1", "d2", "d3"}, 1);
  auto t = m.term_index("t").value();
  double idf_nat = std::log(3.0 / 2.0);
  double mean_tf = (0.5 + 2.0 / 3.0) / 2.0;
  CHECK(tfidf_scores(m, LogBase::Natural)[t] ==
        doctest::Approx(mean_tf * idf_nat));
  CHECK(tfidf_scores(m, LogBase::Base2)[t] ==
        doctest::Approx(mean_tf * std::log2(1.5)));
  CHECK(tfidf_scores(m, LogBase::Base10)[t] ==
        doctest::Approx(mean_tf * std::log10(1.5)));
  CHECK(tfidf_scores(m, LogBase::Natural, TfidfAggregate::Sum)[t] ==
        doctest::Approx((0.5 + 2.0 / 3.0) * idf_nat));
}

TEST_CASE("fdr: worked examples") {
  oracle::DocTerms docs = {{"attack", "breach"}, {"attack", "attack", "code"}};
  std::vector<std::string> ids = {"d1", "d2"};
  auto m = build_term_doc(docs, ids, 1);
  auto c = build_cooc(docs, m.vocab, 1);
  auto scores = fdr_scores(m, c);
  CHECK(scores[m.term_index("attack").value()] ==
        doctest::Approx(18.0 / 7.0).epsilon(1e-12));

  // one-term corpus: isolated term scores 0
  auto m1 = build_term_doc({{"x"}}, {"d1"}, 1);
  auto c1 = build_cooc({{"x"}}, m1.vocab, 1);
  CHECK(fdr_scores(m1, c1)[0] == doctest::Approx(0.0));

  // two terms co-occurring once per doc across 3 docs of length 2
  oracle::DocTerms docs3 = {{"p", "q"}, {"p", "q"}, {"p", "q"}};
  auto m3 = build_term_doc(docs3, {"d1", "d2", "d3"}, 1);
  auto c3 = build_cooc(docs3, m3.vocab, 1);
  auto s3 = fdr_scores(m3, c3);
  CHECK(s3[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s3[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pmi: worked example against printed association cells") {
  auto c = CoocMatrix::from_dense(kSixVocab, kSixCells);
  auto p = pmi_matrix(c, Smoothing::Raw);
  CHECK(std::abs(p.at(0, 2) - 0.401) <= 0.003);  // attack-target
  CHECK(std::abs(p.at(0, 1) - 0.925) <= 0.005);  // attack-hack
  CHECK(p.at(0, 1) == doctest::Approx(0.922).epsilon(0.001));
  // negatives are legal in raw mode
  CHECK(p.at(0, 5) < 0.0);
}

TEST_CASE("pmi: uniform 2x2 off-diagonal gives exactly 1 bit") {
  auto c = CoocMatrix::from_dense({"a", "b"}, {{0, 7}, {7, 0}});
  auto p = pmi_matrix(c, Smoothing::Raw);
  CHECK(p.at(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.at(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pmi: zero total is an error, zero cells contribute nothing") {
  auto empty = build_cooc({{"x"}}, {"x"}, 1);
  CHECK_THROWS_AS(pmi_matrix(empty), Error);

  auto c = CoocMatrix::from_dense({"a", "b", "c"},
                                  {{0, 4, 0}, {4, 0, 0}, {0, 0, 0}});
  auto p = pmi_matrix(c, Smoothing::Raw);
  CHECK(p.at(0, 2) == 0.0);
  CHECK(p.at(2, 2) == 0.0);
  CHECK(p.rows[2].empty());
}

TEST_CASE("pmi: raw matrix is symmetric") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto docs = random_docs(rng, 20, 8);
    auto vocab = vocab_of(docs);
    if (vocab.empty()) continue;
    auto c = build_cooc(docs, vocab, 1);
    if (c.total == 0) continue;
    auto p = pmi_matrix(c, Smoothing::Raw);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      for (const auto& [j, v] : p.rows[i]) {
        CHECK(std::abs(v - p.at(j, i)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("pmi: a pair co-occurring exactly at chance scores zero") {
  // cells chosen so p_ab = p_a * p_b: with cooc(a,b)=1, (a,c)=2, (b,c)=3
  // the pair probabilities are p_ab = 1/12 and p_a * p_b = (3/12)(4/12)
  auto c = CoocMatrix::from_dense({"a", "b", "c"},
                                  {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  auto p = pmi_matrix(c, Smoothing::Raw);
  CHECK(std::abs(p.at(0, 1)) <= 1e-9);
  CHECK(std::abs(p.at(1, 0)) <= 1e-9);
}

TEST_CASE("pmi is invariant under uniform count scaling") {
  auto c1 = CoocMatrix::from_dense(kSixVocab, kSixCells);
  auto scaled_cells = kSixCells;
  for (auto& row : scaled_cells) {
    for (auto& cell : row) cell *= 5;
  }
  auto c5 = CoocMatrix::from_dense(kSixVocab, scaled_cells);
  auto p1 = pmi_matrix(c1, Smoothing::Raw);
  auto p5 = pmi_matrix(c5, Smoothing::Raw);
  for (std::size_t i = 0; i < kSixVocab.size(); ++i) {
    for (std::size_t j = 0; j < kSixVocab.size(); ++j) {
      CHECK(p1.at(i, j) == doctest::Approx(p5.at(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pmi matches the first-principles oracle on random corpora") {
  std::mt19937 rng(32);
  int done = 0;
  while (done < 100) {
    auto docs = random_docs(rng, 20, 10);
    auto vocab = vocab_of(docs);
    if (vocab.empty()) continue;
    auto c = build_cooc(docs, vocab, 1);
    if (c.total == 0) continue;
    ++done;
    auto p = pmi_matrix(c, Smoothing::Raw);
    auto expected = oracle::pmi_cells(docs);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      for (std::size_t j = 0; j < vocab.size(); ++j) {
        double want = 0.0;
        if (auto it = expected.find({vocab[i], vocab[j]});
            it != expected.end()) {
          want = it->second;
        }
        CHECK(std::abs(p.at(i, j) - want) <= 1e-9);
      }
    }
  }
}

TEST_CASE("pmi: add-2 smoothing reproduces the full printed matrix") {
  // every printed cell of the worked example, including the low-count ones
  // that raw mode cannot reach (code-activist prints 1.182, raw gives
  // 0.791), comes out of add-2 smoothing exactly
  const double printed[6][6] = {
      {0, 0.925, 0.401, -0.049, -0.069, -0.632},
      {0.925, 0, 0.178, 0.044, 0.152, 0.475},
      {0.401, 0.178, 0, -0.106, -0.300, -0.114},
      {-0.049, 0.044, -0.106, 0, 1.182, 0.199},
      {-0.069, 0.152, -0.300, 1.182, 0, 0.741},
      {-0.632, 0.475, -0.114, 0.199, 0.741, 0},
  };
  auto c = CoocMatrix::from_dense(kSixVocab, kSixCells);
  auto lap = pmi_matrix(c, Smoothing::LaplaceAdd2);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      CHECK(std::abs(lap.at(i, j) - printed[i][j]) <= 0.0005);
    }
  }
  auto raw = pmi_matrix(c, Smoothing::Raw);
  CHECK(raw.at(3, 4) == doctest::Approx(0.791).epsilon(0.001));
}

TEST_CASE("pmi smoothing modes") {
  auto c = CoocMatrix::from_dense(kSixVocab, kSixCells);

  // laplace add-2 fills every off-diagonal cell
  auto lap = pmi_matrix(c, Smoothing::LaplaceAdd2);
  for (std::size_t i = 0; i < kSixVocab.size(); ++i) {
    CHECK(lap.rows[i].size() == kSixVocab.size() - 1);
  }
  // code-zionist has zero joint count yet a finite smoothed value
  CHECK(lap.at(3, 5) != 0.0);
  CHECK(std::isfinite(lap.at(3, 5)));
  auto raw = pmi_matrix(c, Smoothing::Raw);

  // alpha smoothing reweights context probabilities; the matrix is no
  // longer symmetric but stays finite on observed cells
  auto alpha = pmi_matrix(c, Smoothing::Alpha075);
  CHECK(alpha.at(0, 1) != raw.at(0, 1));
  CHECK(std::isfinite(alpha.at(0, 1)));
  CHECK(alpha.at(3, 5) == 0.0);  // unobserved stays zero-contribution

  // alpha: context distribution sums to one, so a uniform matrix with
  // identical row sums reproduces raw values
  auto uni = CoocMatrix::from_dense(
      {"a", "b", "c"}, {{0, 4, 4}, {4, 0, 4}, {4, 4, 0}});
  auto uni_raw = pmi_matrix(uni, Smoothing::Raw);
  auto uni_alpha = pmi_matrix(uni, Smoothing::Alpha075);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(uni_alpha.at(i, j) ==
            doctest::Approx(uni_raw.at(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("apmis: printed row sum and trivial rows") {
  // row built from the printed association example values
  PmiMatrix p;
  p.vocab = kSixVocab;
  p.rows.resize(6);
  p.rows[0] = {{1, 0.925}, {2, 0.401}, {3, -0.049}, {4, -0.069}, {5, -0.632}};
  p.rows[1] = {{0, 1.0}, {2, -1.0}};
  auto scores = apmis_scores(p);
  CHECK(scores[0] == doctest::Approx(0.576).epsilon(1e-9));
  CHECK(scores[1] == doctest::Approx(0.0));
  CHECK(scores[2] == doctest::Approx(0.0));  // empty row
}

TEST_CASE("apmis is linear in the matrix") {
  auto c = CoocMatrix::from_dense(kSixVocab, kSixCells);
  auto p = pmi_matrix(c, Smoothing::Raw);
  auto base = apmis_scores(p);
  PmiMatrix doubled = p;
  for (auto& row : doubled.rows) {
    for (auto& [j, v] : row) v *= 3.0;
  }
  auto tripled = apmis_scores(doubled);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(tripled[i] == doctest::Approx(3.0 * base[i]).epsilon(1e-12));
  }
}

TEST_CASE("parallel scorers match the serial reference") {
  std::mt19937 rng(33);
  auto docs = random_docs(rng, 40, 12);
  auto vocab = vocab_of(docs);
  REQUIRE(!vocab.empty());
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    ids.push_back("d" + std::to_string(i));
  }
  auto m = build_term_doc(docs, ids, 1);
  auto c = build_cooc(docs, m.vocab, 1);
  if (c.total == 0) return;

  CHECK(tfidf_scores_serial(m) ==
        tfidf_scores(m, LogBase::Natural, TfidfAggregate::Mean, 8));
  CHECK(fdr_scores_serial(m, c) == fdr_scores(m, c, 8));
  auto ps = pmi_matrix_serial(c);
  auto pp = pmi_matrix(c, Smoothing::Raw, 8);
  CHECK(ps.rows == pp.rows);
  CHECK(apmis_scores_serial(ps) == apmis_scores(pp, 8));
}

TEST_CASE("score table CSV dump") {
  testutil::TempDir tmp;
  oracle::DocTerms docs = {{"beta", "alpha"}, {"beta", "gamma"}};
  auto m = build_term_doc(docs, {"d1", "d2"}, 1);
  auto c = build_cooc(docs, m.vocab, 1);
  auto table = make_score_table(m, c, LogBase::Natural, Smoothing::Raw,
                                TfidfAggregate::Mean, "fingerprint");
  auto path = tmp.file("scores.csv");
  save_score_table(table, path);
  auto content = testutil::read_file(path);
  CHECK(content.substr(0, 21) == "term,tfidf,fdr,apmis\n");
  CHECK(content.find("alpha,") != std::string::npos);
  CHECK(table.corpus_fingerprint == "fingerprint");
}
