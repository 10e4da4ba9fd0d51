#include <doctest.h>

#include <random>

#include "cyberlex/relatedness.hpp"
#include "test_util.hpp"

using namespace cyberlex;

namespace {

// Lexicon with chosen rescaled scores; raw apmis values are picked so the
// rescaling invariant holds (0 and 100 at the extremes).
Lexicon two_term_lexicon() {
  std::vector<LexiconEntry> entries = {
      {"attack", 1.0, 2.0, 0.4, 40.0},
      {"breach", 3.0, 4.0, 0.55, 55.0},
      {"zero", 0.0, 0.0, 0.0, 0.0},
      {"top", 0.0, 0.0, 1.0, 100.0},
  };
  return Lexicon(std::move(entries), LexiconMetadata{});
}

}  // namespace

TEST_CASE("cyber_relatedness: pseudocode trace") {
  Lexicon lex = two_term_lexicon();
  CrResult r = cyber_relatedness(lex, "attack attack breach now");
  CHECK(r.word_count == 4);
  CHECK(r.match_count == 3);
  CHECK(r.cr == doctest::Approx(101.25));  // (40+40+55) * 3/4
  REQUIRE(r.matched_terms.size() == 3);
  CHECK(r.matched_terms[0].first == "attack");
  CHECK(r.matched_terms[2].second == 55.0);
}

TEST_CASE("cyber_relatedness: no matches and single match") {
  Lexicon lex = two_term_lexicon();
  CHECK(cyber_relatedness(lex, "nothing matches here").cr == 0.0);
  CrResult one = cyber_relatedness(lex, "breach");
  CHECK(one.cr == doctest::Approx(55.0));  // scalar 1, score itself

  CrResult empty = cyber_relatedness(lex, "  \t ");
  CHECK(empty.cr == 0.0);
  CHECK(empty.word_count == 0);
}

TEST_CASE("cyber_relatedness: matching goes through the stemmer") {
  Lexicon lex = two_term_lexicon();
  // "attacks" and "attacked" stem to "attack"; "breaches" stems to "breach"
  CrResult r = cyber_relatedness(lex, "attacks attacked breaches");
  CHECK(r.match_count == 3);
  CHECK(r.cr == doctest::Approx(135.0));
}

TEST_CASE("cyber_relatedness: column selection") {
  Lexicon lex = two_term_lexicon();
  CHECK(cyber_relatedness(lex, "attack", ScoreColumn::Tfidf).cr ==
        doctest::Approx(1.0));
  CHECK(cyber_relatedness(lex, "attack", ScoreColumn::Fdr).cr ==
        doctest::Approx(2.0));
  CHECK(cyber_relatedness(lex, "attack", ScoreColumn::Apmis).cr ==
        doctest::Approx(0.4));
}

TEST_CASE("cyber_relatedness: invariances") {
  Lexicon lex = two_term_lexicon();
  std::string text = "attack went after the breach in question";
  double base = cyber_relatedness(lex, text).cr;

  // reordering words changes nothing
  CHECK(cyber_relatedness(lex, "breach question the attack in after went").cr ==
        doctest::Approx(base));

  // appending a non-matching word strictly decreases cr when matches exist
  CHECK(cyber_relatedness(lex, text + " filler").cr < base);

  // duplicating the text doubles cr: sum doubles, scalar unchanged
  CHECK(cyber_relatedness(lex, text + " " + text).cr ==
        doctest::Approx(2.0 * base));
}

TEST_CASE("cyber_relatedness: empty lexicon is an error") {
  Lexicon lex;
  CHECK_THROWS_AS(cyber_relatedness(lex, "text"), Error);
}

TEST_CASE("batch scoring matches serial and preserves order") {
  Lexicon lex = two_term_lexicon();
  std::vector<Document> docs;
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < 200; ++i) {
    Document d;
    d.id = "d" + std::to_string(i);
    d.source = Source::parse("twitter");
    for (int w = 0; w < 8; ++w) {
      const char* words[] = {"attack", "breach", "filler", "more"};
      d.text += std::string(words[coin(rng)]) + " ";
    }
    docs.push_back(std::move(d));
  }
  auto serial = score_batch_serial(lex, docs);
  auto parallel = score_batch(lex, docs, ScoreColumn::ApmisRescaled, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].cr == parallel[i].cr);
    CHECK(serial[i].match_count == parallel[i].match_count);
  }
}

TEST_CASE("cr rows: csv round trip") {
  testutil::TempDir tmp;
  std::vector<CrResult> results(2);
  results[0].cr = 101.25;
  results[0].match_count = 3;
  results[0].word_count = 4;
  results[1].cr = 0.0;
  results[1].word_count = 7;
  auto path = tmp.file("cr.csv");
  save_cr_rows({"a1", "b,2"}, results, path);

  auto content = testutil::read_file(path);
  CHECK(content ==
        "id,cr,match_count,word_count\n"
        "a1,101.250000,3,4\n"
        "b,2,0.000000,0,7\n");

  auto rows = load_cr_rows(path);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "a1");
  CHECK(rows[0].cr == doctest::Approx(101.25));
  CHECK(rows[1].id == "b,2");  // comma in the id survives
  CHECK(rows[1].word_count == 7);
}
