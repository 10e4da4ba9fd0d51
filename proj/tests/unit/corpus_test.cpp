#include <doctest.h>

#include <cctype>

#include "cyberlex/corpus.hpp"
#include "test_util.hpp"

using namespace cyberlex;

namespace {

Document make_doc(std::string id, std::string text,
                  std::string source = "twitter") {
  Document d;
  d.id = std::move(id);
  d.source = Source::parse(source);
  d.text = std::move(text);
  return d;
}

}  // namespace

TEST_CASE("load_corpus: three valid lines") {
  testutil::TempDir tmp;
  auto path = tmp.file("c.jsonl");
  testutil::write_file(path,
      R"({"id":"1","source":"twitter","text":"hello"})" "\n"
      R"({"id":"2","source":"reddit","text":"world"})" "\n"
      R"({"id":"3","source":"nettalk","text":"other source"})" "\n");
  Corpus c = load_corpus(path, false);
  REQUIRE(c.documents.size() == 3);
  CHECK(c.documents[0].id == "1");
  CHECK(c.documents[1].source.kind == SourceKind::Reddit);
  CHECK(c.documents[2].source.kind == SourceKind::Other);
  CHECK(c.documents[2].source.name == "nettalk");
  CHECK(c.source_counts.at("twitter") == 1);
  CHECK(c.source_counts.at("reddit") == 1);
  CHECK(c.source_counts.at("nettalk") == 1);
}

TEST_CASE("load_corpus: missing field names the line") {
  testutil::TempDir tmp;
  auto path = tmp.file("c.jsonl");
  testutil::write_file(path,
      R"({"id":"1","source":"twitter","text":"ok"})" "\n"
      R"({"id":"2","source":"twitter"})" "\n");
  CHECK_THROWS_WITH_AS(load_corpus(path, false),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(load_corpus(path, false),
                       doctest::Contains("text"), Error);
}

TEST_CASE("load_corpus: malformed JSON names the line") {
  testutil::TempDir tmp;
  auto path = tmp.file("c.jsonl");
  testutil::write_file(path,
      R"({"id":"1","source":"twitter","text":"ok"})" "\n"
      "{not json\n");
  CHECK_THROWS_WITH_AS(load_corpus(path, false),
                       doctest::Contains("line 2"), Error);
}

TEST_CASE("load_corpus: expect_labels") {
  testutil::TempDir tmp;
  auto path = tmp.file("c.jsonl");
  testutil::write_file(path,
      R"({"id":"1","source":"twitter","text":"ok","label":"cyber"})" "\n"
      R"({"id":"2","source":"twitter","text":"ok two"})" "\n");
  Corpus c = load_corpus(path, false);
  CHECK(c.documents[0].label == Label::Cyber);
  CHECK(!c.documents[1].label.has_value());
  CHECK_THROWS_WITH_AS(load_corpus(path, true),
                       doctest::Contains("line 2"), Error);
}

TEST_CASE("load_corpus: duplicate ids rejected, whitespace variants kept") {
  testutil::TempDir tmp;
  auto dup = tmp.file("dup.jsonl");
  testutil::write_file(dup,
      R"({"id":"1","source":"twitter","text":"a"})" "\n"
      R"({"id":"1","source":"twitter","text":"b"})" "\n");
  CHECK_THROWS_WITH_AS(load_corpus(dup, false),
                       doctest::Contains("duplicate id"), Error);

  // trailing-whitespace variants stay distinct documents at load time;
  // only dedupe normalizes
  auto ws = tmp.file("ws.jsonl");
  testutil::write_file(ws,
      R"({"id":"1","source":"twitter","text":"hello"})" "\n"
      R"({"id":"2","source":"twitter","text":"hello "})" "\n");
  Corpus c = load_corpus(ws, false);
  CHECK(c.documents.size() == 2);
}

TEST_CASE("corpus round-trips byte-identically through save/load") {
  testutil::TempDir tmp;
  auto path = tmp.file("c.jsonl");
  testutil::write_file(path,
      R"({"id":"1","source":"twitter","text":"hello é","label":"cyber"})"
      "\n"
      R"({"id":"2","source":"reddit","text":"plain"})" "\n");
  Corpus c = load_corpus(path, false);
  auto out = tmp.file("out.jsonl");
  save_corpus(c, out);
  Corpus again = load_corpus(out, false);
  REQUIRE(again.documents.size() == c.documents.size());
  for (std::size_t i = 0; i < c.documents.size(); ++i) {
    CHECK(again.documents[i].id == c.documents[i].id);
    CHECK(again.documents[i].source == c.documents[i].source);
    CHECK(again.documents[i].text == c.documents[i].text);
    CHECK(again.documents[i].label == c.documents[i].label);
  }
  // canonical form is a fixed point
  auto out2 = tmp.file("out2.jsonl");
  save_corpus(again, out2);
  CHECK(testutil::read_file(out) == testutil::read_file(out2));
}

TEST_CASE("split_sentences: terminators and guards") {
  auto doc = make_doc("t1", "A breach occurred. Systems down! Who did it?");
  auto parts = split_sentences(doc);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].text == "A breach occurred.");
  CHECK(parts[1].text == "Systems down!");
  CHECK(parts[2].text == "Who did it?");
  CHECK(parts[0].id == "t1#1");
  CHECK(parts[2].id == "t1#3");
  CHECK(parts[1].source.kind == SourceKind::Twitter);

  CHECK(split_sentences(make_doc("t2", "no punctuation here")).size() == 1);
  CHECK(split_sentences(make_doc("t3", "See v2.0 release.")).size() == 1);
  CHECK(split_sentences(make_doc("t4", "Met J. Smith today.")).size() == 1);
  CHECK(split_sentences(make_doc("t5", "Wow!! Two sentences? yes.")).size() == 3);
}

TEST_CASE("split_sentences: label inherited, characters partitioned") {
  auto doc = make_doc("x", "One. Two! Three?");
  doc.label = Label::NonCyber;
  auto parts = split_sentences(doc);
  std::size_t non_ws_parent = 0, non_ws_parts = 0;
  for (char c : doc.text) {
    if (!std::isspace(static_cast<unsigned char>(c))) ++non_ws_parent;
  }
  for (const auto& p : parts) {
    CHECK(p.label == Label::NonCyber);
    for (char c : p.text) {
      if (!std::isspace(static_cast<unsigned char>(c))) ++non_ws_parts;
    }
  }
  CHECK(non_ws_parent == non_ws_parts);
}

TEST_CASE("dedupe: normalization and retweets") {
  Corpus c;
  c.documents = {make_doc("1", "hello world"), make_doc("2", "Hello  world"),
                 make_doc("3", "RT @x: hello world"), make_doc("4", "a"),
                 make_doc("5", "b")};
  for (const auto& d : c.documents) c.source_counts[d.source.name]++;

  Corpus d = dedupe(c);
  REQUIRE(d.documents.size() == 3);
  CHECK(d.documents[0].id == "1");  // first occurrence wins
  CHECK(d.documents[1].id == "4");
  CHECK(d.documents[2].id == "5");
  CHECK(d.source_counts.at("twitter") == 3);

  // idempotent
  Corpus dd = dedupe(d);
  REQUIRE(dd.documents.size() == d.documents.size());
  for (std::size_t i = 0; i < d.documents.size(); ++i) {
    CHECK(dd.documents[i].id == d.documents[i].id);
  }
}

TEST_CASE("normalized_text handles the rt prefix only at the front") {
  CHECK(normalized_text("RT @Alice: Hello  World") == "hello world");
  CHECK(normalized_text("say RT @alice: hi") == "say rt @alice: hi");
  CHECK(normalized_text("  spaced   out  ") == "spaced out");
}
