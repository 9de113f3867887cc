#include <random>

#include "doctest.h"
#include "rlz2lz/core.hpp"
#include "testutil.hpp"

using namespace rlz2lz;

TEST_CASE("trange basics") {
  TRange r;
  CHECK(r.empty());
  CHECK(r.len() == 0);
  TRange s{3, 5};
  CHECK_FALSE(s.empty());
  CHECK(s.len() == 3);
  CHECK(TRange{4, 3}.empty());
}

TEST_CASE("expand_rlz") {
  RlzArchive a;
  a.reference = "ab";
  a.phrases = {{1, 2}};
  CHECK(expand_rlz(a) == "abab");

  a.phrases = {{2, 1}, {1, 1}, {1, 2}};
  CHECK(expand_rlz(a) == "abbaab");

  a.phrases = {{2, 2}};
  CHECK_THROWS_AS(expand_rlz(a), MalformedPhrase);
  a.phrases = {{0, 1}};
  CHECK_THROWS_AS(expand_rlz(a), MalformedPhrase);
  a.phrases = {{1, 0}};
  CHECK_THROWS_AS(expand_rlz(a), MalformedPhrase);
}

TEST_CASE("expand_lz77") {
  Lz77Parse p;
  p.triples = {{0, kNoSource, 'a'}, {0, kNoSource, 'b'}, {1, 1, 'b'}};
  CHECK(expand_lz77(p) == "abab");

  // Overlapping copy: source runs into the phrase being produced.
  p.triples = {{0, kNoSource, 'a'}, {2, 1, 'a'}};
  CHECK(expand_lz77(p) == "aaaa");

  p.triples = {{0, kNoSource, 'a'}, {5, 1, 'b'}};
  CHECK(expand_lz77(p) == "aaaaaab");

  p.triples = {{1, kNoSource, 'a'}};
  CHECK_THROWS_AS(expand_lz77(p), MalformedTriple);
  p.triples = {{0, 1, 'a'}};
  CHECK_THROWS_AS(expand_lz77(p), MalformedTriple);
  p.triples = {{0, kNoSource, 'a'}, {1, 2, 'b'}};
  CHECK_THROWS_AS(expand_lz77(p), MalformedTriple);
}

TEST_CASE("rlzp codec round trip") {
  RlzArchive a;
  a.reference = "abracadabra";
  a.phrases = {{1, 4}, {8, 4}, {4, 1}};
  std::string bytes = encode_rlzp(a);
  RlzArchive back = decode_rlzp(bytes);
  CHECK(back.reference == a.reference);
  CHECK(back.phrases == a.phrases);
  CHECK(detect_kind(bytes) == FileKind::Rlzp);

  RlzArchive empty_tail;
  empty_tail.reference = "xyz";
  RlzArchive back2 = decode_rlzp(encode_rlzp(empty_tail));
  CHECK(back2.reference == "xyz");
  CHECK(back2.phrases.empty());
}

TEST_CASE("rlzp codec rejects damage") {
  RlzArchive a;
  a.reference = "abc";
  a.phrases = {{1, 3}};
  std::string bytes = encode_rlzp(a);

  CHECK_THROWS_AS(decode_rlzp(bytes.substr(0, bytes.size() - 1)), FormatError);
  CHECK_THROWS_AS(decode_rlzp(bytes + 'x'), FormatError);
  CHECK_THROWS_AS(decode_rlzp(std::string("QQQQ") + bytes.substr(4)), FormatError);
  std::string wrong_version = bytes;
  wrong_version[4] = 0x02;
  CHECK_THROWS_AS(decode_rlzp(wrong_version), FormatError);
  CHECK_THROWS_AS(decode_rlzp(""), FormatError);

  // Structurally fine but the phrase reaches outside the reference.
  RlzArchive bad;
  bad.reference = "abc";
  bad.phrases = {{3, 2}};
  CHECK_THROWS_AS(decode_rlzp(encode_rlzp(bad)), FormatError);
}

TEST_CASE("lz77 codec round trip") {
  Lz77Parse p;
  p.triples = {{0, kNoSource, 'a'}, {0, kNoSource, 'b'}, {3, 1, 'c'}};
  std::string bytes = encode_lz77(p);
  Lz77Parse back = decode_lz77(bytes);
  CHECK(back.triples == p.triples);
  CHECK(back.text_len() == 6);
  CHECK(detect_kind(bytes) == FileKind::Lz77);
  CHECK(detect_kind("....") == FileKind::Unknown);
  CHECK(detect_kind("") == FileKind::Unknown);
}

TEST_CASE("lz77 codec rejects damage") {
  Lz77Parse p;
  p.triples = {{0, kNoSource, 'a'}, {1, 1, 'b'}};
  std::string bytes = encode_lz77(p);

  CHECK_THROWS_AS(decode_lz77(bytes.substr(0, bytes.size() - 1)), FormatError);
  CHECK_THROWS_AS(decode_lz77(bytes + 'x'), FormatError);

  // Declared text length disagreeing with the triples.
  std::string wrong_n = bytes;
  wrong_n[5] = 9;
  CHECK_THROWS_AS(decode_lz77(wrong_n), FormatError);

  // Source without copy part and copy part without source.
  Lz77Parse bad;
  bad.triples = {{0, 1, 'a'}};
  CHECK_THROWS_AS(decode_lz77(encode_lz77(bad)), FormatError);
  bad.triples = {{1, kNoSource, 'a'}};
  CHECK_THROWS_AS(decode_lz77(encode_lz77(bad)), FormatError);
  bad.triples = {{0, kNoSource, 'a'}, {2, 2, 'b'}};
  CHECK_THROWS_AS(decode_lz77(encode_lz77(bad)), FormatError);
}

TEST_CASE("combined parse bookkeeping") {
  CombinedParse c;
  c.ends = {1, 2, 4, 6, 9};
  c.rlz_src = {1, 3};
  c.ref_len = 4;
  c.ref_phrases = 3;
  CHECK(c.phrase_count() == 5);
  CHECK(c.text_len() == 9);
  CHECK(c.start_of(0) == 1);
  CHECK(c.start_of(3) == 5);
  CHECK(c.end_of(3) == 6);
  CHECK_FALSE(c.is_tail_phrase(2));
  CHECK(c.is_tail_phrase(3));
  CHECK(c.src_of(3) == 1);
  CHECK(c.src_of(4) == 3);
  CHECK(c.phrase_at(1) == 0);
  CHECK(c.phrase_at(2) == 1);
  CHECK(c.phrase_at(3) == 2);
  CHECK(c.phrase_at(4) == 2);
  CHECK(c.phrase_at(5) == 3);
  CHECK(c.phrase_at(9) == 4);
}

TEST_CASE("codec round trip on random instances") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 50; ++it) {
    RlzArchive a = testutil::make_instance(rng, 40, 120, 3);
    RlzArchive back = decode_rlzp(encode_rlzp(a));
    CHECK(back.reference == a.reference);
    CHECK(back.phrases == a.phrases);
    CHECK(expand_rlz(back) == expand_rlz(a));
  }
}
