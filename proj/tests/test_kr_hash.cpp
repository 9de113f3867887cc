#include <bit>
#include <random>
#include <string>

#include "doctest.h"
#include "rlz2lz/kr_hash.hpp"
#include "testutil.hpp"

using namespace rlz2lz;

namespace {

u64 naive_lce_f(std::string_view t, u64 x, u64 y, u64 cap) {
  const u64 n = t.size();
  u64 d = 0;
  while (d < cap && x + d <= n && y + d <= n && t[x - 1 + d] == t[y - 1 + d]) ++d;
  return d;
}

u64 naive_lce_b(std::string_view t, u64 x, u64 y, u64 cap) {
  u64 d = 0;
  while (d < cap && x > d && y > d && t[x - 1 - d] == t[y - 1 - d]) ++d;
  return d;
}

std::string rev_range(std::string_view t, TRange r) {
  std::string s(t.substr(r.begin - 1, r.len()));
  std::reverse(s.begin(), s.end());
  return s;
}

struct Instance {
  RlzArchive archive;
  CombinedParse combined;
  std::string text;
};

Instance instance_of(RlzArchive a) {
  Instance inst;
  inst.text = expand_rlz(a);
  inst.combined = testutil::combined_from(a);
  inst.archive = std::move(a);
  return inst;
}

Instance random_instance(std::mt19937_64& rng, u64 ell, u64 tail, int sigma) {
  std::string text = testutil::mutated_tail_text(rng, ell, tail, sigma, 0.08);
  RlzArchive a;
  a.reference = text.substr(0, ell);
  a.phrases = oracle::naive_rlz(text, ell);
  return instance_of(std::move(a));
}

}  // namespace

TEST_CASE("hash config from seed") {
  HashConfig a = HashConfig::from_seed(0);
  HashConfig b = HashConfig::from_seed(0);
  HashConfig c = HashConfig::from_seed(1);
  CHECK(a.base == b.base);
  CHECK(a.base != c.base);
  for (u64 seed = 0; seed < 64; ++seed) {
    u64 base = HashConfig::from_seed(seed).base;
    CHECK(base >= 2);
    CHECK(base <= HashConfig::kModulus - 2);
  }
}

TEST_CASE("prefix and substring hashes match a direct computation") {
  std::mt19937_64 rng(2024);
  std::vector<Instance> cases;
  {
    RlzArchive a;
    a.reference = "ab";
    a.phrases = {{1, 2}};
    cases.push_back(instance_of(a));
    a.reference = "aa";
    cases.push_back(instance_of(a));
  }
  for (int sigma : {1, 2, 4}) cases.push_back(random_instance(rng, 40, 160, sigma));

  for (u64 seed : {0ULL, 7ULL}) {
    for (const Instance& inst : cases) {
      FingerprintIndex fp(inst.archive, inst.combined, seed);
      const u64 base = fp.config().base;
      const u64 n = inst.text.size();
      REQUIRE(fp.text_len() == n);
      for (u64 k = 0; k <= n; ++k)
        CHECK(fp.prefix_hash(k) ==
              testutil::direct_hash(std::string_view(inst.text).substr(0, k), base));
      for (u64 k = 1; k <= n; ++k)
        CHECK(fp.char_at(k) == static_cast<unsigned char>(inst.text[k - 1]));
      for (int it = 0; it < 200; ++it) {
        u64 a = 1 + rng() % n;
        u64 b = 1 + rng() % n;
        if (a > b) std::swap(a, b);
        CHECK(fp.substring_hash(a, b) ==
              testutil::direct_hash(
                  std::string_view(inst.text).substr(a - 1, b - a + 1), base));
      }
      CHECK(fp.substring_hash(3, 2) == 0);
      CHECK_THROWS_AS((void)fp.prefix_hash(n + 1), OutOfRange);
      CHECK_THROWS_AS((void)fp.substring_hash(0, 1), OutOfRange);
      CHECK_THROWS_AS((void)fp.substring_hash(1, n + 1), OutOfRange);
      CHECK_THROWS_AS((void)fp.char_at(0), OutOfRange);
    }
  }
}

TEST_CASE("combine concatenates fingerprints") {
  std::mt19937_64 rng(5);
  Instance inst = random_instance(rng, 30, 100, 3);
  FingerprintIndex fp(inst.archive, inst.combined, 0);
  const u64 n = inst.text.size();
  for (int it = 0; it < 100; ++it) {
    u64 a = 1 + rng() % n;
    u64 b = a + rng() % (n - a + 1);
    u64 m = a + rng() % (b - a + 1);  // split T[a..b] at m
    u64 whole = fp.substring_hash(a, b);
    u64 left = fp.substring_hash(a, m - 1);
    u64 right = fp.substring_hash(m, b);
    CHECK(fp.combine(left, right, b - m + 1) == whole);
  }
}

TEST_CASE("lce matches naive scanning") {
  std::mt19937_64 rng(31);
  for (int sigma : {1, 2, 3}) {
    Instance inst = random_instance(rng, 24, 60, sigma);
    FingerprintIndex fp(inst.archive, inst.combined, 0);
    const u64 n = inst.text.size();
    for (u64 x = 1; x <= n; ++x)
      for (u64 y = 1; y <= n; ++y) {
        CHECK(fp.lce_forward(x, y, n) == naive_lce_f(inst.text, x, y, n));
        CHECK(fp.lce_backward(x, y, n) == naive_lce_b(inst.text, x, y, n));
      }
    for (int it = 0; it < 300; ++it) {
      u64 x = 1 + rng() % n;
      u64 y = 1 + rng() % n;
      u64 cap = rng() % (n + 2);
      CHECK(fp.lce_forward(x, y, cap) == naive_lce_f(inst.text, x, y, cap));
      CHECK(fp.lce_backward(x, y, cap) == naive_lce_b(inst.text, x, y, cap));
    }
  }
}

TEST_CASE("suffix comparisons match the plain text") {
  std::mt19937_64 rng(77);
  Instance inst = random_instance(rng, 32, 96, 2);
  FingerprintIndex fp(inst.archive, inst.combined, 0);
  const u64 n = inst.text.size();
  std::string_view t(inst.text);
  for (u64 a = 1; a <= n + 1; ++a)
    for (u64 b = 1; b <= n + 1; ++b) {
      int want = t.substr(a - 1).compare(t.substr(b - 1));
      auto got = fp.compare_suffixes(a, b);
      CHECK((want < 0) == (got == std::strong_ordering::less));
      CHECK((want == 0) == (got == std::strong_ordering::equal));
      CHECK((want > 0) == (got == std::strong_ordering::greater));
      CHECK(fp.lcp_suffixes(a, b) ==
            testutil::naive_lcp(t.substr(a - 1), t.substr(b - 1)));
    }
}

TEST_CASE("colex comparison matches reversed substrings") {
  std::mt19937_64 rng(123);
  Instance inst = random_instance(rng, 28, 84, 2);
  FingerprintIndex fp(inst.archive, inst.combined, 0);
  const u64 n = inst.text.size();
  std::string_view t(inst.text);
  auto check_pair = [&](TRange x, TRange y) {
    std::string rx = rev_range(t, x);
    std::string ry = rev_range(t, y);
    int want = rx.compare(ry);
    auto got = fp.compare_colex(x, y);
    CHECK((want < 0) == (got == std::strong_ordering::less));
    CHECK((want == 0) == (got == std::strong_ordering::equal));
    CHECK((want > 0) == (got == std::strong_ordering::greater));
  };
  for (int it = 0; it < 600; ++it) {
    u64 e1 = 1 + rng() % n;
    u64 e2 = 1 + rng() % n;
    TRange x{e1 - std::min(e1 - 1, rng() % 12), e1};
    TRange y{e2 - std::min(e2 - 1, rng() % 12), e2};
    check_pair(x, y);
  }
  check_pair(TRange{}, TRange{1, 3});   // empty vs nonempty
  check_pair(TRange{2, 1}, TRange{});   // empty vs empty
  check_pair(TRange{3, 5}, TRange{3, 5});
}

TEST_CASE("verification hook sees no collisions at the default seed") {
  std::mt19937_64 rng(9);
  Instance inst = random_instance(rng, 48, 200, 2);
  FingerprintIndex fp(inst.archive, inst.combined, 0);
  std::string text = inst.text;
  fp.enable_verification(
      [text](u64 a, u64 b) { return text.substr(a - 1, b - a + 1); });
  const u64 n = text.size();
  for (int it = 0; it < 500; ++it) {
    u64 x = 1 + rng() % n;
    u64 y = 1 + rng() % n;
    CHECK(fp.lce_forward(x, y, n) == naive_lce_f(text, x, y, n));
    CHECK(fp.lce_backward(x, y, n) == naive_lce_b(text, x, y, n));
  }
  CHECK(fp.collision_count() == 0);
}

TEST_CASE("fingerprint footprint stays near the parse size") {
  std::mt19937_64 rng(11);
  Instance inst = random_instance(rng, 64, 4000, 2);
  FingerprintIndex fp(inst.archive, inst.combined, 0);
  CHECK(fp.heap_words() > 0);
  // Prefix hashes per reference position and per boundary, the fixed
  // square-and-multiply ladder, and two power tables of O(sqrt n) entries.
  const u64 bits = std::bit_width(inst.combined.text_len());
  const u64 split = (bits + 1) / 2;
  const u64 pow_tables = 64 + (u64{1} << split) + (u64{1} << (bits - split)) + 1;
  CHECK(fp.heap_words() <=
        inst.archive.ref_len() + 1 + inst.combined.phrase_count() + pow_tables);
}
