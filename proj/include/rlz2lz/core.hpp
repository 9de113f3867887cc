#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rlz2lz {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedPhrase : Error {
  using Error::Error;
};
struct MalformedTriple : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
class NoReferenceOccurrence : public Error {
 public:
  NoReferenceOccurrence(const std::string& msg, u64 position)
      : Error(msg), position_(position) {}
  [[nodiscard]] u64 position() const noexcept { return position_; }

 private:
  u64 position_;
};

// Inclusive 1-based range of text positions; default-constructed value is the
// canonical empty range.
struct TRange {
  u64 begin = 1;
  u64 end = 0;

  [[nodiscard]] bool empty() const noexcept { return end < begin; }
  [[nodiscard]] u64 len() const noexcept { return empty() ? 0 : end - begin + 1; }
  bool operator==(const TRange&) const = default;
};

// Sentinel for "no copy source" in an LZ77 triple (positions are 1-based).
inline constexpr u64 kNoSource = 0;

struct RlzPhrase {
  u64 src = 0;  // 1-based start of the copy in the reference
  u64 len = 0;  // length, >= 1
  bool operator==(const RlzPhrase&) const = default;
};

// Reference prefix R = T[1..ell] stored verbatim plus the phrases covering the
// tail T[ell+1..n], each copied from somewhere inside R.
struct RlzArchive {
  std::string reference;
  std::vector<RlzPhrase> phrases;

  [[nodiscard]] u64 ref_len() const noexcept { return reference.size(); }
  [[nodiscard]] u64 text_len() const noexcept {
    u64 n = reference.size();
    for (const RlzPhrase& p : phrases) n += p.len;
    return n;
  }
};

struct Lz77Triple {
  u64 copy_len = 0;        // length of the copied part (phrase length minus 1)
  u64 src = kNoSource;     // leftmost start of the copied part, kNoSource if none
  char last = '\0';        // explicit final character of the phrase
  bool operator==(const Lz77Triple&) const = default;
};

struct Lz77Parse {
  std::vector<Lz77Triple> triples;

  [[nodiscard]] u64 text_len() const noexcept {
    u64 n = 0;
    for (const Lz77Triple& t : triples) n += t.copy_len + 1;
    return n;
  }
};

// Boundary structure of the combined parse: the LZ77 phrases of the reference
// followed by the archive phrases.  Only phrase end positions and, for the
// tail phrases, their copy sources are retained.
struct CombinedParse {
  std::vector<u64> ends;     // 1-based end position of every phrase, increasing
  std::vector<u64> rlz_src;  // copy source in R for phrases[ref_phrases..]
  u64 ref_len = 0;
  u64 ref_phrases = 0;  // how many leading phrases cover the reference

  [[nodiscard]] u64 phrase_count() const noexcept { return ends.size(); }
  [[nodiscard]] u64 text_len() const noexcept {
    return ends.empty() ? 0 : ends.back();
  }
  [[nodiscard]] u64 start_of(u64 idx) const {
    return idx == 0 ? 1 : ends[idx - 1] + 1;
  }
  [[nodiscard]] u64 end_of(u64 idx) const { return ends[idx]; }
  [[nodiscard]] bool is_tail_phrase(u64 idx) const noexcept {
    return idx >= ref_phrases;
  }
  // Source in R of the tail phrase idx (idx >= ref_phrases).
  [[nodiscard]] u64 src_of(u64 idx) const { return rlz_src[idx - ref_phrases]; }
  // Index of the phrase containing position k (1 <= k <= n).
  [[nodiscard]] u64 phrase_at(u64 k) const;
};

// Materialize the text an archive describes; throws MalformedPhrase if a
// phrase reaches outside the reference.
std::string expand_rlz(const RlzArchive& archive);

// Materialize the text a parse describes; throws MalformedTriple on a source
// that is missing, self-referential, or out of range.  Overlap of a copy with
// the phrase it produces is legal and resolved left to right.
std::string expand_lz77(const Lz77Parse& parse);

// Serialized archive layout: "RLZP", version byte 0x01, u64 reference length,
// the reference bytes, u64 phrase count, then (u64 src, u64 len) per phrase.
// All integers little-endian.
std::string encode_rlzp(const RlzArchive& archive);
RlzArchive decode_rlzp(std::string_view bytes);

// Serialized parse layout: "LZ77", version byte 0x01, u64 text length, u64
// triple count, then (u64 copy_len, u64 src, 1 byte last) per triple.
std::string encode_lz77(const Lz77Parse& parse);
Lz77Parse decode_lz77(std::string_view bytes);

enum class FileKind { Rlzp, Lz77, Unknown };
FileKind detect_kind(std::string_view bytes);

// 1-based character access used throughout; no bounds check.
inline unsigned char at1(std::string_view s, u64 i) {
  return static_cast<unsigned char>(s[i - 1]);
}

}  // namespace rlz2lz
