#include "rlz2lz/core.hpp"

#include <algorithm>

namespace rlz2lz {

namespace {

void put_u64(std::string& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  u64 take_u64(const char* what) {
    need(8, what);
    u64 v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<u64>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    pos_ += 8;
    return v;
  }
  char take_byte(const char* what) {
    need(1, what);
    return bytes_[pos_++];
  }
  std::string_view take_bytes(u64 count, const char* what) {
    need(count, what);
    std::string_view v = bytes_.substr(pos_, count);
    pos_ += count;
    return v;
  }
  void expect_end() const {
    if (pos_ != bytes_.size()) throw FormatError("trailing bytes after payload");
  }

 private:
  void need(u64 count, const char* what) const {
    if (bytes_.size() - pos_ < count)
      throw FormatError(std::string("truncated input while reading ") + what);
  }

  std::string_view bytes_;
  u64 pos_ = 0;
};

constexpr std::string_view kRlzpMagic = "RLZP";
constexpr std::string_view kLz77Magic = "LZ77";
constexpr char kVersion = 0x01;

}  // namespace

u64 CombinedParse::phrase_at(u64 k) const {
  auto it = std::lower_bound(ends.begin(), ends.end(), k);
  return static_cast<u64>(it - ends.begin());
}

std::string expand_rlz(const RlzArchive& archive) {
  std::string text = archive.reference;
  const u64 ell = archive.ref_len();
  for (const RlzPhrase& p : archive.phrases) {
    if (p.len == 0) throw MalformedPhrase("phrase of length zero");
    if (p.src < 1 || p.src + p.len - 1 > ell)
      throw MalformedPhrase("phrase copy reaches outside the reference");
    text.append(archive.reference, p.src - 1, p.len);
  }
  return text;
}

std::string expand_lz77(const Lz77Parse& parse) {
  std::string text;
  text.reserve(parse.text_len());
  for (const Lz77Triple& t : parse.triples) {
    if (t.copy_len == 0) {
      if (t.src != kNoSource)
        throw MalformedTriple("source given for an empty copy part");
    } else {
      if (t.src == kNoSource) throw MalformedTriple("copy part without a source");
      if (t.src > text.size())
        throw MalformedTriple("copy source starts at or after the phrase");
      // Overlapping copies replicate already-produced bytes one at a time.
      for (u64 i = 0; i < t.copy_len; ++i)
        text.push_back(text[t.src - 1 + i]);
    }
    text.push_back(t.last);
  }
  return text;
}

std::string encode_rlzp(const RlzArchive& archive) {
  std::string out(kRlzpMagic);
  out.push_back(kVersion);
  put_u64(out, archive.ref_len());
  out += archive.reference;
  put_u64(out, archive.phrases.size());
  for (const RlzPhrase& p : archive.phrases) {
    put_u64(out, p.src);
    put_u64(out, p.len);
  }
  return out;
}

RlzArchive decode_rlzp(std::string_view bytes) {
  ByteReader in(bytes);
  if (in.take_bytes(4, "magic") != kRlzpMagic)
    throw FormatError("bad magic, expected RLZP");
  if (in.take_byte("version") != kVersion) throw FormatError("unknown version");
  RlzArchive archive;
  const u64 ell = in.take_u64("reference length");
  archive.reference = std::string(in.take_bytes(ell, "reference"));
  const u64 count = in.take_u64("phrase count");
  archive.phrases.reserve(count);
  for (u64 i = 0; i < count; ++i) {
    RlzPhrase p;
    p.src = in.take_u64("phrase source");
    p.len = in.take_u64("phrase length");
    if (p.len == 0) throw FormatError("phrase of length zero");
    if (p.src < 1 || p.src + p.len - 1 > ell)
      throw FormatError("phrase copy reaches outside the reference");
    archive.phrases.push_back(p);
  }
  in.expect_end();
  return archive;
}

std::string encode_lz77(const Lz77Parse& parse) {
  std::string out(kLz77Magic);
  out.push_back(kVersion);
  put_u64(out, parse.text_len());
  put_u64(out, parse.triples.size());
  for (const Lz77Triple& t : parse.triples) {
    put_u64(out, t.copy_len);
    put_u64(out, t.src);
    out.push_back(t.last);
  }
  return out;
}

Lz77Parse decode_lz77(std::string_view bytes) {
  ByteReader in(bytes);
  if (in.take_bytes(4, "magic") != kLz77Magic)
    throw FormatError("bad magic, expected LZ77");
  if (in.take_byte("version") != kVersion) throw FormatError("unknown version");
  const u64 n = in.take_u64("text length");
  const u64 count = in.take_u64("triple count");
  Lz77Parse parse;
  parse.triples.reserve(count);
  u64 produced = 0;
  for (u64 i = 0; i < count; ++i) {
    Lz77Triple t;
    t.copy_len = in.take_u64("copy length");
    t.src = in.take_u64("copy source");
    t.last = in.take_byte("last character");
    if ((t.copy_len == 0) != (t.src == kNoSource))
      throw FormatError("copy length and source disagree");
    if (t.src != kNoSource && t.src > produced)
      throw FormatError("copy source starts at or after the phrase");
    produced += t.copy_len + 1;
    parse.triples.push_back(t);
  }
  if (produced != n) throw FormatError("text length does not match triples");
  in.expect_end();
  return parse;
}

FileKind detect_kind(std::string_view bytes) {
  if (bytes.substr(0, 4) == kRlzpMagic) return FileKind::Rlzp;
  if (bytes.substr(0, 4) == kLz77Magic) return FileKind::Lz77;
  return FileKind::Unknown;
}

}  // namespace rlz2lz
