// rlz2lz: build a reference-prefix archive of a text and turn it into the
// exact greedy factorization of the whole text, without decompressing.
//
// Exit codes: 0 success, 1 I/O failure, 2 malformed input or bad usage,
// 3 verification failure, 4 tail not expressible against the reference.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "rlz2lz/converter.hpp"
#include "rlz2lz/core.hpp"
#include "rlz2lz/oracle.hpp"
#include "rlz2lz/parse_build.hpp"

namespace {

using rlz2lz::u64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("error while reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

// Derived output name: strip a known container suffix, append the new one.
std::string derive_out(const std::string& input, const std::string& strip,
                       const std::string& suffix) {
  if (!strip.empty() && input.size() > strip.size() &&
      input.compare(input.size() - strip.size(), strip.size(), strip) == 0)
    return input.substr(0, input.size() - strip.size()) + suffix;
  return input + suffix;
}

u64 choose_seed(const std::optional<u64>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RLZ2LZ_SEED")) {
    try {
      size_t used = 0;
      const std::string s(env);
      const u64 v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::runtime_error("RLZ2LZ_SEED is not an unsigned integer");
  }
  std::random_device rd;
  return (static_cast<u64>(rd()) << 32) ^ rd();
}

void emit(const char* key, u64 value) {
  std::cout << key << "=" << value << "\n";
}

void emit_ratio(u64 n, u64 bytes) {
  std::cout << "ratio=" << std::fixed << std::setprecision(4)
            << (bytes == 0 ? 0.0 : static_cast<double>(n) / bytes) << "\n";
}

int cmd_parse(const std::string& input, const std::string& out, u64 ref_len) {
  const std::string text = read_file(input);
  if (ref_len > text.size()) {
    std::cerr << "rlz2lz: reference length " << ref_len
              << " exceeds input length " << text.size() << "\n";
    return 4;
  }
  const rlz2lz::RlzArchive archive = rlz2lz::build_archive(text, ref_len);
  const std::string blob = rlz2lz::encode_rlzp(archive);
  write_file(out, blob);
  std::cout << "kind=rlzp\n";
  emit("ell", archive.ref_len());
  emit("zprime", archive.phrases.size());
  emit("n", archive.text_len());
  emit("bytes", blob.size());
  emit_ratio(archive.text_len(), blob.size());
  return 0;
}

int cmd_convert(const std::string& input, const std::string& out,
                const std::optional<u64>& seed_flag, bool verify) {
  const std::string blob = read_file(input);
  const rlz2lz::RlzArchive archive = rlz2lz::decode_rlzp(blob);
  rlz2lz::Converter conv(archive, choose_seed(seed_flag));
  if (verify) conv.enable_verification();
  const rlz2lz::Lz77Parse parse = conv.run();
  if (verify) {
    // Re-expand the output and compare it against phrase-directory access
    // to the archive, one bounded chunk at a time.
    const std::string text = rlz2lz::expand_lz77(parse);
    const rlz2lz::PhraseDirectory& dir = conv.directory();
    constexpr u64 kChunk = 4096;
    for (u64 a = 1; a <= text.size(); a += kChunk) {
      const u64 b = std::min<u64>(text.size(), a + kChunk - 1);
      if (dir.extract(a, b) != text.substr(a - 1, b - a + 1)) {
        std::cerr << "rlz2lz: verification failed on T[" << a << ".." << b
                  << "]\n";
        return 3;
      }
    }
    emit("collisions", conv.collision_count());
  }
  const std::string encoded = rlz2lz::encode_lz77(parse);
  write_file(out, encoded);
  std::cout << "kind=lz77\n";
  emit("n", parse.text_len());
  emit("z", parse.triples.size());
  emit("queries", conv.stats().split_queries);
  emit("bytes", encoded.size());
  emit_ratio(parse.text_len(), encoded.size());
  return 0;
}

int cmd_decode(const std::string& input, const std::string& out) {
  const std::string blob = read_file(input);
  std::string text;
  switch (rlz2lz::detect_kind(blob)) {
    case rlz2lz::FileKind::Rlzp:
      std::cout << "kind=rlzp\n";
      text = rlz2lz::expand_rlz(rlz2lz::decode_rlzp(blob));
      break;
    case rlz2lz::FileKind::Lz77:
      std::cout << "kind=lz77\n";
      text = rlz2lz::expand_lz77(rlz2lz::decode_lz77(blob));
      break;
    case rlz2lz::FileKind::Unknown:
      throw rlz2lz::FormatError("unrecognized container magic in '" + input +
                                "'");
  }
  write_file(out, text);
  emit("n", text.size());
  emit("bytes", text.size());
  return 0;
}

int cmd_naive_lz77(const std::string& input, const std::string& out) {
  const std::string text = read_file(input);
  const rlz2lz::Lz77Parse parse = rlz2lz::oracle::naive_lz77(text);
  const std::string encoded = rlz2lz::encode_lz77(parse);
  write_file(out, encoded);
  std::cout << "kind=lz77\n";
  emit("n", parse.text_len());
  emit("z", parse.triples.size());
  emit("bytes", encoded.size());
  emit_ratio(parse.text_len(), encoded.size());
  return 0;
}

int cmd_stats(const std::string& input) {
  const std::string blob = read_file(input);
  switch (rlz2lz::detect_kind(blob)) {
    case rlz2lz::FileKind::Rlzp: {
      const rlz2lz::RlzArchive a = rlz2lz::decode_rlzp(blob);
      std::cout << "kind=rlzp\n";
      emit("n", a.text_len());
      emit("ell", a.ref_len());
      emit("zprime", a.phrases.size());
      emit("bytes", blob.size());
      emit_ratio(a.text_len(), blob.size());
      return 0;
    }
    case rlz2lz::FileKind::Lz77: {
      const rlz2lz::Lz77Parse p = rlz2lz::decode_lz77(blob);
      std::cout << "kind=lz77\n";
      emit("n", p.text_len());
      emit("z", p.triples.size());
      emit("bytes", blob.size());
      emit_ratio(p.text_len(), blob.size());
      return 0;
    }
    case rlz2lz::FileKind::Unknown:
      throw rlz2lz::FormatError("unrecognized container magic in '" + input +
                                "'");
  }
  return 2;  // unreachable
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Build a reference-prefix archive of a text and convert it into the "
      "exact greedy factorization of the whole text"};
  app.require_subcommand(1);

  std::string input;
  std::string out;
  u64 ref_len = 0;
  u64 seed_value = 0;
  bool verify = false;

  CLI::App* parse = app.add_subcommand(
      "parse", "Factor a raw text against its leading prefix into .rlzp");
  parse->add_option("input", input, "raw text file")->required();
  parse
      ->add_option("--ref-len", ref_len,
                   "length of the reference prefix (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  parse->add_option("--out", out, "output path (default: INPUT.rlzp)");

  CLI::App* convert = app.add_subcommand(
      "convert", "Turn an .rlzp archive into the whole-text .lz77 parse");
  convert->add_option("input", input, ".rlzp archive")->required();
  convert->add_option("--out", out,
                      "output path (default: INPUT minus .rlzp, plus .lz77)");
  CLI::Option* seed_opt = convert->add_option(
      "--seed", seed_value,
      "fingerprint seed (default: RLZ2LZ_SEED env, else random)");
  convert->add_flag("--verify", verify,
                    "re-check the output against the archive byte range by "
                    "byte range");

  CLI::App* decode = app.add_subcommand(
      "decode", "Expand an .rlzp or .lz77 container back to raw text");
  decode->add_option("input", input, "container file")->required();
  decode->add_option("--out", out, "output path (default: INPUT.txt)");

  CLI::App* naive = app.add_subcommand(
      "naive-lz77", "Factor a raw text directly (quadratic reference parser)");
  naive->add_option("input", input, "raw text file")->required();
  naive->add_option("--out", out, "output path (default: INPUT.lz77)");

  CLI::App* stats = app.add_subcommand(
      "stats", "Report the sizes recorded in a container without expanding");
  stats->add_option("input", input, "container file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) {
      if (out.empty()) out = input + ".rlzp";
      return cmd_parse(input, out, ref_len);
    }
    if (convert->parsed()) {
      if (out.empty()) out = derive_out(input, ".rlzp", ".lz77");
      std::optional<u64> seed;
      if (seed_opt->count() > 0) seed = seed_value;
      return cmd_convert(input, out, seed, verify);
    }
    if (decode->parsed()) {
      if (out.empty()) out = input + ".txt";
      return cmd_decode(input, out);
    }
    if (naive->parsed()) {
      if (out.empty()) out = input + ".lz77";
      return cmd_naive_lz77(input, out);
    }
    if (stats->parsed()) return cmd_stats(input);
  } catch (const rlz2lz::NoReferenceOccurrence& e) {
    std::cerr << "rlz2lz: " << e.what() << "\n";
    return 4;
  } catch (const rlz2lz::FormatError& e) {
    std::cerr << "rlz2lz: " << e.what() << "\n";
    return 2;
  } catch (const rlz2lz::Error& e) {
    std::cerr << "rlz2lz: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rlz2lz: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
