// dnacrypt command-line front end.
//
// Exit codes: 0 ok, 64 usage, 65 invalid key or input data, 66 I/O failure,
// 67 malformed container or image, 68 attack failed, 69 metric undefined,
// 70 anything else.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnacrypt/dnacrypt.hpp"

namespace {

using namespace dnacrypt;

enum Exit : int {
  kOk = 0,
  kUsage = 64,
  kBadInput = 65,
  kIo = 66,
  kBadFormat = 67,
  kAttackFailed = 68,
  kDomain = 69,
  kInternal = 70,
};

class IoError : public Error {
 public:
  using Error::Error;
};

Bytes read_file(const std::string& path) {
  if (path == "-") {
    std::cin >> std::noskipws;
    return Bytes(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  Bytes data(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("error while writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

void write_text(const std::string& path, const std::string& text) {
  write_file(path, Bytes(text.begin(), text.end()));
}

struct Options {
  std::string key;
  std::string iv;
  std::string in = "-";
  std::string out = "-";
  std::string known;
  std::string metric;
  std::string cipher;
  std::string report;
  unsigned n = 1;
  std::size_t bytes = 0;
  std::vector<std::size_t> sizes;
  std::size_t runs = 10;
};

LegacyKey legacy_key(const std::string& text, unsigned n) {
  return LegacyKey::from_bits(parse_key_bits(text, 24u * n));
}

LegacyKey improved_key(const std::string& text) { return LegacyKey::from_bits(parse_key_bits(text, improved::kKeyBits)); }

biosnow::KeyIv biosnow_key(const Options& o) {
  if (o.iv.empty()) throw ContractError("--iv is required for Bio-SNOW");
  return biosnow::KeyIv::from_text(o.key, o.iv);
}

Bytes iv_bytes(const biosnow::KeyIv& kiv) { return bytes_from_quads(kiv.iv); }

biosnow::KeyIv kiv_from_container(const std::string& key_text, const CipherContainer& c) {
  biosnow::KeyIv kiv;
  kiv.key = biosnow::KeyIv::parse(key_text);
  if (c.iv.size() != biosnow::kKeyQuads / 4) throw FormatError("container: Bio-SNOW IV must be 32 bytes");
  kiv.iv = to_block<biosnow::kKeyQuads>(quads_from_bytes(c.iv));
  return kiv;
}

// ---- block ciphers ----------------------------------------------------------

int legacy_encrypt(const Options& o) {
  if (o.n == 0 || o.n > 255) throw ContractError("--n must be between 1 and 255");
  const LegacyKey key = legacy_key(o.key, o.n);
  const Bytes plain = read_file(o.in);
  CipherContainer c;
  c.cipher = CipherId::Legacy;
  c.parameter = static_cast<std::uint8_t>(o.n);
  c.original_length = plain.size();
  c.payload = legacy::encrypt(plain, key);
  write_file(o.out, c.serialize());
  return kOk;
}

int legacy_decrypt(const Options& o) {
  const CipherContainer c = CipherContainer::parse(read_file(o.in));
  c.expect(CipherId::Legacy);
  write_file(o.out, legacy::decrypt(c.payload, legacy_key(o.key, c.parameter), c.original_length));
  return kOk;
}

int improved_encrypt(const Options& o) {
  const LegacyKey key = improved_key(o.key);
  const Bytes plain = read_file(o.in);
  CipherContainer c;
  c.cipher = CipherId::Improved;
  c.original_length = plain.size();
  c.payload = improved::encrypt(plain, key);
  write_file(o.out, c.serialize());
  return kOk;
}

int improved_decrypt(const Options& o) {
  const CipherContainer c = CipherContainer::parse(read_file(o.in));
  c.expect(CipherId::Improved);
  write_file(o.out, improved::decrypt(c.payload, improved_key(o.key), c.original_length));
  return kOk;
}

// Block ciphertexts of either block cipher are accepted, so the same command
// demonstrates that the hardened variant resists the attack.
int legacy_attack(const Options& o) {
  const CipherContainer c = CipherContainer::parse(read_file(o.in));
  if (c.cipher == CipherId::BioSnow) throw FormatError("legacy-attack needs a block-cipher container");
  const std::size_t side = c.cipher == CipherId::Legacy ? 8u * c.parameter : improved::kSide;
  const std::size_t bb = side * side / 8;
  const Bytes known = read_file(o.known);
  if (known.size() < 2 * bb) {
    throw ContractError("known plaintext must cover two blocks (" + std::to_string(2 * bb) + " bytes), got " +
                        std::to_string(known.size()));
  }
  if (c.payload.size() < 2 * bb) throw ContractError("ciphertext holds fewer than two blocks");
  const std::span<const std::uint8_t> p(known), q(c.payload);
  const auto t0 = std::chrono::steady_clock::now();
  const attack::RecoveredKey rec = attack::recover_key(
      BitBlock::from_bytes(side, p.subspan(0, bb)), BitBlock::from_bytes(side, q.subspan(0, bb)),
      BitBlock::from_bytes(side, p.subspan(bb, bb)), BitBlock::from_bytes(side, q.subspan(bb, bb)));
  const auto t1 = std::chrono::steady_clock::now();
  const Bytes plain = legacy::decrypt(c.payload, rec.key, c.original_length);
  const auto t2 = std::chrono::steady_clock::now();
  write_file(o.out, plain);

  std::ostringstream line;
  line << std::setprecision(9) << to_hex(rec.key.to_bytes()) << ',' << rec.pinned.size() << ','
       << std::chrono::duration<double>(t1 - t0).count() << ',' << std::chrono::duration<double>(t2 - t1).count()
       << ',' << c.payload.size() / bb;
  const std::string csv = "key,pinned,solve_seconds,decrypt_seconds,blocks\n" + line.str() + "\n";
  if (!o.report.empty()) write_text(o.report, csv);
  std::cerr << "recovered key " << to_hex(rec.key.to_bytes()) << " (r0 pinned to 0)\n";
  return kOk;
}

// ---- Bio-SNOW and images --------------------------------------------------------

int biosnow_keystream(const Options& o) {
  write_file(o.out, biosnow::keystream_bytes(biosnow_key(o), o.bytes));
  return kOk;
}

int biosnow_encrypt(const Options& o) {
  const biosnow::KeyIv kiv = biosnow_key(o);
  const Bytes plain = read_file(o.in);
  CipherContainer c;
  c.cipher = CipherId::BioSnow;
  c.original_length = plain.size();
  c.iv = iv_bytes(kiv);
  c.payload = biosnow::stream_encrypt(plain, kiv);
  write_file(o.out, c.serialize());
  return kOk;
}

int biosnow_decrypt(const Options& o) {
  const CipherContainer c = CipherContainer::parse(read_file(o.in));
  c.expect(CipherId::BioSnow);
  write_file(o.out, biosnow::stream_decrypt(c.payload, kiv_from_container(o.key, c)));
  return kOk;
}

int image_crypt(const Options& o) {
  const image::ImagePlanes img = image::load_ppm(read_file(o.in));
  std::uint64_t quads = 0;
  const image::ImagePlanes out = image::encrypt_image(img, biosnow_key(o), &quads);
  write_file(o.out, image::save_ppm(out));
  std::ostringstream os;
  os << "width,height,quads_consumed\n" << img.width << ',' << img.height << ',' << quads << '\n';
  if (o.report.empty()) {
    std::cerr << os.str();
  } else {
    write_text(o.report, os.str());
  }
  return kOk;
}

// ---- analyze ---------------------------------------------------------------

Bytes encrypt_with(const Options& o, std::span<const std::uint8_t> plain) {
  if (o.cipher == "legacy") return legacy::encrypt(plain, legacy_key(o.key, o.n));
  if (o.cipher == "improved") return improved::encrypt(plain, improved_key(o.key));
  if (o.cipher == "biosnow") return biosnow::stream_encrypt(plain, biosnow_key(o));
  throw ContractError("--cipher must be legacy, improved or biosnow");
}

std::string descriptor(const Options& o, std::size_t bytes) {
  return std::to_string(bytes) + " bytes from " + o.in + (o.cipher.empty() ? "" : " via " + o.cipher);
}

std::string analyze_avalanche(const Options& o, const Bytes& plain) {
  const BitVector key = o.cipher == "legacy" ? parse_key_bits(o.key, 24u * o.n)
                        : o.cipher == "improved"
                            ? parse_key_bits(o.key, improved::kKeyBits)
                            : throw ContractError("avalanche needs --cipher legacy or improved");
  const bool legacy_mode = o.cipher == "legacy";
  auto fn = [&](std::span<const std::uint8_t> m, std::span<const std::uint8_t> k) {
    const LegacyKey lk = LegacyKey::from_bits(k);
    return legacy_mode ? legacy::encrypt(m, lk) : improved::encrypt(m, lk);
  };
  const auto summary = metrics::avalanche_mean(fn, key, plain);
  std::ostringstream os;
  os << "metric,value,unit,descriptor\n";
  os << metrics::MetricReport{"avalanche_mean", summary.mean, "fraction", descriptor(o, plain.size())}.to_csv() << '\n';
  for (std::size_t i = 0; i < summary.per_bit.size(); ++i) {
    os << metrics::MetricReport{"avalanche_bit_" + std::to_string(i), summary.per_bit[i], "fraction",
                                descriptor(o, plain.size())}
              .to_csv()
       << '\n';
  }
  return os.str();
}

std::string analyze_image(const Options& o, const std::string& metric) {
  const image::ImagePlanes img = image::load_ppm(read_file(o.in));
  const std::pair<const char*, const Bytes*> planes[] = {{"red", &img.r}, {"green", &img.g}, {"blue", &img.b}};
  const metrics::Direction dirs[] = {metrics::Direction::Horizontal, metrics::Direction::Vertical,
                                     metrics::Direction::Diagonal};
  std::ostringstream os;
  if (metric == "correlation") {
    os << "channel,direction,r\n" << std::setprecision(17);
    for (const auto& [name, plane] : planes)
      for (auto d : dirs)
        os << name << ',' << metrics::to_string(d) << ','
           << metrics::adjacent_correlation(*plane, img.width, img.height, d) << '\n';
  } else if (metric == "histogram") {
    os << "channel,value,count\n";
    for (const auto& [name, plane] : planes) os << metrics::histogram_csv(metrics::histogram(*plane), name);
  } else {
    os << "channel,direction,x,y\n";
    for (const auto& [name, plane] : planes)
      for (auto d : dirs)
        for (const auto& [a, b] : metrics::scatter_sample(*plane, img.width, img.height, d))
          os << name << ',' << metrics::to_string(d) << ',' << int{a} << ',' << int{b} << '\n';
  }
  return os.str();
}

int analyze(const Options& o) {
  std::string csv;
  if (o.metric == "correlation" || o.metric == "histogram" || o.metric == "scatter") {
    csv = analyze_image(o, o.metric);
  } else {
    const Bytes input = read_file(o.in);
    std::ostringstream os;
    os << "metric,value,unit,descriptor\n";
    if (o.metric == "avalanche") {
      csv = analyze_avalanche(o, input);
    } else if (o.metric == "entropy") {
      const Bytes data = o.cipher.empty() ? input : encrypt_with(o, input);
      os << metrics::MetricReport{"entropy", metrics::entropy(data), "bits/byte", descriptor(o, input.size())}.to_csv()
         << '\n';
      csv = os.str();
    } else if (o.metric == "psnr") {
      if (o.cipher.empty()) throw ContractError("psnr needs --cipher");
      Bytes enc = encrypt_with(o, input);
      enc.resize(input.size());
      const auto r = metrics::nmae_psnr(input, enc);
      os << metrics::MetricReport{"nmae", r.nmae, "percent", descriptor(o, input.size())}.to_csv() << '\n';
      os << metrics::MetricReport{"psnr", r.psnr_db, "dB", descriptor(o, input.size())}.to_csv() << '\n';
      csv = os.str();
    } else if (o.metric == "randomness") {
      const Bytes data = o.cipher.empty() ? input : encrypt_with(o, input);
      const auto r = randomness::randomness_subset(bits_from_bytes(data));
      const std::string d = descriptor(o, data.size());
      os << metrics::MetricReport{"monobit", r.monobit, "p-value", d}.to_csv() << '\n';
      os << metrics::MetricReport{"block_frequency_m128", r.block_frequency, "p-value", d}.to_csv() << '\n';
      os << metrics::MetricReport{"runs", r.runs, "p-value", d}.to_csv() << '\n';
      os << metrics::MetricReport{"passed", r.passed() ? 1.0 : 0.0, "bool", "alpha=0.01"}.to_csv() << '\n';
      csv = os.str();
    } else {
      throw ContractError("unknown metric '" + o.metric + "'");
    }
  }
  write_text(o.report.empty() ? std::string("-") : o.report, csv);
  return kOk;
}

int run_bench(const Options& o) {
  biosnow::KeyIv kiv;
  if (!o.key.empty()) kiv = biosnow_key(o);
  const auto report = bench::run(kiv, o.sizes.empty() ? bench::default_sizes() : o.sizes, o.runs);
  std::cout << report.to_table();
  if (!o.report.empty()) write_text(o.report, report.to_csv());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dnacrypt: quad-based ciphers, attack runner, and analysis tools", "dnacrypt"};
  app.require_subcommand(1);
  Options o;

  auto key_flag = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--key", o.key, "key as hex or ACGT letters");
    if (required) opt->required();
  };
  auto io_flags = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input file ('-' for stdin)")->capture_default_str();
    sub->add_option("--out", o.out, "output file ('-' for stdout)")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers.emplace_back(sub, fn);
    return sub;
  };

  auto* le = command("legacy-encrypt", "encrypt with the legacy block cipher", legacy_encrypt);
  key_flag(le);
  io_flags(le);
  le->add_option("--n", o.n, "block side in bytes (blocks are 8n x 8n bits)")->capture_default_str();

  auto* ld = command("legacy-decrypt", "decrypt a legacy container", legacy_decrypt);
  key_flag(ld);
  io_flags(ld);

  auto* la = command("legacy-attack", "recover the key from two known plaintext blocks and decrypt", legacy_attack);
  io_flags(la);
  la->add_option("--known", o.known, "file holding at least the first two plaintext blocks")->required();
  la->add_option("--report", o.report, "CSV report with the recovered key and timings");

  auto* ie = command("improved-encrypt", "encrypt with the improved 8x8 block cipher", improved_encrypt);
  key_flag(ie);
  io_flags(ie);
  auto* id = command("improved-decrypt", "decrypt an improved-cipher container", improved_decrypt);
  key_flag(id);
  io_flags(id);

  auto* bk = command("biosnow-keystream", "dump raw Bio-SNOW keystream bytes", biosnow_keystream);
  key_flag(bk);
  bk->add_option("--iv", o.iv, "IV as 64 hex digits or 128 ACGT letters")->required();
  bk->add_option("--bytes", o.bytes, "number of keystream bytes")->required();
  bk->add_option("--out", o.out, "output file ('-' for stdout)")->capture_default_str();

  auto* be = command("biosnow-encrypt", "encrypt with the Bio-SNOW stream cipher", biosnow_encrypt);
  key_flag(be);
  be->add_option("--iv", o.iv, "IV as 64 hex digits or 128 ACGT letters")->required();
  io_flags(be);
  auto* bd = command("biosnow-decrypt", "decrypt a Bio-SNOW container (IV read from the container)", biosnow_decrypt);
  key_flag(bd);
  io_flags(bd);

  for (const char* name : {"image-encrypt", "image-decrypt"}) {
    auto* im = command(name, "XOR a P6 PPM image with the Bio-SNOW keystream", image_crypt);
    key_flag(im);
    im->add_option("--iv", o.iv, "IV as 64 hex digits or 128 ACGT letters")->required();
    io_flags(im);
    im->add_option("--report", o.report, "CSV with dimensions and quads consumed (default: stderr)");
  }

  auto* an = command("analyze", "ciphertext quality metrics as CSV", analyze);
  an->add_option("--metric", o.metric, "avalanche|entropy|psnr|correlation|histogram|scatter|randomness")
      ->required()
      ->check(CLI::IsMember({"avalanche", "entropy", "psnr", "correlation", "histogram", "scatter", "randomness"}));
  an->add_option("--cipher", o.cipher, "encrypt the input first: legacy|improved|biosnow")
      ->check(CLI::IsMember({"legacy", "improved", "biosnow"}));
  key_flag(an, false);
  an->add_option("--iv", o.iv, "Bio-SNOW IV");
  an->add_option("--n", o.n, "legacy block side in bytes")->capture_default_str();
  an->add_option("--in", o.in, "input file (PPM for image metrics)")->capture_default_str();
  an->add_option("--report", o.report, "CSV output file (default: stdout)");

  auto* bn = command("bench", "time Bio-SNOW keystream generation", run_bench);
  key_flag(bn, false);
  bn->add_option("--iv", o.iv, "Bio-SNOW IV");
  bn->add_option("--sizes", o.sizes, "block counts (default 100..1200 step 100)")->delimiter(',');
  bn->add_option("--runs", o.runs, "timed repetitions per size")->capture_default_str();
  bn->add_option("--report", o.report, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const char* kind = "error";
  std::string message;
  int code = kInternal;
  try {
    for (const auto& [sub, fn] : handlers) {
      if (sub->parsed()) return fn(o);
    }
    return kUsage;
  } catch (const AttackFailed& e) {
    kind = "attack failed", message = e.what(), code = kAttackFailed;
  } catch (const FormatError& e) {
    kind = "malformed input", message = e.what(), code = kBadFormat;
  } catch (const IoError& e) {
    kind = "i/o", message = e.what(), code = kIo;
  } catch (const DomainError& e) {
    kind = "undefined metric", message = e.what(), code = kDomain;
  } catch (const ParseError& e) {
    kind = "invalid input", message = e.what(), code = kBadInput;
  } catch (const ContractError& e) {
    kind = "invalid input", message = e.what(), code = kBadInput;
  } catch (const std::exception& e) {
    message = e.what();
  }
  std::cerr << "dnacrypt: " << kind << ": " << message << '\n';
  return code;
}
