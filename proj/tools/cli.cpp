#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lattika/bfv.hpp"
#include "lattika/errors.hpp"
#include "lattika/lpr.hpp"
#include "lattika/lwe.hpp"
#include "lattika/serialize.hpp"

namespace lattika::cli {

namespace {

constexpr std::int64_t kLweQ = 655360001;
constexpr std::int64_t kBfvQ = 6620830889LL;

// Thrown for malformed flag values that CLI11 itself cannot see.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A flag whose value may or may not have been given.
template <typename T>
struct Flag {
  T value{};
  CLI::Option* opt = nullptr;
  T get_or(T fallback) const { return opt->count() ? value : fallback; }
};

Seed resolve_seed(const std::string& flag) {
  std::string hex = flag;
  if (hex.empty()) {
    if (const char* env = std::getenv("LATTIKA_SEED"); env != nullptr && *env != '\0') hex = env;
  }
  if (hex.empty()) return Seed::random();
  try {
    return Seed::from_hex(hex);
  } catch (const ParseError&) {
    throw UsageError("seed must be exactly 64 hex digits");
  }
}

std::vector<std::int64_t> read_message(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::int64_t> values;
  std::string token;
  while (in >> token) {
    const i128 v = parse_i128(token);
    if (v > INT64_MAX || v < INT64_MIN) throw ParseError("message value " + token + " out of range");
    values.push_back(static_cast<std::int64_t>(v));
  }
  return values;
}

void write_message(const std::string& path, const Coeffs& m) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  for (Eigen::Index i = 0; i < m.size(); ++i) out << (i ? " " : "") << m(i);
  out << "\n";
  if (!out) throw IoError("write failed for " + path);
}

// Pads with zeros to n; an empty file is the zero polynomial.
Coeffs padded(const std::vector<std::int64_t>& values, std::size_t n) {
  if (values.size() > n) {
    throw UsageError("message has " + std::to_string(values.size()) + " coefficients, ring degree is " +
                     std::to_string(n));
  }
  Coeffs m = Coeffs::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < values.size(); ++i) m(static_cast<Eigen::Index>(i)) = values[i];
  return m;
}

// ---- keygen ----

struct KeygenOptions {
  std::string scheme;
  std::string prefix;
  std::string seed;
  Flag<std::int64_t> n, q, samples, t, base, p;
  Flag<double> sigma, sigma2;
  bool no_relin = false;
};

std::size_t as_size(std::int64_t v, const char* name) {
  if (v < 1) throw InvalidParameter(std::string(name) + " must be positive");
  return static_cast<std::size_t>(v);
}

void cmd_keygen(const KeygenOptions& o, std::ostream& out) {
  Rng rng(resolve_seed(o.seed));
  const std::string prefix = o.prefix;
  const double sigma = o.sigma.get_or(1.0);
  std::vector<std::string> written;
  auto save = [&](const std::string& role, const io::Json& doc) {
    const std::string path = prefix + "." + role + ".json";
    io::save(path, doc);
    written.push_back(path);
  };

  if (o.scheme == "lwe") {
    const lwe::LweParams params(as_size(o.n.get_or(1000), "n"), Modulus(o.q.get_or(kLweQ)),
                                as_size(o.samples.get_or(500), "N"), GaussianParams(sigma));
    const lwe::KeyPair keys = lwe::keygen(params, rng);
    save("secret", io::to_json(keys.secret));
    save("public", io::to_json(keys.pub));
  } else if (o.scheme == "lpr") {
    const lpr::LprParams params{RingParams(as_size(o.n.get_or(1024), "n"), Modulus(o.q.get_or(kLweQ))),
                                GaussianParams(sigma)};
    const lpr::KeyPair keys = lpr::keygen(params, rng);
    save("secret", io::to_json(keys.secret));
    save("public", io::to_json(keys.pub));
  } else if (o.scheme == "bfv") {
    std::optional<std::int64_t> base;
    std::optional<bfv::RelinV2Params> v2;
    if (!o.no_relin) {
      base = o.base.get_or(256);
      v2 = bfv::RelinV2Params{o.p.get_or(655360001), GaussianParams(o.sigma2.get_or(2.0))};
    }
    const bfv::BfvParams params(RingParams(as_size(o.n.get_or(1024), "n"), Modulus(o.q.get_or(kBfvQ))),
                                o.t.get_or(83), GaussianParams(sigma), base, v2);
    const bfv::KeySet keys = bfv::keygen(params, rng);
    save("secret", io::to_json(keys.secret));
    save("public", io::to_json(keys.pub));
    if (keys.relin_v1) save("relin-v1", io::to_json(*keys.relin_v1));
    if (keys.relin_v2) save("relin-v2", io::to_json(*keys.relin_v2));
  } else {
    throw UsageError("unknown scheme '" + o.scheme + "' (expected lwe, lpr or bfv)");
  }
  for (const auto& path : written) out << "wrote " << path << "\n";
}

// ---- encrypt / decrypt ----

void cmd_encrypt(const std::string& pk_path, const std::string& msg_path, const std::string& out_path,
                 const std::string& seed) {
  const io::Json doc = io::load(pk_path);
  const io::Header h = io::read_header(doc);
  const std::vector<std::int64_t> values = read_message(msg_path);
  Rng rng(resolve_seed(seed));
  if (h.scheme == io::kLwe) {
    const lwe::PublicKey pk = io::lwe_public(doc);
    if (values.size() > 1) throw UsageError("lwe messages are a single bit");
    const std::int64_t bit = values.empty() ? 0 : values.front();
    if (bit != 0 && bit != 1) throw NotBinary("lwe message must be 0 or 1");
    io::save(out_path, io::to_json(pk.params, lwe::encrypt(pk, static_cast<int>(bit), rng)));
  } else if (h.scheme == io::kLpr) {
    const lpr::PublicKey pk = io::lpr_public(doc);
    const Coeffs m = padded(values, pk.params.ring.degree());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      if (m(i) != 0 && m(i) != 1) throw NotBinary("lpr message coefficients must be 0 or 1");
    }
    const RingElement msg(pk.params.ring, m);
    io::save(out_path, io::to_json(pk.params, lpr::encrypt(pk, msg, rng)));
  } else if (h.scheme == io::kBfv) {
    const bfv::PublicKey pk = io::bfv_public(doc);
    const Coeffs m = padded(values, pk.params.degree());
    io::save(out_path, io::to_json(pk.params, bfv::encrypt(pk, m, rng)));
  } else {
    throw ParseError("unknown scheme '" + h.scheme + "'");
  }
}

void cmd_decrypt(const std::string& sk_path, const std::string& ct_path, const std::string& out_path,
                 bool quadratic) {
  const io::Json sk_doc = io::load(sk_path);
  const io::Json ct_doc = io::load(ct_path);
  const io::Header h = io::read_header(sk_doc);
  if (quadratic && h.scheme != io::kBfv) throw UsageError("--quadratic applies to bfv products only");
  if (h.scheme == io::kLwe) {
    const lwe::SecretKey sk = io::lwe_secret(sk_doc);
    const auto [params, ct] = io::lwe_ciphertext(ct_doc);
    if (!(params == sk.params)) throw ParamMismatch("ciphertext parameters differ from the key's");
    Coeffs m(1);
    m(0) = lwe::decrypt(sk, ct);
    write_message(out_path, m);
  } else if (h.scheme == io::kLpr) {
    const lpr::SecretKey sk = io::lpr_secret(sk_doc);
    const auto [params, ct] = io::lpr_ciphertext(ct_doc);
    if (!(params == sk.params)) throw ParamMismatch("ciphertext parameters differ from the key's");
    write_message(out_path, lpr::decrypt(sk, ct).coeffs());
  } else if (h.scheme == io::kBfv) {
    const bfv::SecretKey sk = io::bfv_secret(sk_doc);
    if (quadratic) {
      const auto [params, prod] = io::bfv_product(ct_doc);
      if (!(params == sk.params)) throw ParamMismatch("product parameters differ from the key's");
      write_message(out_path, bfv::decrypt_quadratic(sk, prod));
    } else {
      const auto [params, ct] = io::bfv_ciphertext(ct_doc);
      if (!(params == sk.params)) throw ParamMismatch("ciphertext parameters differ from the key's");
      write_message(out_path, bfv::decrypt(sk, ct));
    }
  } else {
    throw ParseError("unknown scheme '" + h.scheme + "'");
  }
}

// ---- eval ----

void cmd_eval(const std::string& op, const std::vector<std::string>& cts, const std::string& relin,
              const std::string& rk_path, const std::string& out_path) {
  if (cts.size() != 2) throw UsageError("--ct takes exactly two ciphertext files");
  const auto [pa, ca] = io::bfv_ciphertext(io::load(cts[0]));
  const auto [pb, cb] = io::bfv_ciphertext(io::load(cts[1]));
  if (!(pa == pb)) throw ParamMismatch("ciphertexts were made under different parameters");

  if (op == "add") {
    if (relin != "none") throw UsageError("--relin applies to --op mult only");
    io::save(out_path, io::to_json(pa, bfv::add(ca, cb)));
    return;
  }
  if (op != "mult") throw UsageError("--op must be add or mult");
  const bfv::Product prod = bfv::multiply(pa, ca, cb);
  if (relin == "none") {
    io::save(out_path, io::to_json(pa, prod));
    return;
  }
  if (rk_path.empty()) throw UsageError("--relin " + relin + " needs --rk");
  const io::Json rk_doc = io::load(rk_path);
  if (relin == "v1") {
    const bfv::RelinKeyV1 rk = io::bfv_relin_v1(rk_doc);
    if (!(rk.params == pa)) throw ParamMismatch("relin key parameters differ from the ciphertexts'");
    io::save(out_path, io::to_json(pa, bfv::relinearize_v1(prod, rk)));
  } else if (relin == "v2") {
    const bfv::RelinKeyV2 rk = io::bfv_relin_v2(rk_doc);
    if (!(rk.params == pa)) throw ParamMismatch("relin key parameters differ from the ciphertexts'");
    io::save(out_path, io::to_json(pa, bfv::relinearize_v2(prod, rk)));
  } else {
    throw UsageError("--relin must be v1, v2 or none");
  }
}

int code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e)) return kIo;
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice-based encryption toolkit: Regev LWE, LPR ring-LWE and BFV."};
  app.name(args.empty() ? "lattika" : args.front());
  app.require_subcommand(1);

  KeygenOptions kg;
  auto* keygen = app.add_subcommand("keygen", "Generate key files <prefix>.<role>.json");
  keygen->add_option("--scheme", kg.scheme, "lwe | lpr | bfv")->required();
  keygen->add_option("--out-prefix", kg.prefix, "Output path prefix")->required();
  keygen->add_option("--seed", kg.seed, "64 hex digits (fallback: LATTIKA_SEED)");
  kg.n.opt = keygen->add_option("--n", kg.n.value, "Dimension or ring degree");
  kg.q.opt = keygen->add_option("--q", kg.q.value, "Ciphertext modulus (odd)");
  kg.samples.opt = keygen->add_option("--N", kg.samples.value, "LWE sample count");
  kg.t.opt = keygen->add_option("--t", kg.t.value, "BFV plaintext modulus");
  kg.sigma.opt = keygen->add_option("--sigma", kg.sigma.value, "Error standard deviation");
  kg.base.opt = keygen->add_option("--T", kg.base.value, "BFV relin v1 base");
  kg.p.opt = keygen->add_option("--p", kg.p.value, "BFV relin v2 auxiliary modulus");
  kg.sigma2.opt = keygen->add_option("--sigma2", kg.sigma2.value, "BFV relin v2 error deviation");
  keygen->add_flag("--no-relin", kg.no_relin, "BFV: skip relinearization keys");

  std::string pk_path, msg_path, out_path, seed;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
  encrypt->add_option("--pk", pk_path, "Public key file")->required();
  encrypt->add_option("--message", msg_path, "Whitespace-separated integers")->required();
  encrypt->add_option("--out", out_path, "Ciphertext output")->required();
  encrypt->add_option("--seed", seed, "64 hex digits (fallback: LATTIKA_SEED)");

  std::string sk_path, ct_path;
  bool quadratic = false;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--sk", sk_path, "Secret key file")->required();
  decrypt->add_option("--ct", ct_path, "Ciphertext file")->required();
  decrypt->add_option("--out", out_path, "Message output")->required();
  decrypt->add_flag("--quadratic", quadratic, "Decrypt a BFV three-component product");

  std::string op, relin = "none", rk_path;
  std::vector<std::string> cts;
  auto* eval = app.add_subcommand("eval", "Homomorphic evaluation on two BFV ciphertexts");
  eval->add_option("--op", op, "add | mult")->required();
  eval->add_option("--ct", cts, "Two ciphertext files")->required()->expected(2);
  eval->add_option("--relin", relin, "v1 | v2 | none")->capture_default_str();
  eval->add_option("--rk", rk_path, "Relinearization key file");
  eval->add_option("--out", out_path, "Output file")->required();

  std::string topic;
  auto* demo = app.add_subcommand("demo", "Print and check worked examples");
  demo->add_option("topic", topic, "lattice | cyclotomic | switching | gauss")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("lattika");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (keygen->parsed()) {
      cmd_keygen(kg, out);
    } else if (encrypt->parsed()) {
      cmd_encrypt(pk_path, msg_path, out_path, seed);
    } else if (decrypt->parsed()) {
      cmd_decrypt(sk_path, ct_path, out_path, quadratic);
    } else if (eval->parsed()) {
      cmd_eval(op, cts, relin, rk_path, out_path);
    } else if (demo->parsed()) {
      return run_demo(topic, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e);
  }
  return kOk;
}

}  // namespace lattika::cli
