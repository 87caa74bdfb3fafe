#include "lattika/serialize.hpp"

#include <fstream>
#include <sstream>

#include "lattika/errors.hpp"

namespace lattika::io {

namespace {

Json envelope(std::string_view scheme, std::string_view role, Json params, Json payload) {
  Json doc;
  doc["format_version"] = std::string(kFormatVersion);
  doc["scheme"] = std::string(scheme);
  doc["role"] = std::string(role);
  doc["params"] = std::move(params);
  doc["payload"] = std::move(payload);
  return doc;
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

i128 int_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a decimal string");
  return parse_i128(v.get<std::string>());
}

std::int64_t int64_field(const Json& obj, const char* key) {
  const i128 v = int_field(obj, key);
  if (v > INT64_MAX || v < INT64_MIN) throw ParseError(std::string("field '") + key + "' out of range");
  return static_cast<std::int64_t>(v);
}

std::size_t size_field(const Json& obj, const char* key) {
  const i128 v = int_field(obj, key);
  if (v < 0 || v > (static_cast<i128>(1) << 40)) throw ParseError(std::string("field '") + key + "' out of range");
  return static_cast<std::size_t>(v);
}

double real_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

GaussianParams gauss_field(const Json& obj, const char* sigma_key) {
  const double tail = obj.contains("tail_cut") ? real_field(obj, "tail_cut") : 10.0;
  return GaussianParams(real_field(obj, sigma_key), tail);
}

Json int_array(std::span<const std::int64_t> xs) {
  Json arr = Json::array();
  for (const std::int64_t x : xs) arr.push_back(std::to_string(x));
  return arr;
}

Json int_array(const Coeffs& xs) {
  return int_array(std::span<const std::int64_t>(xs.data(), static_cast<std::size_t>(xs.size())));
}

// Parses a payload array, checking its length and that every entry is a
// symmetric representative mod m.
Coeffs read_array(const Json& payload, const char* key, std::size_t len, std::int64_t m) {
  const Json& arr = field(payload, key);
  if (!arr.is_array()) throw ParseError(std::string("payload '") + key + "' must be an array");
  if (arr.size() != len) {
    throw ParseError(std::string("payload '") + key + "' has " + std::to_string(arr.size()) +
                     " entries, expected " + std::to_string(len));
  }
  Coeffs out(static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < len; ++i) {
    if (!arr[i].is_string()) throw ParseError(std::string("payload '") + key + "' entries must be strings");
    const i128 v = parse_i128(arr[i].get<std::string>());
    if (2 * v >= m || 2 * v < -static_cast<i128>(m)) {
      throw ParseError(std::string("payload '") + key + "' entry " + std::to_string(i) +
                       " outside the symmetric range");
    }
    out(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(v);
  }
  return out;
}

RingElement read_ring(const Json& payload, const char* key, const RingParams& ring) {
  return RingElement(ring, read_array(payload, key, ring.degree(), ring.modulus().value()));
}

Json ring_array(const RingElement& x) { return int_array(x.span()); }

const Json& payload_of(const Json& doc) { return field(doc, "payload"); }
const Json& params_of(const Json& doc) { return field(doc, "params"); }

}  // namespace

Header read_header(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document is not a JSON object");
  const Json& version = field(doc, "format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw ParseError("unsupported format_version");
  }
  const Json& scheme = field(doc, "scheme");
  const Json& role = field(doc, "role");
  if (!scheme.is_string() || !role.is_string()) throw ParseError("scheme and role must be strings");
  field(doc, "params");
  field(doc, "payload");
  return {scheme.get<std::string>(), role.get<std::string>()};
}

void expect(const Json& doc, std::string_view scheme, std::string_view role) {
  const Header h = read_header(doc);
  if (h.scheme != scheme || h.role != role) {
    throw RoleMismatch("expected a " + std::string(scheme) + " " + std::string(role) + " file, got " +
                       h.scheme + " " + h.role);
  }
}

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(1) + "\n"; }

void save(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << dump(doc);
  if (!out) throw IoError("write failed for " + path.string());
}

// ---- parameters ----

Json params_json(const lwe::LweParams& p) {
  return Json{{"n", std::to_string(p.n)},
              {"q", std::to_string(p.q.value())},
              {"N", std::to_string(p.samples)},
              {"sigma", p.gauss.sigma()},
              {"tail_cut", p.gauss.tail_cut()}};
}

Json params_json(const lpr::LprParams& p) {
  return Json{{"n", std::to_string(p.ring.degree())},
              {"q", std::to_string(p.ring.modulus().value())},
              {"sigma", p.gauss.sigma()},
              {"tail_cut", p.gauss.tail_cut()}};
}

Json params_json(const bfv::BfvParams& p) {
  Json j{{"n", std::to_string(p.degree())},
         {"q", std::to_string(p.modulus().value())},
         {"t", std::to_string(p.t())},
         {"sigma", p.gauss().sigma()},
         {"tail_cut", p.gauss().tail_cut()}};
  if (p.relin_base()) j["T"] = std::to_string(*p.relin_base());
  if (p.relin_v2()) {
    j["p"] = std::to_string(p.relin_v2()->p);
    j["sigma2"] = p.relin_v2()->gauss.sigma();
    j["tail_cut2"] = p.relin_v2()->gauss.tail_cut();
  }
  return j;
}

lwe::LweParams lwe_params(const Json& doc) {
  const Json& j = params_of(doc);
  return lwe::LweParams(size_field(j, "n"), Modulus(int64_field(j, "q")), size_field(j, "N"),
                        gauss_field(j, "sigma"));
}

lpr::LprParams lpr_params(const Json& doc) {
  const Json& j = params_of(doc);
  return {RingParams(size_field(j, "n"), Modulus(int64_field(j, "q"))), gauss_field(j, "sigma")};
}

bfv::BfvParams bfv_params(const Json& doc) {
  const Json& j = params_of(doc);
  std::optional<std::int64_t> base;
  if (j.contains("T")) base = int64_field(j, "T");
  std::optional<bfv::RelinV2Params> v2;
  if (j.contains("p")) {
    const double tail2 = j.contains("tail_cut2") ? real_field(j, "tail_cut2") : 10.0;
    v2 = bfv::RelinV2Params{int64_field(j, "p"), GaussianParams(real_field(j, "sigma2"), tail2)};
  }
  return bfv::BfvParams(RingParams(size_field(j, "n"), Modulus(int64_field(j, "q"))),
                        int64_field(j, "t"), gauss_field(j, "sigma"), base, v2);
}

// ---- Regev ----

Json to_json(const lwe::SecretKey& k) {
  return envelope(kLwe, "secret", params_json(k.params), Json{{"s", int_array(k.s)}});
}

Json to_json(const lwe::PublicKey& k) {
  return envelope(kLwe, "public", params_json(k.params),
                  Json{{"P", int_array(std::span<const std::int64_t>(k.p.data(), static_cast<std::size_t>(k.p.size())))}});
}

Json to_json(const lwe::LweParams& p, const lwe::Ciphertext& c) {
  return envelope(kLwe, "ciphertext", params_json(p), Json{{"c", int_array(c.c)}});
}

lwe::SecretKey lwe_secret(const Json& doc) {
  expect(doc, kLwe, "secret");
  const lwe::LweParams p = lwe_params(doc);
  Coeffs s = read_array(payload_of(doc), "s", p.n + 1, p.q.value());
  if (s(0) != 1) throw ParseError("secret key must start with 1");
  return {p, std::move(s)};
}

lwe::PublicKey lwe_public(const Json& doc) {
  expect(doc, kLwe, "public");
  const lwe::LweParams p = lwe_params(doc);
  const auto rows = static_cast<Eigen::Index>(p.samples);
  const auto cols = static_cast<Eigen::Index>(p.n + 1);
  const Coeffs flat = read_array(payload_of(doc), "P", p.samples * (p.n + 1), p.q.value());
  CoeffMatrix m = Eigen::Map<const CoeffMatrix>(flat.data(), rows, cols);
  return {p, std::move(m)};
}

std::pair<lwe::LweParams, lwe::Ciphertext> lwe_ciphertext(const Json& doc) {
  expect(doc, kLwe, "ciphertext");
  const lwe::LweParams p = lwe_params(doc);
  return {p, lwe::Ciphertext{read_array(payload_of(doc), "c", p.n + 1, p.q.value())}};
}

// ---- LPR ----

Json to_json(const lpr::SecretKey& k) {
  return envelope(kLpr, "secret", params_json(k.params), Json{{"s", ring_array(k.s)}});
}

Json to_json(const lpr::PublicKey& k) {
  return envelope(kLpr, "public", params_json(k.params),
                  Json{{"b", ring_array(k.b)}, {"a", ring_array(k.a)}});
}

Json to_json(const lpr::LprParams& p, const lpr::Ciphertext& c) {
  return envelope(kLpr, "ciphertext", params_json(p),
                  Json{{"u", ring_array(c.u)}, {"v", ring_array(c.v)}});
}

lpr::SecretKey lpr_secret(const Json& doc) {
  expect(doc, kLpr, "secret");
  const lpr::LprParams p = lpr_params(doc);
  return {p, read_ring(payload_of(doc), "s", p.ring)};
}

lpr::PublicKey lpr_public(const Json& doc) {
  expect(doc, kLpr, "public");
  const lpr::LprParams p = lpr_params(doc);
  return {p, read_ring(payload_of(doc), "b", p.ring), read_ring(payload_of(doc), "a", p.ring)};
}

std::pair<lpr::LprParams, lpr::Ciphertext> lpr_ciphertext(const Json& doc) {
  expect(doc, kLpr, "ciphertext");
  const lpr::LprParams p = lpr_params(doc);
  return {p, lpr::Ciphertext{read_ring(payload_of(doc), "u", p.ring),
                             read_ring(payload_of(doc), "v", p.ring)}};
}

// ---- BFV ----

namespace {

Json ladder_array(const std::vector<RingElement>& xs) {
  Json arr = Json::array();
  for (const RingElement& x : xs) {
    for (const std::int64_t c : x.span()) arr.push_back(std::to_string(c));
  }
  return arr;
}

std::vector<RingElement> read_ladder(const Json& payload, const char* key, const RingParams& ring,
                                     std::size_t count) {
  const std::size_t n = ring.degree();
  const Coeffs flat = read_array(payload, key, count * n, ring.modulus().value());
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.emplace_back(ring, Coeffs(flat.segment(static_cast<Eigen::Index>(k * n), static_cast<Eigen::Index>(n))));
  }
  return out;
}

}  // namespace

Json to_json(const bfv::SecretKey& k) {
  return envelope(kBfv, "secret", params_json(k.params), Json{{"s", ring_array(k.s)}});
}

Json to_json(const bfv::PublicKey& k) {
  return envelope(kBfv, "public", params_json(k.params),
                  Json{{"b", ring_array(k.b)}, {"a", ring_array(k.a)}});
}

Json to_json(const bfv::RelinKeyV1& k) {
  return envelope(kBfv, "relin-v1", params_json(k.params),
                  Json{{"b", ladder_array(k.b)}, {"a", ladder_array(k.a)}});
}

Json to_json(const bfv::RelinKeyV2& k) {
  return envelope(kBfv, "relin-v2", params_json(k.params),
                  Json{{"b", ring_array(k.b)}, {"a", ring_array(k.a)}});
}

Json to_json(const bfv::BfvParams& p, const bfv::Ciphertext& c) {
  return envelope(kBfv, "ciphertext", params_json(p),
                  Json{{"u", ring_array(c.u)}, {"v", ring_array(c.v)}});
}

Json to_json(const bfv::BfvParams& p, const bfv::Product& c) {
  return envelope(kBfv, "product", params_json(p),
                  Json{{"h0", ring_array(c.h0)}, {"h1", ring_array(c.h1)}, {"h2", ring_array(c.h2)}});
}

bfv::SecretKey bfv_secret(const Json& doc) {
  expect(doc, kBfv, "secret");
  const bfv::BfvParams p = bfv_params(doc);
  RingElement s = read_ring(payload_of(doc), "s", p.ring());
  for (const std::int64_t c : s.span()) {
    if (c != 0 && c != 1) throw ParseError("bfv secret key must be binary");
  }
  return {p, std::move(s)};
}

bfv::PublicKey bfv_public(const Json& doc) {
  expect(doc, kBfv, "public");
  const bfv::BfvParams p = bfv_params(doc);
  return {p, read_ring(payload_of(doc), "b", p.ring()), read_ring(payload_of(doc), "a", p.ring())};
}

bfv::RelinKeyV1 bfv_relin_v1(const Json& doc) {
  expect(doc, kBfv, "relin-v1");
  const bfv::BfvParams p = bfv_params(doc);
  if (!p.relin_base()) throw ParseError("relin-v1 file lacks the base T");
  const auto count = static_cast<std::size_t>(p.relin_levels()) + 1;
  return {p, *p.relin_base(), read_ladder(payload_of(doc), "b", p.ring(), count),
          read_ladder(payload_of(doc), "a", p.ring(), count)};
}

bfv::RelinKeyV2 bfv_relin_v2(const Json& doc) {
  expect(doc, kBfv, "relin-v2");
  const bfv::BfvParams p = bfv_params(doc);
  if (!p.relin_v2()) throw ParseError("relin-v2 file lacks the auxiliary modulus p");
  return {p, p.relin_v2()->p, read_ring(payload_of(doc), "b", p.pq_ring()),
          read_ring(payload_of(doc), "a", p.pq_ring())};
}

std::pair<bfv::BfvParams, bfv::Ciphertext> bfv_ciphertext(const Json& doc) {
  expect(doc, kBfv, "ciphertext");
  const bfv::BfvParams p = bfv_params(doc);
  return {p, bfv::Ciphertext{read_ring(payload_of(doc), "u", p.ring()),
                             read_ring(payload_of(doc), "v", p.ring())}};
}

std::pair<bfv::BfvParams, bfv::Product> bfv_product(const Json& doc) {
  expect(doc, kBfv, "product");
  const bfv::BfvParams p = bfv_params(doc);
  return {p, bfv::Product{read_ring(payload_of(doc), "h0", p.ring()),
                          read_ring(payload_of(doc), "h1", p.ring()),
                          read_ring(payload_of(doc), "h2", p.ring())}};
}

}  // namespace lattika::io
