#pragma once

// JSON documents for keys and ciphertexts:
//   { "format_version": "1", "scheme": ..., "role": ..., "params": {...},
//     "payload": { name: [decimal strings] } }
// Integers are decimal strings so values near 2^62 survive any JSON reader.
// Matrices and relin ladders are flattened row-major.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "lattika/bfv.hpp"
#include "lattika/lpr.hpp"
#include "lattika/lwe.hpp"

namespace lattika::io {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kLwe = "lwe-regev";
inline constexpr std::string_view kLpr = "rlwe-lpr";
inline constexpr std::string_view kBfv = "bfv";

struct Header {
  std::string scheme;
  std::string role;
};

/// Throws ParseError for a missing or malformed envelope.
Header read_header(const Json& doc);
/// Throws RoleMismatch unless the document has this scheme and role.
void expect(const Json& doc, std::string_view scheme, std::string_view role);

Json load(const std::filesystem::path& path);  // IoError, ParseError
void save(const std::filesystem::path& path, const Json& doc);  // IoError
std::string dump(const Json& doc);

Json params_json(const lwe::LweParams& p);
Json params_json(const lpr::LprParams& p);
Json params_json(const bfv::BfvParams& p);
lwe::LweParams lwe_params(const Json& doc);
lpr::LprParams lpr_params(const Json& doc);
bfv::BfvParams bfv_params(const Json& doc);

Json to_json(const lwe::SecretKey& k);
Json to_json(const lwe::PublicKey& k);
Json to_json(const lwe::LweParams& p, const lwe::Ciphertext& c);
lwe::SecretKey lwe_secret(const Json& doc);
lwe::PublicKey lwe_public(const Json& doc);
std::pair<lwe::LweParams, lwe::Ciphertext> lwe_ciphertext(const Json& doc);

Json to_json(const lpr::SecretKey& k);
Json to_json(const lpr::PublicKey& k);
Json to_json(const lpr::LprParams& p, const lpr::Ciphertext& c);
lpr::SecretKey lpr_secret(const Json& doc);
lpr::PublicKey lpr_public(const Json& doc);
std::pair<lpr::LprParams, lpr::Ciphertext> lpr_ciphertext(const Json& doc);

Json to_json(const bfv::SecretKey& k);
Json to_json(const bfv::PublicKey& k);
Json to_json(const bfv::RelinKeyV1& k);
Json to_json(const bfv::RelinKeyV2& k);
Json to_json(const bfv::BfvParams& p, const bfv::Ciphertext& c);
Json to_json(const bfv::BfvParams& p, const bfv::Product& c);
bfv::SecretKey bfv_secret(const Json& doc);
bfv::PublicKey bfv_public(const Json& doc);
bfv::RelinKeyV1 bfv_relin_v1(const Json& doc);
bfv::RelinKeyV2 bfv_relin_v2(const Json& doc);
std::pair<bfv::BfvParams, bfv::Ciphertext> bfv_ciphertext(const Json& doc);
std::pair<bfv::BfvParams, bfv::Product> bfv_product(const Json& doc);

}  // namespace lattika::io
