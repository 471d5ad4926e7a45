#pragma once

#include <json.hpp>

#include "qcount/expansions.hpp"
#include "qcount/rational.hpp"

namespace qcount {

// JSON forms round-trip exactly:
//   {"rat":"p/q"}  {"dyadic":"j/2^k"}  {"cf":[...]}  {"bcf_head":[...]}
//   {"bits":"011"}  {"blocks":[...]}
// Expansion digits are emitted as JSON numbers and must fit in 64 bits.

inline nlohmann::json to_json(const Rational& x) { return {{"rat", x.str()}}; }

inline Rational rational_from_json(const nlohmann::json& j) {
  return Rational::parse(j.at("rat").get<std::string>());
}

inline nlohmann::json to_json(const Dyadic& d) { return {{"dyadic", d.str()}}; }

inline Dyadic dyadic_from_json(const nlohmann::json& j) {
  return Dyadic::parse(j.at("dyadic").get<std::string>());
}

inline nlohmann::json to_json(const CfExpansion& e) {
  auto digits = nlohmann::json::array();
  for (const Integer& m : e.digits()) digits.push_back(to_ulong_checked(m));
  return {{"cf", digits}};
}

inline CfExpansion cf_from_json(const nlohmann::json& j) {
  std::vector<Integer> digits;
  for (const auto& m : j.at("cf")) digits.emplace_back(m.get<unsigned long>());
  return CfExpansion(std::move(digits));
}

inline nlohmann::json to_json(const BcfExpansion& e) {
  auto digits = nlohmann::json::array();
  for (const Integer& a : e.head()) digits.push_back(to_ulong_checked(a));
  return {{"bcf_head", digits}};
}

inline BcfExpansion bcf_from_json(const nlohmann::json& j) {
  std::vector<Integer> head;
  for (const auto& a : j.at("bcf_head")) head.emplace_back(a.get<unsigned long>());
  return BcfExpansion(std::move(head));
}

inline nlohmann::json to_json(const BinaryWord& w) { return {{"bits", w.bits()}}; }

inline BinaryWord word_from_json(const nlohmann::json& j) {
  return BinaryWord(j.at("bits").get<std::string>());
}

inline nlohmann::json to_json(const BlockSequence& s) {
  auto ks = nlohmann::json::array();
  for (std::size_t k : s.blocks()) ks.push_back(k);
  return {{"blocks", ks}};
}

inline BlockSequence blocks_from_json(const nlohmann::json& j) {
  std::vector<std::size_t> ks;
  for (const auto& k : j.at("blocks")) ks.push_back(k.get<std::size_t>());
  return BlockSequence(std::move(ks));
}

}  // namespace qcount
