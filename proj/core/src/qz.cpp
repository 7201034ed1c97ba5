#include "mua/qz.hpp"

#include <algorithm>
#include <set>

namespace mua {

ExtNat ChoiceSeq::at(int pos) const {
  for (const auto& [p, v] : exceptions)
    if (p == pos) return v;
  return def;
}

ChoiceSeq make_choice_seq(ExtNat def,
                          std::vector<std::pair<int, ExtNat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ChoiceSeq seq;
  seq.def = def;
  for (const auto& [pos, value] : entries) {
    if (pos < 0) throw std::invalid_argument("choice sequence: negative position");
    if (!seq.exceptions.empty() && seq.exceptions.back().first == pos)
      throw std::invalid_argument("choice sequence: duplicate position " +
                                  std::to_string(pos));
    if (value != def) seq.exceptions.push_back({pos, value});
  }
  return seq;
}

namespace {

ExtNat parse_value(const std::string& tok, const std::string& spec) {
  if (tok == "inf") return ExtNat::infinity();
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("choice sequence '" + spec + "': bad value '" + tok + "'");
  return ExtNat(std::stoull(tok));
}

}  // namespace

ChoiceSeq parse_choice_seq(const std::string& spec) {
  const std::string prefix = "default=";
  if (spec.rfind(prefix, 0) != 0)
    throw ParseError("choice sequence '" + spec + "': expected 'default=...'");
  size_t semi = spec.find(';');
  std::string def_tok = spec.substr(prefix.size(),
                                    semi == std::string::npos
                                        ? std::string::npos
                                        : semi - prefix.size());
  ExtNat def = parse_value(def_tok, spec);
  std::vector<std::pair<int, ExtNat>> entries;
  if (semi != std::string::npos) {
    std::string rest = spec.substr(semi + 1);
    if (rest.empty())
      throw ParseError("choice sequence '" + spec + "': empty exception list");
    size_t start = 0;
    while (start <= rest.size()) {
      size_t comma = rest.find(',', start);
      std::string item = rest.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw ParseError("choice sequence '" + spec + "': expected idx:value, got '" +
                         item + "'");
      std::string idx_tok = item.substr(0, colon);
      if (idx_tok.empty() || idx_tok.size() > 9 ||
          !std::all_of(idx_tok.begin(), idx_tok.end(),
                       [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("choice sequence '" + spec + "': bad index '" + idx_tok +
                         "'");
      entries.push_back({std::stoi(idx_tok), parse_value(item.substr(colon + 1), spec)});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  try {
    return make_choice_seq(def, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + spec + "'");
  }
}

bool seq_equiv(const ChoiceSeq& k, const ChoiceSeq& k2) {
  // unequal defaults force infinitely many differences or an infinite
  // infinity-pattern mismatch
  if (k.def != k2.def) return false;
  std::set<int> positions;
  for (const auto& [p, v] : k.exceptions) positions.insert(p);
  for (const auto& [p, v] : k2.exceptions) positions.insert(p);
  for (int p : positions)
    if (k.at(p).is_infinite() != k2.at(p).is_infinite()) return false;
  return true;
}

bool seq_preceq(const ChoiceSeq& k, const ChoiceSeq& k2) {
  if (!seq_equiv(k, k2)) return false;
  std::set<int> positions;
  for (const auto& [p, v] : k.exceptions) positions.insert(p);
  for (const auto& [p, v] : k2.exceptions) positions.insert(p);
  for (int p : positions)
    if (!(k.at(p) <= k2.at(p))) return false;
  return true;
}

Distance qz_distance(const ChoiceSeq& k, const ChoiceSeq& k2) {
  if (k == k2) return Distance(0);
  if (!seq_equiv(k, k2)) return Distance::infinity();
  if (seq_preceq(k, k2) || seq_preceq(k2, k)) return Distance(1);
  return Distance(2);
}

Distance qz_diameter(const ChoiceSeq& k) {
  if (k.def.is_finite()) return Distance(2);  // infinitely many finite positions
  int finite = 0;
  for (const auto& [p, v] : k.exceptions)
    if (v.is_finite()) ++finite;
  if (finite == 0) return Distance(0);
  if (finite == 1) return Distance(1);
  return Distance(2);
}

}  // namespace mua
