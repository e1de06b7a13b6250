// Copyright 2026 The Hyperion Desk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperion/chem/fcidump.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperion/common.hpp"

namespace hyperion::chem {

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

double parse_real(std::string token, int line_no) {
  for (char& c : token)
    if (c == 'd' || c == 'D') c = 'e';
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(v))
    throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": non-numeric value '" + token + "'");
  return v;
}

int parse_index(const std::string& token, int line_no) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": bad index '" + token + "'");
  return v;
}

// Parses "KEY=v1,v2,KEY2=..." into KEY -> first value.
std::map<std::string, std::string> parse_namelist(const std::string& body) {
  std::map<std::string, std::string> out;
  std::string cleaned;
  for (char c : body) cleaned += (c == '\n' || c == '\r' || c == '\t') ? ' ' : c;
  std::size_t pos = 0;
  while (true) {
    std::size_t eq = cleaned.find('=', pos);
    if (eq == std::string::npos) break;
    std::size_t key_end = eq;
    while (key_end > pos && cleaned[key_end - 1] == ' ') --key_end;
    std::size_t key_begin = key_end;
    while (key_begin > pos && (std::isalnum(static_cast<unsigned char>(cleaned[key_begin - 1])) ||
                               cleaned[key_begin - 1] == '_'))
      --key_begin;
    std::string key = cleaned.substr(key_begin, key_end - key_begin);
    if (key.empty()) throw ParseError("FCIDUMP header: '=' without a key");
    std::size_t v = eq + 1;
    while (v < cleaned.size() && cleaned[v] == ' ') ++v;
    std::size_t v_end = v;
    while (v_end < cleaned.size() && cleaned[v_end] != ',' && cleaned[v_end] != ' ') ++v_end;
    out[key] = cleaned.substr(v, v_end - v);
    pos = v_end;
  }
  return out;
}

int header_int(const std::map<std::string, std::string>& kv, const std::string& key, bool required,
               int fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (required) throw ParseError("FCIDUMP header: missing " + key);
    return fallback;
  }
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("FCIDUMP header: " + key + " is not an integer ('" + it->second + "')");
  }
}

class SlotWriter {
 public:
  explicit SlotWriter(std::vector<double>& data) : data_(data), set_(data.size(), false) {}

  void put(std::size_t slot, double value, int line_no) {
    if (set_[slot]) {
      if (std::abs(data_[slot] - value) > 1e-10)
        throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                         ": inconsistent duplicate integral");
      return;
    }
    set_[slot] = true;
    data_[slot] = value;
  }

 private:
  std::vector<double>& data_;
  std::vector<bool> set_;
};

}  // namespace

void IntegralSet::validate() const {
  if (norb < 1) throw ContractError("IntegralSet: norb must be >= 1");
  if (nelec < 0 || nelec > 2 * norb) throw ContractError("IntegralSet: nelec out of range");
  if ((nelec + ms2) % 2 != 0 || std::abs(ms2) > nelec)
    throw ContractError("IntegralSet: MS2 inconsistent with NELEC");
  for (int p = 0; p < norb; ++p)
    for (int q = 0; q < norb; ++q)
      if (std::abs(h(p, q) - h(q, p)) > 1e-12) throw ContractError("IntegralSet: one_body not symmetric");
  for (int p = 0; p < norb; ++p)
    for (int q = 0; q < norb; ++q)
      for (int r = 0; r < norb; ++r)
        for (int s = 0; s < norb; ++s) {
          double v = eri(p, q, r, s);
          std::array<double, 7> others = {eri(q, p, r, s), eri(p, q, s, r), eri(q, p, s, r),
                                          eri(r, s, p, q), eri(s, r, p, q), eri(r, s, q, p),
                                          eri(s, r, q, p)};
          for (double o : others)
            if (std::abs(o - v) > 1e-12) throw ContractError("IntegralSet: two_body lacks 8-fold symmetry");
        }
}

IntegralSet parse_fcidump(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string up = upper(text);

  std::size_t start = up.find("&FCI");
  if (start == std::string::npos) throw ParseError("FCIDUMP header: missing &FCI");
  std::size_t end_amp = up.find("&END", start);
  std::size_t end_slash = up.find('/', start);
  std::size_t header_end = std::min(end_amp, end_slash);
  if (header_end == std::string::npos) throw ParseError("FCIDUMP header: missing &END or /");
  std::size_t body_start = header_end + (header_end == end_amp ? 4 : 1);

  auto kv = parse_namelist(up.substr(start + 4, header_end - start - 4));
  IntegralSet ints;
  ints.norb = header_int(kv, "NORB", true, 0);
  ints.nelec = header_int(kv, "NELEC", true, 0);
  ints.ms2 = header_int(kv, "MS2", false, 0);
  if (ints.norb < 1 || ints.norb > 31) throw ParseError("FCIDUMP header: NORB out of range");
  if (ints.nelec < 0 || ints.nelec > 2 * ints.norb) throw ParseError("FCIDUMP header: NELEC out of range");
  if ((ints.nelec + ints.ms2) % 2 != 0 || std::abs(ints.ms2) > ints.nelec)
    throw ParseError("FCIDUMP header: MS2 inconsistent with NELEC");

  const auto n = static_cast<std::size_t>(ints.norb);
  ints.one_body.assign(n * n, 0.0);
  ints.two_body.assign(n * n * n * n, 0.0);
  SlotWriter one(ints.one_body);
  SlotWriter two(ints.two_body);
  bool core_set = false;

  // Line numbers are counted from the start of the file.
  int line_no = 1;
  for (std::size_t i = 0; i < body_start; ++i)
    if (text[i] == '\n') ++line_no;
  std::istringstream body(text.substr(body_start));
  std::string line;
  bool first = true;
  while (std::getline(body, line)) {
    if (!first) ++line_no;
    first = false;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5)
      throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": expected 'value i j k l'");
    double v = parse_real(tok[0], line_no);
    std::array<int, 4> idx{};
    for (int k = 0; k < 4; ++k) {
      idx[static_cast<std::size_t>(k)] = parse_index(tok[static_cast<std::size_t>(k + 1)], line_no);
      if (idx[static_cast<std::size_t>(k)] < 0 || idx[static_cast<std::size_t>(k)] > ints.norb)
        throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": index out of [0, norb]");
    }
    auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core_set && std::abs(ints.core_energy - v) > 1e-10)
        throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": inconsistent core energy");
      ints.core_energy = v;
      core_set = true;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy, not needed
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      int p = i - 1, q = j - 1;
      one.put(static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q), v, line_no);
      one.put(static_cast<std::size_t>(q) * n + static_cast<std::size_t>(p), v, line_no);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      auto slot = [n](int p, int q, int r, int s) {
        return ((static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)) * n +
                static_cast<std::size_t>(r)) * n + static_cast<std::size_t>(s);
      };
      int p = i - 1, q = j - 1, r = k - 1, s = l - 1;
      for (auto [a, b, c, d] : std::array<std::array<int, 4>, 8>{{{p, q, r, s},
                                                                   {q, p, r, s},
                                                                   {p, q, s, r},
                                                                   {q, p, s, r},
                                                                   {r, s, p, q},
                                                                   {s, r, p, q},
                                                                   {r, s, q, p},
                                                                   {s, r, q, p}}})
        two.put(slot(a, b, c, d), v, line_no);
    } else {
      throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": unrecognised index pattern");
    }
  }
  return ints;
}

IntegralSet parse_fcidump_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

IntegralSet read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open FCIDUMP '" + path.string() + "'");
  return parse_fcidump(in);
}

}  // namespace hyperion::chem
