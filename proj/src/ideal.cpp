#include "segre/ideal.hpp"

#include "segre/newton.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace segre {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// factor := 'x' INT ('^' INT)?
void parse_factor(const std::string& tok, std::map<int, Int>& exps) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
    throw ParseError("malformed monomial factor '" + tok + "'");
  std::string rest = tok.substr(1);
  std::string idx_part = rest, exp_part = "1";
  if (auto caret = rest.find('^'); caret != std::string::npos) {
    idx_part = rest.substr(0, caret);
    exp_part = rest.substr(caret + 1);
  }
  idx_part = trim(idx_part);
  exp_part = trim(exp_part);
  if (!is_integer_token(idx_part) || idx_part[0] == '-' || idx_part[0] == '+')
    throw ParseError("malformed variable index in '" + tok + "'");
  if (!is_integer_token(exp_part))
    throw ParseError("malformed exponent in '" + tok + "'");
  Int exponent(exp_part);
  if (exponent < 0) throw ParseError("negative exponent in '" + tok + "'");
  int idx = std::stoi(idx_part);
  if (idx < 1) throw ParseError("variable index must be >= 1 in '" + tok + "'");
  exps[idx - 1] += exponent;
}

struct RawTerm {
  bool is_row = false;
  IVec row;                 // introw
  std::map<int, Int> mono;  // sparse monomial exponents
  bool is_unit = false;     // the empty product "1"
};

RawTerm parse_term(const std::string& term) {
  RawTerm out;
  std::istringstream is(term);
  std::vector<std::string> words;
  std::string w;
  while (is >> w) words.push_back(w);
  if (words.empty()) throw ParseError("empty term in ideal input");

  bool all_ints = true;
  for (const auto& word : words)
    if (!is_integer_token(word)) all_ints = false;

  if (all_ints) {
    if (words.size() == 1 && words[0] == "1") {
      out.is_unit = true;  // the empty product, not a length-1 row
      return out;
    }
    out.is_row = true;
    for (const auto& word : words) {
      Int v(word);
      if (v < 0) throw ParseError("negative exponent in row '" + term + "'");
      out.row.push_back(v);
    }
    return out;
  }

  // monomial := factor ('*' factor)*
  std::string joined;
  for (const auto& word : words) joined += word;
  for (const auto& tok : split(joined, '*')) {
    std::string t = trim(tok);
    if (t == "1") continue;
    if (t.empty()) throw ParseError("malformed monomial '" + term + "'");
    parse_factor(t, out.mono);
  }
  if (out.mono.empty()) out.is_unit = true;
  return out;
}

}  // namespace

MonomialIdealSpec make_spec(int n, std::vector<IVec> generators) {
  if (n < 1) throw ParseError("variable count must be >= 1");
  if (generators.empty()) throw ParseError("at least one generator required");
  MonomialIdealSpec spec;
  spec.n = n;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw ParseError("generator length does not match variable count");
    for (const Int& e : g)
      if (e < 0) throw ParseError("negative exponent in generator");
    if (is_zero_vec(g)) spec.unit_ideal = true;
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  spec.generators = std::move(generators);
  return spec;
}

MonomialIdealSpec parse_ideal(const std::string& text, std::optional<int> n) {
  // Terms are separated by commas or newlines; rows by whitespace.
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '\n', ',');
  std::replace(normalized.begin(), normalized.end(), ';', ',');

  std::vector<RawTerm> terms;
  for (const auto& piece : split(normalized, ',')) {
    if (trim(piece).empty()) continue;
    terms.push_back(parse_term(piece));
  }
  if (terms.empty()) throw ParseError("empty ideal input");

  int row_len = 0;
  int max_index = 0;
  for (const auto& t : terms) {
    if (t.is_row) {
      int len = static_cast<int>(t.row.size());
      if (row_len == 0) row_len = len;
      if (len != row_len) throw ParseError("inconsistent row lengths");
    } else {
      for (const auto& [idx, e] : t.mono)
        max_index = std::max(max_index, idx + 1);
    }
  }
  int nn = n.value_or(std::max({row_len, max_index, 1}));
  if (row_len > 0 && row_len != nn)
    throw ParseError("inconsistent row lengths");
  if (max_index > nn)
    throw ParseError("variable index exceeds variable count");

  std::vector<IVec> gens;
  for (const auto& t : terms) {
    if (t.is_row) {
      gens.push_back(t.row);
    } else {
      IVec g(nn, 0);
      for (const auto& [idx, e] : t.mono) g[idx] = e;
      gens.push_back(std::move(g));
    }
  }
  return make_spec(nn, std::move(gens));
}

MonomialIdealSpec minimalize(const MonomialIdealSpec& spec) {
  if (spec.unit_ideal) return spec;
  NewtonPolyhedron poly = build_polyhedron(spec);
  MonomialIdealSpec out = spec;
  out.generators = poly.vertices;
  return out;
}

MonomialIdealSpec permute_variables(const MonomialIdealSpec& spec,
                                    const std::vector<int>& perm) {
  std::vector<IVec> gens;
  gens.reserve(spec.generators.size());
  for (const IVec& g : spec.generators) {
    IVec p(spec.n);
    for (int i = 0; i < spec.n; ++i) p[perm[i]] = g[i];
    gens.push_back(std::move(p));
  }
  return make_spec(spec.n, std::move(gens));
}

}  // namespace segre
