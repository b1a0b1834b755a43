#include "samuel/ring_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Field parse_field_decl(const std::string& rest, int line) {
  auto words = split_ws(rest);
  if (words.size() == 1 && (words[0] == "Q" || words[0] == "QQ")) return Field::rationals();
  if (words.size() == 2 && words[0] == "Fp") {
    try {
      unsigned long p = std::stoul(words[1]);
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line);
    } catch (const std::exception&) {
      throw ParseError("bad prime '" + words[1] + "'", line);
    }
  }
  throw ParseError("field must be 'Q' or 'Fp <prime>'", line);
}

void validate_polynomials(const RingSpec& spec, const std::vector<std::string>& polys, int line) {
  if (spec.vars.empty()) throw ParseError("'vars' must be declared before polynomials", line);
  RingPtr ring = PolyRing::make(spec.vars);
  for (const auto& p : polys) {
    try {
      parse_polynomial(p, ring);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }
}

// Splits "KEY rest" on the first run of whitespace.
std::pair<std::string, std::string> split_key(const std::string& line) {
  std::size_t k = 0;
  while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
  return {line.substr(0, k), trim(std::string_view(line).substr(k))};
}

std::vector<RingSpec> parse_blocks(std::string_view text, bool corpus) {
  std::vector<RingSpec> specs;
  if (!corpus) specs.emplace_back();
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [key, rest] = split_key(line);

    if (key == "instance") {
      if (!corpus) throw ParseError("'instance' is only valid in corpus files", lineno);
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos)
        throw ParseError("instance needs a single-word name", lineno);
      for (const auto& s : specs)
        if (s.name == rest) throw ParseError("duplicate instance '" + rest + "'", lineno);
      specs.emplace_back();
      specs.back().name = rest;
      specs.back().line = lineno;
      continue;
    }
    if (specs.empty()) throw ParseError("declaration before the first 'instance' line", lineno);
    RingSpec& spec = specs.back();

    if (key == "field") {
      spec.field = parse_field_decl(rest, lineno);
    } else if (key == "vars") {
      if (!spec.vars.empty()) throw ParseError("vars declared twice", lineno);
      auto vars = split_ws(rest);
      if (vars.empty()) throw ParseError("vars needs at least one name", lineno);
      for (const auto& v : vars) {
        bool ok = std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_';
        for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError("bad variable name '" + v + "'", lineno);
      }
      try {
        PolyRing::make(vars);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), lineno);
      }
      spec.vars = std::move(vars);
    } else if (key == "relations") {
      if (rest.empty()) continue;
      auto rels = split_top_level(rest, ',');
      for (auto& r : rels)
        if (r.empty()) throw ParseError("empty relation", lineno);
      validate_polynomials(spec, rels, lineno);
      spec.relations.insert(spec.relations.end(), rels.begin(), rels.end());
    } else if (key == "ideal") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'ideal NAME = gens'", lineno);
      std::string name = trim(std::string_view(rest).substr(0, eq));
      if (name.empty()) throw ParseError("ideal needs a name", lineno);
      for (const auto& [n, g] : spec.ideals)
        if (n == name) throw ParseError("ideal '" + name + "' declared twice", lineno);
      std::vector<std::string> gens;
      for (auto& g : split_top_level(std::string_view(rest).substr(eq + 1), ','))
        if (!g.empty()) gens.push_back(g);
      validate_polynomials(spec, gens, lineno);
      spec.ideals.emplace_back(name, std::move(gens));
    } else if (key == "expect") {
      if (!corpus) throw ParseError("'expect' is only valid in corpus files", lineno);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'expect KEY = VALUE'", lineno);
      std::string k = trim(std::string_view(rest).substr(0, eq));
      std::string v = trim(std::string_view(rest).substr(eq + 1));
      if (k.empty() || v.empty()) throw ParseError("expect needs a key and a value", lineno);
      spec.expects[k] = v;
    } else {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  for (const auto& s : specs)
    if (s.vars.empty())
      throw ParseError(s.name.empty() ? std::string("missing 'vars' declaration")
                                      : "instance '" + s.name + "' has no 'vars' declaration",
                       s.line);
  return specs;
}

}  // namespace

const std::vector<std::string>* RingSpec::ideal(std::string_view n) const {
  for (const auto& [name, gens] : ideals)
    if (name == n) return &gens;
  return nullptr;
}

RingSpec parse_ring_file(std::string_view text) { return parse_blocks(text, false).front(); }

std::vector<RingSpec> parse_corpus_file(std::string_view text) { return parse_blocks(text, true); }

LocalRingPtr build_ring(const RingSpec& spec, std::optional<Field> field_override) {
  RingPtr ambient = PolyRing::make(spec.vars, field_override.value_or(spec.field));
  std::vector<Polynomial> rel;
  for (const auto& r : spec.relations) rel.push_back(parse_polynomial(r, ambient));
  return LocalRing::make(ambient, std::move(rel));
}

Field parse_field_flag(std::string_view text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.starts_with("fp:")) {
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(std::string(text.substr(3)))));
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("--field must be 'q' or 'fp:P'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace samuel
