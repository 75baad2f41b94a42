#pragma once

// Text formats: clique databases, class lists and point configurations.
//
// Clique database:
//   # weights=1,2
//   # size=10
//   # required=<class>;<class>
//   # generator=<tool version>
//   <class>;<class>;...      one clique per line, classes as "a b1 .. b8"
// Classes within a line and lines within the file are in canonical
// (lexicographic) order, which is also class index order.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1/plane.hpp"
#include "dp1/weylgraph.hpp"

namespace dp1 {

inline constexpr const char* kToolVersion = "dp1 0.3.0";

struct FormatError : std::runtime_error {
  FormatError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace detail

inline std::string clique_line(std::span<const ClassId> k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ";" : "") + to_string(all_classes()[k[i]]);
  return s;
}

/// Parses "<class>;<class>;..." into a sorted clique; throws invalid_argument.
inline Clique parse_clique_line(const std::string& text) {
  Clique k;
  for (const auto& part : detail::split(text, ';')) {
    if (part.empty()) throw std::invalid_argument("empty class entry");
    k.push_back(require_index(parse_class(part)));
  }
  return k;
}

// ---------------------------------------------------------------------------
// Clique databases.

struct CliqueDbHeader {
  WeightSet weights = weight_set({1, 2});
  int size = 10;
  Clique required;
  std::string generator = kToolVersion;
};

struct CliqueDb {
  CliqueDbHeader header;
  std::vector<Clique> cliques;
};

inline void write_clique_db(std::ostream& out, const CliqueDbHeader& h, const std::vector<Clique>& cliques) {
  out << "# weights=" << to_string(h.weights) << "\n";
  out << "# size=" << h.size << "\n";
  out << "# required=" << clique_line(h.required) << "\n";
  out << "# generator=" << h.generator << "\n";
  for (const auto& k : cliques) out << clique_line(k) << "\n";
}

/// Reads a database and checks it: every header present, every line a
/// sorted clique of the declared size and weights containing the required
/// classes, lines strictly increasing.
inline CliqueDb read_clique_db(std::istream& in, const std::string& source = "<input>") {
  CliqueDb db;
  bool seen_w = false, seen_s = false, seen_r = false, seen_g = false;
  const auto& g = WeightedGraph::instance();
  std::string text;
  std::size_t ln = 0;
  while (std::getline(in, text)) {
    ++ln;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) throw FormatError(source, ln, "empty line");
    if (text[0] == '#') {
      if (!db.cliques.empty()) throw FormatError(source, ln, "header after data");
      const std::string body = detail::trim(text.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw FormatError(source, ln, "header needs key=value");
      const std::string key = body.substr(0, eq), val = body.substr(eq + 1);
      try {
        if (key == "weights") {
          db.header.weights = parse_weight_set(val);
          seen_w = true;
        } else if (key == "size") {
          std::size_t used = 0;
          db.header.size = std::stoi(val, &used);
          if (used != val.size() || db.header.size < 1) throw std::invalid_argument("bad size '" + val + "'");
          seen_s = true;
        } else if (key == "required") {
          db.header.required = val.empty() ? Clique{} : parse_clique_line(val);
          seen_r = true;
        } else if (key == "generator") {
          db.header.generator = val;
          seen_g = true;
        } else {
          throw std::invalid_argument("unknown header '" + key + "'");
        }
      } catch (const std::invalid_argument& e) {
        throw FormatError(source, ln, e.what());
      }
      continue;
    }
    if (!(seen_w && seen_s && seen_r && seen_g)) throw FormatError(source, ln, "data before complete header");
    Clique k;
    try {
      k = parse_clique_line(text);
    } catch (const std::invalid_argument& e) {
      throw FormatError(source, ln, e.what());
    }
    if (static_cast<int>(k.size()) != db.header.size)
      throw FormatError(source, ln, "expected " + std::to_string(db.header.size) + " classes, found " + std::to_string(k.size()));
    if (!std::is_sorted(k.begin(), k.end()) || std::adjacent_find(k.begin(), k.end()) != k.end())
      throw FormatError(source, ln, "classes not in canonical order");
    if (!is_clique(g, k, db.header.weights)) throw FormatError(source, ln, "not a clique with the declared weights");
    for (auto r : db.header.required)
      if (!std::binary_search(k.begin(), k.end(), r)) throw FormatError(source, ln, "missing a required class");
    if (!db.cliques.empty() && !(db.cliques.back() < k)) throw FormatError(source, ln, "lines not in canonical order");
    db.cliques.push_back(std::move(k));
  }
  if (!(seen_w && seen_s && seen_r && seen_g)) throw FormatError(source, ln + 1, "incomplete header");
  return db;
}

inline CliqueDb read_clique_db_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_clique_db(in, path);
}

// ---------------------------------------------------------------------------
// Class lists: one class per line or ';'-separated; '#' starts a comment.

inline std::vector<LatticeVector> read_class_list(std::istream& in, const std::string& source = "<input>") {
  std::vector<LatticeVector> out;
  std::string text;
  std::size_t ln = 0;
  while (std::getline(in, text)) {
    ++ln;
    if (const auto h = text.find('#'); h != std::string::npos) text.resize(h);
    text = detail::trim(text);
    if (text.empty()) continue;
    for (const auto& part : detail::split(text, ';')) {
      if (part.empty()) continue;
      try {
        const auto v = parse_class(part);
        if (!is_exceptional(v)) throw std::invalid_argument("not an exceptional class: " + part);
        out.push_back(v);
      } catch (const std::invalid_argument& e) {
        throw FormatError(source, ln, e.what());
      }
    }
  }
  if (out.empty()) throw FormatError(source, ln, "no classes");
  return out;
}

inline std::vector<LatticeVector> read_class_list_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_class_list(in, path);
}

// ---------------------------------------------------------------------------
// Point configurations:
//   setup=A
//   field=Q        or  field=19
//   params=2 4 16 7 18 16      rationals as num/den over Q

struct ConfigFile {
  char setup = 'A';
  std::uint32_t p = 0;  // 0 for the rationals
  std::vector<mpq_class> params;
};

inline std::string to_text(const ConfigFile& c) {
  std::string s = std::string("setup=") + c.setup + "\nfield=" + (c.p ? std::to_string(c.p) : "Q") + "\nparams=";
  for (std::size_t i = 0; i < c.params.size(); ++i) s += (i ? " " : "") + c.params[i].get_str();
  return s + "\n";
}

inline ConfigFile read_config(std::istream& in, const std::string& source = "<input>") {
  ConfigFile c;
  bool seen_s = false, seen_f = false, seen_p = false;
  std::string text;
  std::size_t ln = 0;
  while (std::getline(in, text)) {
    ++ln;
    if (const auto h = text.find('#'); h != std::string::npos) text.resize(h);
    text = detail::trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw FormatError(source, ln, "expected key=value");
    const std::string key = detail::trim(text.substr(0, eq)), val = detail::trim(text.substr(eq + 1));
    if (key == "setup") {
      if (val != "A" && val != "B") throw FormatError(source, ln, "setup must be A or B");
      c.setup = val[0];
      seen_s = true;
    } else if (key == "field") {
      if (val == "Q") {
        c.p = 0;
      } else {
        try {
          std::size_t used = 0;
          const unsigned long p = std::stoul(val, &used);
          if (used != val.size() || !is_prime(p) || p >= (1ul << 31)) throw std::invalid_argument("");
          c.p = static_cast<std::uint32_t>(p);
        } catch (const std::exception&) {
          throw FormatError(source, ln, "field must be Q or a prime below 2^31, got '" + val + "'");
        }
      }
      seen_f = true;
    } else if (key == "params") {
      std::istringstream ps(val);
      std::string tok;
      while (ps >> tok) {
        mpq_class x;
        if (x.set_str(tok, 10) != 0) throw FormatError(source, ln, "bad rational '" + tok + "'");
        if (x.get_den() == 0) throw FormatError(source, ln, "zero denominator in '" + tok + "'");
        x.canonicalize();
        c.params.push_back(x);
      }
      seen_p = true;
    } else {
      throw FormatError(source, ln, "unknown key '" + key + "'");
    }
  }
  if (!(seen_s && seen_f && seen_p)) throw FormatError(source, ln + 1, "need setup, field and params");
  const std::size_t want = c.setup == 'A' ? 6 : 8;
  if (c.params.size() != want)
    throw FormatError(source, ln, std::string("set-up ") + c.setup + " takes " + std::to_string(want) + " parameters");
  if (c.p)
    for (const auto& x : c.params)
      if (x.get_den() != 1 || x < 0 || x >= c.p) throw FormatError(source, ln, "F_p parameters must be residues 0..p-1");
  return c;
}

inline ConfigFile read_config_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_config(in, path);
}

template <class F>
PointConfig<F> instantiate(const F& field, const ConfigFile& c) {
  std::vector<typename F::Elem> v;
  for (const auto& x : c.params) {
    if constexpr (std::is_same_v<typename F::Elem, mpq_class>)
      v.push_back(x);
    else
      v.push_back(field.from_int(x.get_num().get_si()));
  }
  return c.setup == 'A' ? setup_a(field, std::span<const typename F::Elem>(v))
                        : setup_b(field, std::span<const typename F::Elem>(v));
}

}  // namespace dp1
