#include "ditrail/io.hpp"

#include <fstream>
#include <sstream>

#include "detail/sha256.hpp"
#include "ditrail/errors.hpp"

namespace ditrail {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return pos != std::string::npos && line[pos] == '#';
}

bool is_s_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return pos != std::string::npos && line.compare(pos, 2, "S:") == 0;
}

std::vector<VertexId> parse_s_line(const std::string& line, VertexId n, int lineno) {
  auto pos = line.find("S:");
  std::istringstream ss(line.substr(pos + 2));
  std::vector<VertexId> s;
  VertexId v;
  while (ss >> v) {
    if (v < 0 || v >= n) {
      throw InputError("line " + std::to_string(lineno) + ": S vertex " +
                       std::to_string(v) + " out of range");
    }
    s.push_back(v);
  }
  std::string junk;
  ss.clear();
  if (ss >> junk) {
    throw InputError("line " + std::to_string(lineno) + ": bad S line");
  }
  return s;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  VertexId n = -1;
  long long m = -1;
  std::vector<Arc> arcs;
  std::optional<std::vector<VertexId>> s;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || is_comment(line)) continue;
    if (n < 0) {
      std::istringstream ss(line);
      if (!(ss >> n >> m) || n < 0 || m < 0) {
        throw InputError("line " + std::to_string(lineno) + ": expected header \"n m\"");
      }
      std::string junk;
      if (ss >> junk) {
        throw InputError("line " + std::to_string(lineno) + ": trailing junk after header");
      }
      continue;
    }
    if (is_s_line(line)) {
      if (s) throw InputError("line " + std::to_string(lineno) + ": duplicate S line");
      s = parse_s_line(line, n, lineno);
      continue;
    }
    std::istringstream ss(line);
    VertexId tail, head;
    if (!(ss >> tail >> head)) {
      throw InputError("line " + std::to_string(lineno) + ": expected arc \"tail head\"");
    }
    std::string junk;
    if (ss >> junk) {
      throw InputError("line " + std::to_string(lineno) + ": trailing junk after arc");
    }
    arcs.push_back(Arc{tail, head});
    if (static_cast<long long>(arcs.size()) > m) {
      throw InputError("line " + std::to_string(lineno) + ": more than " +
                       std::to_string(m) + " arc lines");
    }
  }
  if (n < 0) throw InputError("parse_instance: missing header line");
  if (static_cast<long long>(arcs.size()) != m) {
    throw InputError("parse_instance: header promised " + std::to_string(m) +
                     " arcs, found " + std::to_string(arcs.size()));
  }
  // Duplicate arc lines surface as InputError from the Digraph constructor.
  return Instance{Digraph(n, std::move(arcs)), std::move(s)};
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string format_instance(const Digraph& d, std::span<const VertexId> s) {
  std::string text = format_digraph(d);
  if (!s.empty()) {
    text += "S:";
    for (VertexId v : s) text += ' ' + std::to_string(v);
    text += '\n';
  }
  return text;
}

std::string sha256_hex(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  auto digest = detail::sha256(bytes);
  std::string hex;
  hex.reserve(64);
  for (std::uint8_t b : digest) {
    hex += kHex[b >> 4];
    hex += kHex[b & 0xf];
  }
  return hex;
}

std::string digraph_sha256(const Digraph& d) { return sha256_hex(format_digraph(d)); }

}  // namespace ditrail
