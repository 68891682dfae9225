#include "idp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace idp {

ParseError::ParseError(int line, std::string reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(std::move(reason)) {}

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

long long to_int(std::string_view s, int line, const char* what) {
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(s) + "'");
  }
  return value;
}

long long header_field(std::string_view tok, std::string_view key, int line) {
  if (tok.substr(0, key.size()) != key) {
    throw ParseError(line, "expected " + std::string(key) + "<value>");
  }
  return to_int(tok.substr(key.size()), line, key.data());
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "idp") {
    throw ParseError(head.number, "header must be 'idp <kind> n=<n> k=<k>'");
  }
  Instance inst;
  if (head.tokens[1] == "interval") {
    inst.rep.kind = Kind::Interval;
  } else if (head.tokens[1] == "circular") {
    inst.rep.kind = Kind::Circular;
  } else {
    throw ParseError(head.number, "unknown kind '" + std::string(head.tokens[1]) + "'");
  }
  const long long n = header_field(head.tokens[2], "n=", head.number);
  const long long k = header_field(head.tokens[3], "k=", head.number);
  if (n < 0 || k < 0 || n > 100'000'000 || k > 100'000'000) {
    throw ParseError(head.number, "n and k must be non-negative");
  }
  if (std::size_t(1 + n + k) != lines.size()) {
    const int at = lines.size() > std::size_t(1 + n + k)
                       ? lines[1 + n + k].number
                       : lines.back().number;
    throw ParseError(at, "expected " + std::to_string(n) + " vertex lines and " +
                             std::to_string(k) + " pair lines, found " +
                             std::to_string(lines.size() - 1) + " lines");
  }

  std::unordered_map<std::string, Vertex> ids;
  ids.reserve(std::size_t(n));
  inst.rep.left.resize(n);
  inst.rep.right.resize(n);
  inst.rep.names.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Line& ln = lines[1 + v];
    if (ln.tokens.size() != 4 || ln.tokens[0] != "v") {
      throw ParseError(ln.number, "expected 'v <id> <l> <r>'");
    }
    std::string id(ln.tokens[1]);
    if (!ids.emplace(id, v).second) {
      throw ParseError(ln.number, "duplicate vertex id '" + id + "'");
    }
    const long long l = to_int(ln.tokens[2], ln.number, "endpoint");
    const long long r = to_int(ln.tokens[3], ln.number, "endpoint");
    if (l < 1 || r < 1 || l > 2 * n || r > 2 * n) {
      throw ParseError(ln.number, "endpoint out of range 1.." + std::to_string(2 * n));
    }
    inst.rep.left[v] = int(l);
    inst.rep.right[v] = int(r);
    inst.rep.names[v] = std::move(id);
  }
  for (int i = 0; i < k; ++i) {
    const Line& ln = lines[1 + n + i];
    if (ln.tokens.size() != 4 || ln.tokens[0] != "p") {
      throw ParseError(ln.number, "expected 'p <s-id> <t-id> <r>'");
    }
    TerminalPair tp;
    for (int side = 0; side < 2; ++side) {
      const auto it = ids.find(std::string(ln.tokens[1 + side]));
      if (it == ids.end()) {
        throw ParseError(ln.number, "unknown vertex id '" +
                                        std::string(ln.tokens[1 + side]) + "'");
      }
      (side == 0 ? tp.s : tp.t) = it->second;
    }
    const long long r = to_int(ln.tokens[3], ln.number, "requirement");
    if (r < 0 || r > 1'000'000'000) throw ParseError(ln.number, "requirement out of range");
    tp.requirement = int(r);
    inst.pairs.push_back(tp);
  }

  if (auto err = validate_instance(inst)) {
    int at = head.number;
    if (err->pair >= 0) {
      at = lines[1 + n + err->pair].number;
    } else if (err->vertex >= 0) {
      at = lines[1 + err->vertex].number;
    }
    throw ParseError(at, err->message());
  }
  return inst;
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  const auto& rep = inst.rep;
  out << "idp " << to_string(rep.kind) << " n=" << inst.n() << " k=" << inst.k() << '\n';
  for (Vertex v = 0; v < inst.n(); ++v) {
    out << "v " << rep.name(v) << ' ' << rep.left[v] << ' ' << rep.right[v] << '\n';
  }
  for (const auto& p : inst.pairs) {
    out << "p " << rep.name(p.s) << ' ' << rep.name(p.t) << ' ' << p.requirement << '\n';
  }
  return out.str();
}

Outcome parse_solution(std::string_view text, const Instance& inst) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  const Line& head = lines.front();
  if (head.tokens[0] == "no") {
    if (lines.size() > 1) throw ParseError(lines[1].number, "unexpected text after 'no'");
    NoCertificate cert;
    for (std::size_t i = 1; i < head.tokens.size(); ++i) {
      const auto tok = head.tokens[i];
      if (tok.substr(0, 5) == "step=") {
        cert.step = std::string(tok.substr(5));
      } else if (tok.substr(0, 7) == "detail=") {
        const auto d = tok.substr(7);
        if (d != "-") cert.note = std::string(d);
      } else {
        throw ParseError(head.number, "unexpected token '" + std::string(tok) + "'");
      }
    }
    return cert;
  }
  if (head.tokens[0] != "yes" || head.tokens.size() != 1) {
    throw ParseError(head.number, "expected 'yes' or 'no'");
  }
  std::unordered_map<std::string, Vertex> ids;
  for (Vertex v = 0; v < inst.n(); ++v) ids.emplace(inst.rep.name(v), v);
  Solution sol;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.tokens.size() < 2 || ln.tokens[0] != "path") {
      throw ParseError(ln.number, "expected 'path <pair> <id>...'");
    }
    const long long pair = to_int(ln.tokens[1], ln.number, "pair index");
    if (pair < 1 || pair > inst.k()) throw ParseError(ln.number, "pair index out of range");
    PairPath pp{int(pair - 1), {}};
    for (std::size_t j = 2; j < ln.tokens.size(); ++j) {
      const auto it = ids.find(std::string(ln.tokens[j]));
      if (it == ids.end()) {
        throw ParseError(ln.number, "unknown vertex id '" + std::string(ln.tokens[j]) + "'");
      }
      pp.vertices.push_back(it->second);
    }
    sol.paths.push_back(std::move(pp));
  }
  return sol;
}

std::string emit_solution(const Instance& inst, const Outcome& outcome,
                          bool certify) {
  std::ostringstream out;
  if (const auto* sol = std::get_if<Solution>(&outcome)) {
    out << "yes\n";
    for (const auto& p : sol->paths) {
      out << "path " << p.pair + 1;
      for (Vertex v : p.vertices) out << ' ' << inst.rep.name(v);
      out << '\n';
    }
    return out.str();
  }
  const auto& cert = std::get<NoCertificate>(outcome);
  out << "no";
  if (certify) out << " step=" << cert.step << " detail=" << cert.detail();
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace idp
