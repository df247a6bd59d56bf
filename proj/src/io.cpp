#include "l0graph/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "l0graph/errors.hpp"

namespace l0graph {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
bool parse_number(const std::string& token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  if (sep == ' ') {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
  } else {
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) fields.push_back(trim(field));
  }
  return fields;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

EdgeList read_edge_list(std::istream& in) {
  struct Row {
    Index u, v;
    double w;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::optional<Index> declared;
  std::optional<bool> weighted;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string body = trim(text.substr(1));
      const std::string key = "vertices:";
      if (body.rfind(key, 0) == 0) {
        Index n = 0;
        if (!parse_number(trim(body.substr(key.size())), n) || n < 1) {
          fail(line, "bad vertex count");
        }
        declared = n;
      }
      continue;
    }
    const auto fields = split_fields(text, ' ');
    if (fields.size() != 2 && fields.size() != 3) {
      fail(line, "expected 'u v' or 'u v w', got " + std::to_string(fields.size()) + " fields");
    }
    Row row{0, 0, 1.0, line};
    if (!parse_number(fields[0], row.u) || !parse_number(fields[1], row.v) || row.u < 0 ||
        row.v < 0) {
      fail(line, "vertex ids must be nonnegative integers");
    }
    const bool has_weight = fields.size() == 3;
    if (weighted && *weighted != has_weight) fail(line, "mixed weighted and unweighted edges");
    weighted = has_weight;
    if (has_weight && (!parse_number(fields[2], row.w) || !std::isfinite(row.w) || row.w < 0.0)) {
      fail(line, "edge weight must be a finite nonnegative real");
    }
    rows.push_back(row);
  }

  Index n = 0;
  for (const auto& r : rows) n = std::max({n, r.u + 1, r.v + 1});
  if (declared) {
    if (*declared < n) throw ParseError("declared vertex count is smaller than the largest id + 1");
    n = *declared;
  }
  if (n == 0) throw ParseError("edge list defines no vertices");

  std::vector<Edge> edges;
  edges.reserve(rows.size());
  std::map<std::pair<Index, Index>, std::size_t> seen;
  for (const auto& r : rows) {
    if (r.u == r.v) fail(r.line, "self-loop at vertex " + std::to_string(r.u));
    const auto key = std::minmax(r.u, r.v);
    if (auto [it, inserted] = seen.emplace(key, r.line); !inserted) {
      fail(r.line, "duplicate edge, first listed on line " + std::to_string(it->second));
    }
    edges.push_back({r.u, r.v});
  }
  EdgeList out{Graph(n, std::move(edges)), std::nullopt};
  if (weighted.value_or(false)) {
    Vector w(out.graph.num_edges());
    for (const auto& r : rows) w[*out.graph.find_edge(r.u, r.v)] = r.w;
    out.weights = EdgeWeighting(w);
  }
  return out;
}

EdgeList read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeighting* weights,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "# vertices: " << g.num_vertices() << '\n';
  for (Index e = 0; e < g.num_edges(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v;
    if (weights) out << ' ' << format_real((*weights)[e]);
    out << '\n';
  }
}

Vector read_signal(std::istream& in) {
  std::vector<double> plain;
  std::map<Index, double> indexed;
  std::optional<bool> csv;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const bool is_csv = text.find(',') != std::string::npos;
    if (csv && *csv != is_csv) fail(line, "mixed plain and 'vertex,value' rows");
    if (is_csv) {
      const auto fields = split_fields(text, ',');
      if (fields.size() != 2) fail(line, "expected 'vertex,value'");
      Index v = 0;
      double x = 0.0;
      if (!parse_number(fields[0], v) || !parse_number(fields[1], x)) {
        if (!csv && indexed.empty() && fields[0] == "vertex") {
          csv = true;
          continue;
        }
        fail(line, "cannot parse 'vertex,value'");
      }
      if (v < 0) fail(line, "negative vertex id");
      if (!std::isfinite(x)) fail(line, "value is not finite");
      if (!indexed.emplace(v, x).second) fail(line, "vertex " + std::to_string(v) + " listed twice");
    } else {
      double x = 0.0;
      if (!parse_number(text, x)) fail(line, "cannot parse a real number from '" + text + "'");
      if (!std::isfinite(x)) fail(line, "value is not finite");
      plain.push_back(x);
    }
    csv = is_csv;
  }
  if (csv.value_or(false)) {
    Vector out(static_cast<Index>(indexed.size()));
    Index expected = 0;
    for (const auto& [v, x] : indexed) {
      if (v != expected) throw ParseError("signal is missing vertex " + std::to_string(expected));
      out[expected++] = x;
    }
    return out;
  }
  if (plain.empty()) throw ParseError("signal file has no values");
  return Eigen::Map<const Vector>(plain.data(), static_cast<Index>(plain.size()));
}

Vector read_signal_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_signal(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_signal(std::ostream& out, const Vector& values, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (Index i = 0; i < values.size(); ++i) out << format_real(values[i]) << '\n';
}

void write_signal_file(const std::string& path, const Vector& values,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_signal(out, values, comments);
}

}  // namespace l0graph
