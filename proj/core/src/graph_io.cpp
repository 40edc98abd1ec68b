#include "nlcut/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nlcut/errors.hpp"

namespace nlcut {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_id(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, "bad vertex id '" + tok + "'");
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(line, "bad vertex id '" + tok + "'");
  }
  return std::stoi(tok);
}

Rational parse_number(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto toks = tokens_of(text.substr(pos, end - pos));
    if (!toks.empty()) fn(toks, line_no);
    pos = end + 1;
  }
}

std::vector<std::pair<int, Rational>> parse_pairs(std::string_view text, int n, const char* what) {
  std::vector<std::pair<int, Rational>> out;
  for_each_line(text, [&](const std::vector<std::string>& toks, int line) {
    if (toks.size() != 2) throw ParseError(line, std::string("expected '<vertex> <") + what + ">'");
    int i = parse_id(toks[0], line);
    if (i >= n) throw ParseError(line, "vertex " + toks[0] + " outside [0, " + std::to_string(n) + ")");
    out.emplace_back(i, parse_number(toks[1], line));
  });
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> declared;
  bool seen_edge = false;
  int max_id = -1;
  std::vector<Edge> edges;
  for_each_line(text, [&](const std::vector<std::string>& toks, int line) {
    if (toks[0] == "n") {
      if (seen_edge || declared) throw ParseError(line, "the 'n' header must come first");
      if (toks.size() != 2) throw ParseError(line, "expected 'n <count>'");
      declared = parse_id(toks[1], line);
      if (*declared > kMaxVertices) {
        throw Error(ErrorCode::too_large, "at most " + std::to_string(kMaxVertices) + " vertices");
      }
      return;
    }
    if (toks.size() != 2 && toks.size() != 3) throw ParseError(line, "expected 'u v [w]'");
    int u = parse_id(toks[0], line);
    int v = parse_id(toks[1], line);
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(line, "vertex id beyond declared n = " + std::to_string(*declared));
    }
    if (u >= kMaxVertices || v >= kMaxVertices) {
      throw Error(ErrorCode::too_large, "at most " + std::to_string(kMaxVertices) + " vertices");
    }
    Rational w = toks.size() == 3 ? parse_number(toks[2], line) : Rational(1);
    if (u == v) throw Error(ErrorCode::self_loop, "line " + std::to_string(line) + ": vertex " + toks[0]);
    if (w <= 0) throw Error(ErrorCode::negative_weight, "line " + std::to_string(line) + ": weight " + toks[2]);
    edges.push_back({u, v, w});
    max_id = std::max({max_id, u, v});
    seen_edge = true;
  });
  return Graph(declared.value_or(max_id + 1), edges);
}

std::string emit_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_string(e.w) + "\n";
  }
  return out;
}

std::vector<Rational> parse_measure(std::string_view text, int n) {
  std::vector<Rational> mu(n, Rational(0));
  for (auto& [i, value] : parse_pairs(text, n, "measure")) {
    if (value < 0) throw Error(ErrorCode::negative_weight, "measure of vertex " + std::to_string(i));
    mu[i] = value;
  }
  return mu;
}

RVector parse_vector(std::string_view text, int n) {
  RVector x(n, Rational(0));
  for (auto& [i, value] : parse_pairs(text, n, "value")) x[i] = value;
  return x;
}

std::string emit_vector(const RVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += std::to_string(i) + " " + to_string(x[i]) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m() || a.mu() != b.mu()) return false;
  for (int i = 0; i < a.m(); ++i) {
    const Edge& x = a.edges()[i];
    const Edge& y = b.edges()[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

}  // namespace nlcut
