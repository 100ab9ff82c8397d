#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mwcarp/error.hpp"
#include "mwcarp/io.hpp"

namespace mwcarp {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void semantic_error(int line, const std::string& what) {
  throw Error(ErrorCode::kSemanticError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t integer(const Line& line, std::size_t i) {
  const std::string_view tok = line.tokens[i];
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_error(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  if (value < 0) semantic_error(line.number, "negative value " + std::string(tok));
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  Instance run() {
    Instance inst;
    bool have_name = false;
    bool have_depot = false;
    bool have_capacity = false;
    std::int64_t depot = 0;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    bool have_edges = false;
    bool have_arcs = false;
    bool ended = false;
    while (!ended) {
      if (at_ >= lines_.size()) parse_error(last_line() + 1, "missing END");
      const Line& line = lines_[at_++];
      const std::string_view key = line.tokens[0];
      if (key == "END") {
        expect_arity(line, 1);
        ended = true;
      } else if (key == "NAME") {
        expect_arity(line, 2);
        inst.name = std::string(line.tokens[1]);
        have_name = true;
      } else if (key == "VERTICES") {
        expect_arity(line, 2);
        vertices_ = integer(line, 1);
        if (vertices_ < 1) semantic_error(line.number, "a graph needs at least one vertex");
      } else if (key == "DEPOT") {
        expect_arity(line, 2);
        depot = integer(line, 1);
        depot_line_ = line.number;
        have_depot = true;
      } else if (key == "CAPACITY") {
        expect_arity(line, 2);
        inst.capacity = integer(line, 1);
        if (inst.capacity < 1) semantic_error(line.number, "capacity must be positive");
        have_capacity = true;
      } else if (key == "SERVICE_SURCHARGE") {
        expect_arity(line, 2);
        const std::string_view tok = line.tokens[1];
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), inst.service_surcharge);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line.number, "expected an integer");
      } else if (key == "EDGES") {
        if (have_edges) parse_error(line.number, "duplicate EDGES section");
        require_vertices(line);
        expect_arity(line, 2);
        const std::int64_t m = integer(line, 1);
        for (std::int64_t i = 0; i < m; ++i) {
          const Line& row = member_line(line);
          expect_arity(row, 5);
          edges.push_back({vertex(row, 0), vertex(row, 1), integer(row, 2), integer(row, 3)});
          inst.edge_demand.push_back(integer(row, 4));
          edge_lines_.push_back(row.number);
        }
        have_edges = true;
      } else if (key == "ARCS") {
        if (have_arcs) parse_error(line.number, "duplicate ARCS section");
        require_vertices(line);
        expect_arity(line, 2);
        const std::int64_t m = integer(line, 1);
        for (std::int64_t i = 0; i < m; ++i) {
          const Line& row = member_line(line);
          expect_arity(row, 4);
          arcs.push_back({vertex(row, 0), vertex(row, 1), integer(row, 2)});
          inst.arc_demand.push_back(integer(row, 3));
          arc_lines_.push_back(row.number);
        }
        have_arcs = true;
      } else {
        parse_error(line.number, "unknown keyword '" + std::string(key) + "'");
      }
    }
    if (at_ < lines_.size()) parse_error(lines_[at_].number, "content after END");
    const int end_line = last_line();
    if (!have_name) parse_error(end_line, "missing NAME");
    if (vertices_ < 0) parse_error(end_line, "missing VERTICES");
    if (!have_depot) parse_error(end_line, "missing DEPOT");
    if (!have_capacity) parse_error(end_line, "missing CAPACITY");
    if (!have_edges) parse_error(end_line, "missing EDGES section");
    if (!have_arcs) parse_error(end_line, "missing ARCS section");
    if (depot < 1 || depot > vertices_) semantic_error(depot_line_, "depot out of range");
    inst.depot = static_cast<VertexId>(depot - 1);
    try {
      inst.graph = MixedMultigraph(static_cast<int>(vertices_), std::move(edges), std::move(arcs));
    } catch (const Error& e) {
      semantic_error(end_line, e.what());
    }
    for (std::size_t e = 0; e < inst.edge_demand.size(); ++e) {
      if (inst.edge_demand[e] > inst.capacity) {
        inst.warnings.push_back("line " + std::to_string(edge_lines_[e]) + ": demand of e" + std::to_string(e + 1) +
                                " exceeds capacity");
      }
    }
    for (std::size_t a = 0; a < inst.arc_demand.size(); ++a) {
      if (inst.arc_demand[a] > inst.capacity) {
        inst.warnings.push_back("line " + std::to_string(arc_lines_[a]) + ": demand of a" + std::to_string(a + 1) +
                                " exceeds capacity");
      }
    }
    return inst;
  }

 private:
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  static void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n) {
      parse_error(line.number, "expected " + std::to_string(n) + " fields, got " + std::to_string(line.tokens.size()));
    }
  }

  void require_vertices(const Line& line) const {
    if (vertices_ < 0) parse_error(line.number, "VERTICES must precede member sections");
  }

  const Line& member_line(const Line& header) {
    if (at_ >= lines_.size()) parse_error(header.number, "section ends early");
    return lines_[at_++];
  }

  VertexId vertex(const Line& line, std::size_t i) const {
    const std::int64_t v = integer(line, i);
    if (v < 1 || v > vertices_) semantic_error(line.number, "vertex " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v - 1);
  }

  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::int64_t vertices_ = -1;
  int depot_line_ = 0;
  std::vector<int> edge_lines_;
  std::vector<int> arc_lines_;
};

}  // namespace

Instance parse_instance(std::string_view text) { return Parser(text).run(); }

std::string write_instance(const Instance& inst) {
  std::string name = inst.name.empty() ? "unnamed" : inst.name;
  for (char& c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  }
  std::ostringstream out;
  out << "NAME " << name << '\n';
  out << "VERTICES " << inst.graph.vertex_count() << '\n';
  out << "DEPOT " << inst.depot + 1 << '\n';
  out << "CAPACITY " << inst.capacity << '\n';
  if (inst.service_surcharge != 0) out << "SERVICE_SURCHARGE " << inst.service_surcharge << '\n';
  const auto edges = inst.graph.edges();
  out << "EDGES " << edges.size() << '\n';
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << edges[e].u + 1 << ' ' << edges[e].v + 1 << ' ' << edges[e].cost_uv << ' ' << edges[e].cost_vu << ' '
        << inst.edge_demand[e] << '\n';
  }
  const auto arcs = inst.graph.arcs();
  out << "ARCS " << arcs.size() << '\n';
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out << arcs[a].u + 1 << ' ' << arcs[a].v + 1 << ' ' << arcs[a].cost << ' ' << inst.arc_demand[a] << '\n';
  }
  out << "END\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance read_instance_file(const std::string& path, InstanceFormat format) {
  const std::string text = read_text_file(path);
  return format == InstanceFormat::kCanonical ? parse_instance(text) : parse_legacy_instance(text);
}

}  // namespace mwcarp
