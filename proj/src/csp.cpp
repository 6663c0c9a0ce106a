#include "twsep/csp.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "twsep/error.hpp"

namespace twsep {

ConstraintTable::ConstraintTable(int domain_size, std::vector<std::uint8_t> allowed)
    : d_(domain_size), allowed_(std::move(allowed)) {
  if (d_ < 1 || allowed_.size() != static_cast<std::size_t>(d_) * d_) {
    throw FormatError("constraint table must hold d*d entries for d >= 1");
  }
}

ConstraintTable ConstraintTable::not_equal(int domain_size) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(domain_size) * domain_size, 1);
  for (int a = 0; a < domain_size; ++a) bits[a * domain_size + a] = 0;
  return ConstraintTable(domain_size, std::move(bits));
}

ConstraintTable ConstraintTable::transposed() const {
  std::vector<std::uint8_t> bits(allowed_.size());
  for (int a = 0; a < d_; ++a) {
    for (int b = 0; b < d_; ++b) bits[b * d_ + a] = allowed_[a * d_ + b];
  }
  return ConstraintTable(d_, std::move(bits));
}

bool CspInstance::allows(Vertex x, int a, Vertex y, int b) const {
  const ConstraintTable& t = constraints.at(Edge(x, y));
  return x < y ? t.allows(a, b) : t.allows(b, a);
}

void check_instance(const CspInstance& inst) {
  if (inst.domain_size < 1) throw FormatError("domain size must be positive");
  for (const auto& [edge, table] : inst.constraints) {
    if (!inst.graph.has_edge(edge.u, edge.v)) {
      throw FormatError("constraint on (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                        ") which is not an edge");
    }
    if (table.domain_size() != inst.domain_size) {
      throw FormatError("constraint table size does not match the domain size");
    }
  }
  if (inst.constraints.size() != inst.graph.edge_count()) {
    for (const Edge& e : inst.graph.edges()) {
      if (!inst.constraints.contains(e)) {
        throw FormatError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") has no constraint table");
      }
    }
  }
}

CspInstance make_alldiff(Graph graph, int domain_size) {
  CspInstance inst;
  inst.domain_size = domain_size;
  const ConstraintTable ne = ConstraintTable::not_equal(domain_size);
  for (const Edge& e : graph.edges()) inst.constraints.emplace(e, ne);
  inst.graph = std::move(graph);
  return inst;
}

CspInstance parse_constraints(Graph graph, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long d = 0;
  bool alldiff = false;
  std::map<Edge, ConstraintTable> tables;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "d") {
      if (d != 0) throw FormatError(detail::at_line(line_no, "domain size given twice"));
      if (tokens.size() != 2) throw FormatError(detail::at_line(line_no, "expected 'd <domain_size>'"));
      d = detail::parse_int(tokens[1], line_no);
      if (d < 1) throw FormatError(detail::at_line(line_no, "domain size must be positive"));
      continue;
    }
    if (d == 0) throw FormatError(detail::at_line(line_no, "'d' line must come first"));
    if (tokens[0] == "alldiff") {
      if (tokens.size() != 1) throw FormatError(detail::at_line(line_no, "'alldiff' takes no arguments"));
      alldiff = true;
      continue;
    }
    if (tokens[0] != "t" || tokens.size() < 4) {
      throw FormatError(detail::at_line(line_no, "expected 't <u> <v> <bits>'"));
    }
    const auto u = static_cast<Vertex>(detail::parse_int(tokens[1], line_no));
    const auto v = static_cast<Vertex>(detail::parse_int(tokens[2], line_no));
    if (!graph.has_edge(u, v)) {
      throw FormatError(detail::at_line(line_no, "table for a pair that is not an edge"));
    }
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      for (char c : tokens[i]) {
        if (c != '0' && c != '1') throw FormatError(detail::at_line(line_no, "table bits must be 0 or 1"));
        bits.push_back(c == '1');
      }
    }
    if (bits.size() != static_cast<std::size_t>(d * d)) {
      throw FormatError(detail::at_line(line_no, "table needs exactly d*d bits"));
    }
    ConstraintTable table(static_cast<int>(d), std::move(bits));
    if (u > v) table = table.transposed();
    if (!tables.emplace(Edge(u, v), std::move(table)).second) {
      throw FormatError(detail::at_line(line_no, "edge has more than one table"));
    }
  }
  if (d == 0) throw FormatError("missing 'd' line");
  if (alldiff && !tables.empty()) throw FormatError("'alldiff' cannot be combined with 't' lines");

  CspInstance inst = alldiff ? make_alldiff(std::move(graph), static_cast<int>(d)) : CspInstance{};
  if (!alldiff) {
    inst.graph = std::move(graph);
    inst.domain_size = static_cast<int>(d);
    inst.constraints = std::move(tables);
  }
  check_instance(inst);
  return inst;
}

CspInstance parse_constraints(Graph graph, std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_constraints(std::move(graph), in);
}

void write_constraints(std::ostream& out, const CspInstance& inst) {
  out << "d " << inst.domain_size << '\n';
  for (const auto& [edge, table] : inst.constraints) {
    out << "t " << edge.u << ' ' << edge.v << ' ';
    for (std::uint8_t b : table.bits()) out << (b ? '1' : '0');
    out << '\n';
  }
}

bool satisfies(const CspInstance& inst, const Assignment& values) {
  if (values.size() != inst.graph.vertex_count()) return false;
  for (int a : values) {
    if (a < 0 || a >= inst.domain_size) return false;
  }
  for (const auto& [edge, table] : inst.constraints) {
    const int a = values[*inst.graph.index_of(edge.u)];
    const int b = values[*inst.graph.index_of(edge.v)];
    if (!table.allows(a, b)) return false;
  }
  return true;
}

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DegenerateDataError("slope fit needs at least two paired samples");
  }
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) throw DegenerateDataError("log-log fit needs positive samples");
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ys[i]) - my);
  }
  if (sxx == 0) throw DegenerateDataError("all x samples are equal");
  return sxy / sxx;
}

double fit_growth_exponent(const std::function<CspInstance(int)>& family,
                           const std::function<SolveStats(const CspInstance&)>& solver,
                           std::span<const int> d_values, GrowthMetric metric) {
  if (std::set<int>(d_values.begin(), d_values.end()).size() < 3) {
    throw DegenerateDataError("need at least three distinct domain sizes");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (int d : d_values) {
    const SolveStats stats = solver(family(d));
    const std::uint64_t y =
        metric == GrowthMetric::kOperations ? stats.operations() : stats.cache_entries;
    if (y == 0) throw DegenerateDataError("zero count at d = " + std::to_string(d));
    xs.push_back(d);
    ys.push_back(static_cast<double>(y));
  }
  return fit_loglog_slope(xs, ys);
}

}  // namespace twsep
