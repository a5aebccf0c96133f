#include "copslab/trace_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "copslab/errors.hpp"

namespace copslab {

std::string VertexFormat::render(Vertex v) const {
  if (product_columns == 0) return std::to_string(v);
  const auto cols = static_cast<Vertex>(product_columns);
  return "(" + std::to_string(v / cols) + "," + std::to_string(v % cols) + ")";
}

Vertex VertexFormat::parse(std::string_view token) const {
  try {
    if (!token.empty() && token.front() == '(') {
      if (product_columns == 0) throw InputError("trace: pair vertex without #product header");
      const auto comma = token.find(',');
      if (comma == std::string_view::npos || token.back() != ')') throw InputError("trace: bad vertex");
      const int i = std::stoi(std::string(token.substr(1, comma - 1)));
      const int j = std::stoi(std::string(token.substr(comma + 1, token.size() - comma - 2)));
      return static_cast<Vertex>(i * static_cast<int>(product_columns) + j);
    }
    return static_cast<Vertex>(std::stoi(std::string(token)));
  } catch (const std::logic_error&) {
    throw InputError("trace: bad vertex token \"" + std::string(token) + "\"");
  }
}

void write_trace(std::ostream& out, const Trace& trace, const VertexFormat& format, std::size_t product_rows) {
  out << "#graph " << trace.graph_label << '\n';
  out << "#order " << to_string(trace.config.order) << '\n';
  out << "#cops " << trace.config.cop_count << '\n';
  if (format.product_columns != 0) out << "#product " << product_rows << ' ' << format.product_columns << '\n';
  auto line = [&](const std::string& head, Vertex robber, const std::vector<Vertex>& cops) {
    out << head << ' ' << format.render(robber);
    for (Vertex c : cops) out << ' ' << format.render(c);
    out << '\n';
  };
  line("P", trace.placement_robber, trace.placement_cops);
  for (const auto& r : trace.rounds) line(std::to_string(r.round), r.robber, r.cops);
  out << (trace.outcome.captured ? "CAPTURED " : "SURVIVED ") << trace.outcome.round << '\n';
}

Trace read_trace(std::istream& in) {
  Trace trace;
  VertexFormat format;
  bool have_placement = false;
  bool have_outcome = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string head;
    row >> head;
    if (head == "#graph") {
      std::getline(row >> std::ws, trace.graph_label);
    } else if (head == "#order") {
      std::string order;
      row >> order;
      trace.config.order = parse_move_order(order);
    } else if (head == "#cops") {
      row >> trace.config.cop_count;
    } else if (head == "#product") {
      std::size_t rows = 0;
      row >> rows >> format.product_columns;
    } else if (head == "CAPTURED" || head == "SURVIVED") {
      trace.outcome.captured = head == "CAPTURED";
      row >> trace.outcome.round;
      have_outcome = true;
    } else if (!head.empty() && head[0] == '#') {
      continue;
    } else {
      std::string token;
      if (!(row >> token)) throw InputError("trace: missing robber position in \"" + line + "\"");
      const Vertex robber = format.parse(token);
      std::vector<Vertex> cops;
      while (row >> token) cops.push_back(format.parse(token));
      if (cops.size() != trace.config.cop_count) throw InputError("trace: wrong cop count in \"" + line + "\"");
      if (head == "P") {
        trace.placement_robber = robber;
        trace.placement_cops = std::move(cops);
        have_placement = true;
      } else {
        RoundRecord r;
        try {
          r.round = std::stoul(head);
        } catch (const std::logic_error&) {
          throw InputError("trace: bad round label \"" + head + "\"");
        }
        r.robber = robber;
        r.cops = std::move(cops);
        trace.rounds.push_back(std::move(r));
      }
    }
  }
  if (!have_placement || !have_outcome) throw InputError("trace: missing placement or outcome line");
  trace.config.max_rounds = trace.outcome.captured ? std::max<std::size_t>(trace.outcome.round, 1)
                                                   : trace.outcome.round;
  return trace;
}

}  // namespace copslab
