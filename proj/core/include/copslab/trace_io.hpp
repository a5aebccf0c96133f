#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "copslab/game.hpp"

namespace copslab {

/// How vertices are printed in traces: plain ids, or "(i,j)" pairs for a
/// product graph whose second factor has `product_columns` vertices.
struct VertexFormat {
  std::size_t product_columns = 0;

  std::string render(Vertex v) const;
  Vertex parse(std::string_view token) const;
};

/// Trace text format:
///   #graph <label>
///   #order robber-first|cops-first
///   #cops <k>
///   #product <rows> <cols>        (only for product rendering)
///   P r c1 .. ck                  (placement)
///   t r c1 .. ck                  (positions after round t)
///   CAPTURED t | SURVIVED t
void write_trace(std::ostream& out, const Trace& trace, const VertexFormat& format = {},
                 std::size_t product_rows = 0);
Trace read_trace(std::istream& in);

}  // namespace copslab
