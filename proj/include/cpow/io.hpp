#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cpow/checks.hpp"
#include "cpow/complex.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"
#include "cpow/morse.hpp"

namespace cpw {

// Version stamped into every JSON document this library emits.
inline constexpr int kSchemaVersion = 1;

// Edge-list text: optional '#' comment lines, then "n m", then m lines
// "u v" (0-based).  The writer emits edges in canonical sorted order, so
// write/read round-trips to an equal graph.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> comments = {});

// "n f" header, then one facet per line as space-separated vertices (the
// empty complex prints its empty facet as a blank line).
void write_facet_list(std::ostream& out, const SimplicialComplex& k);

nlohmann::json graph_json(const Graph& g);
nlohmann::json complex_json(const SimplicialComplex& k);
nlohmann::json profile_json(const HomologyProfile& p);
nlohmann::json matching_json(const Matching& m);
nlohmann::json report_json(const CheckReport& r);
nlohmann::json reports_json(std::span<const CheckReport> rs);
nlohmann::json table_json(std::span<const TableCell> cells);

// One row per cycle length, one column per power, cells in the fixed
// "S^d" / "v^k S^d" / "*" syntax; optional trailing column naming the
// powers whose computed homology disagreed with the prediction.
void table_markdown(std::ostream& out, std::span<const TableCell> cells, bool verified_column);
// Long form: one line per cell, quoted where needed.
void table_csv(std::ostream& out, std::span<const TableCell> cells);

} // namespace cpw
