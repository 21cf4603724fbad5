#include "cpow/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cpw {

namespace {

// next line that is neither blank nor a '#' comment
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw std::runtime_error("edge list: missing header line");
    std::istringstream head(line);
    long long n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: header must be \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, found " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw std::runtime_error("edge list: malformed edge line \"" + line + "\"");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_facet_list(std::ostream& out, const SimplicialComplex& k) {
    std::vector<Face> fs = facets(k);
    out << k.vertex_count() << " " << fs.size() << "\n";
    for (const Face& f : fs) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
}

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"schema_version", kSchemaVersion},
            {"vertex_count", g.vertex_count()},
            {"edges", edges}};
}

nlohmann::json complex_json(const SimplicialComplex& k) {
    nlohmann::json fs = nlohmann::json::array();
    for (const Face& f : facets(k)) fs.push_back(f);
    return {{"schema_version", kSchemaVersion},
            {"vertex_count", k.vertex_count()},
            {"void", k.is_void()},
            {"dim", k.dim()},
            {"f_vector", k.f_vector()},
            {"euler", k.euler_characteristic()},
            {"facets", fs}};
}

nlohmann::json profile_json(const HomologyProfile& p) {
    HomologyProfile q = p;
    q.normalize();
    return {{"schema_version", kSchemaVersion},
            {"betti_minus_one", q.betti_minus_one},
            {"betti", q.betti},
            {"torsion", q.torsion}};
}

nlohmann::json matching_json(const Matching& m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : m.pairs) pairs.push_back({a, b});
    return {{"schema_version", kSchemaVersion}, {"pairs", pairs}};
}

nlohmann::json report_json(const CheckReport& r) {
    return {{"schema_version", kSchemaVersion},
            {"id", r.id},
            {"instance", r.instance},
            {"pass", r.pass},
            {"detail", r.detail}};
}

nlohmann::json reports_json(std::span<const CheckReport> rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : rs) {
        nlohmann::json one = report_json(r);
        one.erase("schema_version");
        arr.push_back(std::move(one));
    }
    return {{"schema_version", kSchemaVersion}, {"reports", arr}};
}

nlohmann::json table_json(std::span<const TableCell> cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableCell& c : cells)
        arr.push_back({{"n", c.n},
                       {"r", c.r},
                       {"predicted", c.predicted.to_string()},
                       {"tier", c.tier == TableTier::exact ? "exact" : "field"},
                       {"verified", c.verified},
                       {"computed", c.computed}});
    return {{"schema_version", kSchemaVersion}, {"cells", arr}};
}

void table_markdown(std::ostream& out, std::span<const TableCell> cells, bool verified_column) {
    if (cells.empty()) return;
    int n_min = cells[0].n, n_max = cells[0].n, r_max = 0;
    for (const TableCell& c : cells) {
        n_min = std::min(n_min, c.n);
        n_max = std::max(n_max, c.n);
        r_max = std::max(r_max, c.r);
    }
    out << "| graph |";
    for (int r = 0; r <= r_max; ++r) out << " r=" << r << " |";
    if (verified_column) out << " verified |";
    out << "\n|---|";
    for (int r = 0; r <= r_max; ++r) out << "---|";
    if (verified_column) out << "---|";
    out << "\n";
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<const TableCell*> row(static_cast<std::size_t>(r_max) + 1, nullptr);
        for (const TableCell& c : cells)
            if (c.n == n && c.r <= r_max) row[c.r] = &c;
        out << "| C_" << n << " |";
        for (int r = 0; r <= r_max; ++r)
            out << " " << (row[r] ? row[r]->predicted.to_string() : "") << " |";
        if (verified_column) {
            std::string bad;
            for (int r = 0; r <= r_max; ++r)
                if (row[r] && !row[r]->verified) bad += (bad.empty() ? "r=" : ",r=") + std::to_string(r);
            out << " " << (bad.empty() ? "yes" : "no: " + bad) << " |";
        }
        out << "\n";
    }
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void table_csv(std::ostream& out, std::span<const TableCell> cells) {
    out << "n,r,predicted,tier,verified,computed\n";
    for (const TableCell& c : cells)
        out << c.n << "," << c.r << "," << csv_escape(c.predicted.to_string()) << ","
            << (c.tier == TableTier::exact ? "exact" : "field") << ","
            << (c.verified ? "yes" : "no") << "," << csv_escape(c.computed) << "\n";
}

} // namespace cpw
