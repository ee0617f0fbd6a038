#include "qecc/dataset_import.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "qecc/errors.hpp"
#include "qecc/graph.hpp"

namespace qecc {

double jaro_similarity(std::string_view a, std::string_view b) {
    if (a == b) return 1.0;
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0 || lb == 0) return 0.0;

    const std::size_t half = std::max(la, lb) / 2;
    const std::size_t window = half > 0 ? half - 1 : 0;
    std::vector<char> matched_a(la, 0), matched_b(lb, 0);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < la; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(lb, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (matched_b[j] || a[i] != b[j]) continue;
            matched_a[i] = matched_b[j] = 1;
            ++matches;
            break;
        }
    }
    if (matches == 0) return 0.0;

    std::size_t transposed = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < la; ++i) {
        if (!matched_a[i]) continue;
        while (!matched_b[j]) ++j;
        if (a[i] != b[j]) ++transposed;
        ++j;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(transposed) / 2.0;
    return (m / static_cast<double>(la) + m / static_cast<double>(lb) + (m - t) / m) / 3.0;
}

ImportStats import_cora(std::istream& in, std::ostream& edges_out, double threshold) {
    std::vector<std::string> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        records.push_back(line);
    }

    ImportStats stats{records.size(), 0};
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        for (std::size_t k = i + 1; k < records.size(); ++k) {
            if (jaro_similarity(records[i], records[k]) >= threshold) {
                edges_out << i << ' ' << k << '\n';
                ++stats.edges;
            }
        }
    }
    return stats;
}

ImportStats import_citeseer(std::istream& in, std::ostream& edges_out) {
    const LoadedGraph loaded = build_from_edge_list(in);
    write_edge_list(edges_out, loaded.graph, loaded.tokens);
    return {loaded.graph.num_vertices(), loaded.graph.num_positive_edges()};
}

ImportStats import_mushrooms(std::istream& in, std::ostream& edges_out,
                             std::ostream* labels_out) {
    std::vector<std::string> classes;
    std::vector<std::vector<std::string>> features;
    std::string line;
    std::uint64_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() < 2)
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected a class field and at least one feature");
        if (!features.empty() && fields.size() - 1 != features.front().size())
            throw ParseError("line " + std::to_string(line_number) +
                             ": inconsistent feature count");
        classes.push_back(fields.front());
        features.emplace_back(fields.begin() + 1, fields.end());
    }

    ImportStats stats{features.size(), 0};
    const std::size_t f = features.empty() ? 0 : features.front().size();
    const std::size_t max_diff = f / 2;
    for (std::size_t i = 0; i + 1 < features.size(); ++i) {
        for (std::size_t k = i + 1; k < features.size(); ++k) {
            std::size_t diff = 0;
            for (std::size_t c = 0; c < f && diff <= max_diff; ++c)
                if (features[i][c] != features[k][c]) ++diff;
            if (diff <= max_diff) {
                edges_out << i << ' ' << k << '\n';
                ++stats.edges;
            }
        }
    }
    if (labels_out)
        for (std::size_t i = 0; i < classes.size(); ++i)
            *labels_out << i << ' ' << classes[i] << '\n';
    return stats;
}

}  // namespace qecc
