#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace qecc {

// Jaro string similarity in [0,1]; 1 for identical strings, 0 when there
// are no matching characters.
double jaro_similarity(std::string_view a, std::string_view b);

struct ImportStats {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
};

// One record string per line; records are joined by a positive edge when
// their Jaro similarity is at least 0.5. Emitted vertex tokens are the
// 0-based record indices.
ImportStats import_cora(std::istream& in, std::ostream& edges_out, double threshold = 0.5);

// Citation pairs, one per line ("a b" in arbitrary tokens); emits the
// pairs as an undirected edge list with self-citations dropped and
// duplicates merged.
ImportStats import_citeseer(std::istream& in, std::ostream& edges_out);

// Comma-separated records whose first field is the class label. The
// class field is removed and two records are joined when they differ on
// at most floor(f/2) of the remaining f features. Emits the class labels
// as ground truth when labels_out is given. Vertex tokens are 0-based
// record indices.
ImportStats import_mushrooms(std::istream& in, std::ostream& edges_out,
                             std::ostream* labels_out = nullptr);

}  // namespace qecc
