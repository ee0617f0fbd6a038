#include "qecc/oracle.hpp"

#include <ostream>
#include <string>

#include "qecc/errors.hpp"

namespace qecc {

int BudgetedOracle::query(VertexId u, VertexId v) {
    if (u == v) throw DomainError("oracle query on a self-pair: " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (v >= graph_->num_vertices())
        throw DomainError("oracle query out of range: (" + std::to_string(u) + ", " +
                          std::to_string(v) + ")");

    const std::uint64_t key = pair_key(u, v);
    const auto cached = cache_.find(key);
    const bool charge = charge_duplicates_ || cached == cache_.end();
    if (charge && used_ == budget_)
        throw BudgetExhaustedError("query budget exhausted (Q=" + std::to_string(budget_) + ")");

    int sign;
    if (cached != cache_.end()) {
        sign = cached->second;
    } else {
        sign = graph_->edge_sign(u, v);
        cache_.emplace(key, sign);
    }
    if (charge) ++used_;
    transcript_.push_back({u, v, sign, charge});
    return sign;
}

std::vector<std::pair<VertexId, VertexId>> BudgetedOracle::query_pairs_list() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(transcript_.size());
    for (const auto& record : transcript_) pairs.emplace_back(record.u, record.v);
    return pairs;
}

void BudgetedOracle::dump_transcript_csv(std::ostream& out) const {
    out << "step,u,v,sign,charged\n";
    std::uint64_t step = 0;
    for (const auto& record : transcript_)
        out << step++ << ',' << record.u << ',' << record.v << ',' << record.sign << ','
            << (record.charged ? 1 : 0) << '\n';
}

}  // namespace qecc
