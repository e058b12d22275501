#include "nkteam/landscape.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "nkteam/format.hpp"

namespace nkteam {

InteractionMatrix build_interaction_matrix(int n, int m, int k) {
    if (n < 1 || m < 1 || n % m != 0)
        throw std::invalid_argument("build_interaction_matrix: n must be a positive multiple of m");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("build_interaction_matrix: k must lie in [0, n-1]");

    InteractionMatrix matrix{n, m, k, {}};
    matrix.depends.resize(static_cast<std::size_t>(n));
    const int s = n / m;
    for (int d = 0; d < n; ++d) {
        auto& deps = matrix.depends[static_cast<std::size_t>(d)];
        deps.reserve(static_cast<std::size_t>(k));
        const int block = d / s;
        // Own block-mates first (ascending), then cross-block dependencies
        // round-robin over the following blocks by position, until k are
        // collected. k = s-1 is block-diagonal; k = n-1 is the full matrix.
        for (int i = block * s; i < (block + 1) * s && static_cast<int>(deps.size()) < k; ++i)
            if (i != d) deps.push_back(i);
        for (int pos = 0; pos < s && static_cast<int>(deps.size()) < k; ++pos)
            for (int off = 1; off < m && static_cast<int>(deps.size()) < k; ++off)
                deps.push_back(((block + off) % m) * s + pos);
    }
    return matrix;
}

Landscape::Landscape(InteractionMatrix matrix, std::vector<double> tables)
    : matrix_(std::move(matrix)), tables_(std::move(tables)) {
    const int n = matrix_.n_decisions;
    const int k = matrix_.k;
    if (n < 1 || matrix_.n_slots < 1 || n % matrix_.n_slots != 0)
        throw std::invalid_argument("Landscape: malformed interaction matrix");
    if (static_cast<int>(matrix_.depends.size()) != n)
        throw std::invalid_argument("Landscape: dependency row count mismatch");
    table_size_ = std::size_t{1} << (k + 1);
    if (tables_.size() != table_size_ * static_cast<std::size_t>(n))
        throw std::invalid_argument("Landscape: table size mismatch");
    for (double v : tables_)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("Landscape: contribution outside [0,1]");

    offsets_.resize(static_cast<std::size_t>(n));
    sources_.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        const auto& deps = matrix_.depends[static_cast<std::size_t>(d)];
        if (static_cast<int>(deps.size()) != k)
            throw std::invalid_argument("Landscape: dependency row length mismatch");
        offsets_[static_cast<std::size_t>(d)] = static_cast<std::size_t>(d) * table_size_;
        auto& src = sources_[static_cast<std::size_t>(d)];
        src.reserve(static_cast<std::size_t>(k) + 1);
        src.push_back(d);  // own bit is most significant in the table index
        for (int dep : deps) {
            if (dep < 0 || dep >= n || dep == d)
                throw std::invalid_argument("Landscape: dependency index out of range");
            src.push_back(dep);
        }
    }
}

Landscape generate_landscape(const InteractionMatrix& matrix, SplitMix64& rng) {
    const std::size_t table_size = std::size_t{1} << (matrix.k + 1);
    std::vector<double> tables;
    tables.reserve(table_size * static_cast<std::size_t>(matrix.n_decisions));
    // Fixed draw order: decision-major, bit pattern ascending.
    for (int d = 0; d < matrix.n_decisions; ++d)
        for (std::size_t pattern = 0; pattern < table_size; ++pattern)
            tables.push_back(rng.next_unit());
    return Landscape(matrix, std::move(tables));
}

double agent_performance(const Landscape& l, FullSolution d, int slot) {
    if (slot < 0 || slot >= l.m())
        throw std::out_of_range("agent_performance: slot out of range");
    const int s = l.s();
    const int start = slot * s;
    double sum = 0.0;
    for (int i = start; i < start + s; ++i) sum += l.contribution(i, d);
    return sum / s;
}

double team_performance(const Landscape& l, FullSolution d) {
    // Slot-major summation (ascending within and across slots) keeps the
    // slot decomposition identity exact when s is a power of two.
    const int m = l.m();
    const int s = l.s();
    double total = 0.0;
    for (int slot = 0; slot < m; ++slot) {
        double part = 0.0;
        for (int i = slot * s; i < (slot + 1) * s; ++i) part += l.contribution(i, d);
        total += part;
    }
    return total / l.n();
}

OptimumResult global_optimum(const Landscape& l, int max_n) {
    if (l.n() > max_n)
        throw std::invalid_argument("global_optimum: n exceeds the exhaustive-search cap");
    const std::uint32_t count = 1u << l.n();
    OptimumResult best{FullSolution{0, l.n()}, -1.0};
    for (std::uint32_t enc = 0; enc < count; ++enc) {
        const FullSolution d{enc, l.n()};
        const double v = team_performance(l, d);
        if (v > best.value) {  // strict: ties keep the lowest encoding
            best.value = v;
            best.argmax = d;
        }
    }
    return best;
}

void write_landscape_csv(std::ostream& out, const Landscape& l) {
    out << "decision,dependencies,values\n";
    for (int d = 0; d < l.n(); ++d) {
        out << d << ',';
        const auto& deps = l.matrix().depends[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < deps.size(); ++i) {
            if (i) out << ';';
            out << deps[i];
        }
        out << ',';
        const auto table = l.table(d);
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (i) out << ';';
            out << format_double(table[i]);
        }
        out << '\n';
    }
}

}  // namespace nkteam
