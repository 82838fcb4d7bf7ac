#include "coveralg/mengerian.hpp"

#include <algorithm>
#include <limits>

namespace coveralg {

Int min_cover_value(const Hypergraph& h, const std::vector<Int>& c) {
    if (c.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("min_cover_value: vector length != vertex count");
    for (Int x : c)
        if (x < 0) throw std::invalid_argument("min_cover_value: negative entry");
    Int best = std::numeric_limits<Int>::max();
    for (const auto& cover : minimal_k_covers(h, unit_weights(h), 1)) {
        Int value = 0;
        for (std::size_t v = 0; v < c.size(); ++v) value += cover.c[v] * c[v];
        best = std::min(best, value);
    }
    return best;
}

namespace {

struct PackingSearch {
    const Hypergraph& h;
    std::vector<Int> remaining;       // per-vertex capacity left
    std::vector<Int> box;             // per-edge cap against the original c
    std::vector<Int> suffix_box;      // sum of box from edge r onward
    Int best = 0;

    void visit(std::size_t r, Int total) {
        if (r == h.edge_count()) {
            best = std::max(best, total);
            return;
        }
        if (total + suffix_box[r] <= best) return;  // cannot improve
        Int cap = box[r];
        for (int v : h.edges[r]) cap = std::min(cap, remaining[v - 1]);
        // try larger multiplicities first so the bound above bites sooner
        for (Int b = cap; b >= 0; --b) {
            for (int v : h.edges[r]) remaining[v - 1] -= b;
            visit(r + 1, total + b);
            for (int v : h.edges[r]) remaining[v - 1] += b;
        }
    }
};

}  // namespace

Int max_packing_value(const Hypergraph& h, const std::vector<Int>& c) {
    if (c.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("max_packing_value: vector length != vertex count");
    for (Int x : c)
        if (x < 0) throw std::invalid_argument("max_packing_value: negative entry");
    PackingSearch search{h, c, {}, {}};
    search.box.resize(h.edge_count());
    for (std::size_t r = 0; r < h.edge_count(); ++r) {
        Int cap = std::numeric_limits<Int>::max();
        for (int v : h.edges[r]) cap = std::min(cap, c[v - 1]);
        search.box[r] = cap;
    }
    search.suffix_box.assign(h.edge_count() + 1, 0);
    for (std::size_t r = h.edge_count(); r-- > 0;)
        search.suffix_box[r] = search.suffix_box[r + 1] + search.box[r];
    search.visit(0, 0);
    return search.best;
}

MengerianReport is_mengerian_up_to(const Hypergraph& h, Int c_bound) {
    if (c_bound < 1)
        throw std::invalid_argument("is_mengerian_up_to: bound must be >= 1");
    if (h.n > 12)
        throw SizeCapError("is_mengerian_up_to: size cap exceeded (n > 12)");
    MengerianReport report;
    report.bound = c_bound;
    std::vector<Int> c(static_cast<std::size_t>(h.n), 0);
    while (true) {
        const Int mn = min_cover_value(h, c);
        const Int mx = max_packing_value(h, c);
        if (mn < mx)  // weak duality can only break on an implementation bug
            throw std::logic_error("is_mengerian_up_to: weak duality violated");
        if (mn != mx) {
            report.pass = false;
            report.witness_c = c;
            report.min_value = mn;
            report.max_value = mx;
            return report;
        }
        std::size_t i = c.size();
        while (i > 0 && c[i - 1] == c_bound) c[--i] = 0;
        if (i == 0) break;
        ++c[i - 1];
    }
    report.pass = true;
    return report;
}

HhtzReport hhtz_crosscheck(const Hypergraph& h, Int K, Int c_bound) {
    HhtzReport report;
    report.max_k = K;
    report.c_bound = c_bound;
    report.graded = is_standard_graded_up_to(h, unit_weights(h), K);
    report.mengerian = is_mengerian_up_to(blocker(h), c_bound);
    report.agreement = report.graded.standard == report.mengerian.pass;
    report.hard_inconsistency = report.graded.standard && !report.mengerian.pass;
    return report;
}

}  // namespace coveralg
