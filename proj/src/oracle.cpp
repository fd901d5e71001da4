#include "bei/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "bei/errors.hpp"
#include "bei/rank.hpp"

namespace bei {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    std::atomic<uint64_t>* faces;
    uint64_t max_faces;

    void check_time() const {
        if (Clock::now() > end) throw resource_limit_error("oracle wall-clock budget exceeded");
    }
    void charge_faces(uint64_t n) const {
        if (faces->fetch_add(n) + n > max_faces)
            throw resource_limit_error("oracle face budget exceeded");
    }
};

std::vector<int> mask_columns(VarMask m) {
    std::vector<int> cols;
    while (m) {
        cols.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return cols;
}

// Faces of the Stanley-Reisner complex restricted to W, grouped by size.
// A subset is a face iff it contains no generator, which the DFS checks
// incrementally: adding column b can only complete generators containing b.
std::vector<std::vector<VarMask>> enumerate_faces(VarMask w, const std::vector<VarMask>& gens,
                                                  const Deadline& dl) {
    std::vector<int> cols = mask_columns(w);
    std::vector<std::vector<VarMask>> by_size(cols.size() + 1);
    std::vector<std::vector<VarMask>> gens_with(64);
    for (VarMask g : gens)
        if ((g & ~w) == 0)
            for (int c : mask_columns(g)) gens_with[static_cast<std::size_t>(c)].push_back(g);
    uint64_t count = 0;
    auto dfs = [&](auto&& self, std::size_t from, VarMask cur, int size) -> void {
        by_size[static_cast<std::size_t>(size)].push_back(cur);
        if ((++count & 0xfff) == 0) {
            dl.check_time();
            dl.charge_faces(0x1000);
        }
        for (std::size_t idx = from; idx < cols.size(); ++idx) {
            VarMask cand = cur | (VarMask(1) << cols[idx]);
            bool face = true;
            for (VarMask g : gens_with[static_cast<std::size_t>(cols[idx])])
                if ((g & ~cand) == 0) {
                    face = false;
                    break;
                }
            if (face) self(self, idx + 1, cand, size + 1);
        }
    };
    dfs(dfs, 0, 0, 0);
    dl.charge_faces(count & 0xfff);
    while (by_size.size() > 1 && by_size.back().empty()) by_size.pop_back();
    return by_size;
}

// e[k] = dim of reduced homology in degree k-1 of the complex, k = 0..dim+1,
// from exact ranks of the boundary maps (the empty face is the single
// 0-chain, so e[0] handles H~_{-1}).
std::vector<long long> homology_evector(VarMask w, const std::vector<VarMask>& gens,
                                        long field_char, const Deadline& dl) {
    auto faces = enumerate_faces(w, gens, dl);
    int top = static_cast<int>(faces.size()) - 1;
    for (auto& level : faces) std::sort(level.begin(), level.end());
    std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        const auto& below = faces[static_cast<std::size_t>(k - 1)];
        std::vector<SparseIntRow> rows;
        rows.reserve(faces[static_cast<std::size_t>(k)].size());
        for (VarMask f : faces[static_cast<std::size_t>(k)]) {
            SparseIntRow row;
            int t = 0;
            VarMask rem = f;
            while (rem) {
                VarMask bit = rem & (~rem + 1);
                VarMask sub = f & ~bit;
                auto it = std::lower_bound(below.begin(), below.end(), sub);
                row.emplace_back(static_cast<int>(it - below.begin()), (t & 1) ? -1 : 1);
                rem &= rem - 1;
                ++t;
            }
            rows.push_back(std::move(row));
        }
        dl.check_time();
        ranks[static_cast<std::size_t>(k)] = sparse_rank(rows, field_char);
    }
    std::vector<long long> e(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k)
        e[static_cast<std::size_t>(k)] =
            static_cast<long long>(faces[static_cast<std::size_t>(k)].size()) -
            ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
    while (e.size() > 1 && e.back() == 0) e.pop_back();
    return e;
}

std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Connected components of the generators inside W under shared variables;
// returns one mask per component. Every variable of W lies in some generator
// when W is union-closed.
std::vector<VarMask> component_masks(VarMask w, const std::vector<VarMask>& gens) {
    std::vector<VarMask> groups;
    for (VarMask g : gens) {
        if ((g & ~w) != 0) continue;
        VarMask merged = g;
        std::vector<VarMask> next;
        for (VarMask grp : groups) {
            if (grp & merged)
                merged |= grp;
            else
                next.push_back(grp);
        }
        next.push_back(merged);
        groups = std::move(next);
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

}  // namespace

std::string monomial_name(VarMask m, int n) {
    std::string s;
    for (int c : mask_columns(m)) {
        if (!s.empty()) s += "*";
        s += RingVariable::from_column(c, n).name();
    }
    return s.empty() ? "1" : s;
}

std::vector<std::string> MonomialIdeal::generator_names() const {
    std::vector<std::string> out;
    out.reserve(gens.size());
    for (VarMask g : gens) out.push_back(monomial_name(g, n));
    return out;
}

std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
    std::vector<AdmissiblePath> out;
    int n = g.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // interiors must be < i or > j
            VertexSet pool;
            for (int v = 1; v < i; ++v) pool.insert(v);
            for (int v = j + 1; v <= n; ++v) pool.insert(v);
            // collect interior sets of all such i-j paths; keep the
            // inclusion-minimal ones (an edge makes the empty set minimal and
            // dominates everything else)
            std::map<VertexSet, std::vector<int>, SetOrderLess> interiors;
            if (g.has_edge(i, j)) {
                interiors[VertexSet{}] = {};
            } else {
                std::vector<int> seq;
                VertexSet used;
                auto dfs = [&](auto&& self, int at) -> void {
                    const VertexSet& nb = g.neighbors(at);
                    if (nb.contains(j)) {
                        VertexSet key = used;
                        if (!interiors.count(key)) interiors[key] = seq;
                    }
                    VertexSet cand = nb & pool;
                    cand -= used;
                    for (int u = cand.min(); u != 0; u = cand.next(u)) {
                        used.insert(u);
                        seq.push_back(u);
                        self(self, u);
                        seq.pop_back();
                        used.erase(u);
                    }
                };
                dfs(dfs, i);
            }
            std::vector<std::pair<VertexSet, std::vector<int>>> minimal;
            for (const auto& [set, seq] : interiors) {  // iterated smallest-first
                bool dominated = false;
                for (const auto& [kept, kseq] : minimal)
                    if (kept.is_subset_of(set)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) minimal.emplace_back(set, seq);
            }
            for (auto& [set, seq] : minimal) {
                AdmissiblePath p;
                p.i = i;
                p.j = j;
                p.interior = seq;
                p.monomial = (VarMask(1) << (i - 1)) | (VarMask(1) << (n + j - 1));
                for (int v = set.min(); v != 0; v = set.next(v)) {
                    if (v > j)
                        p.monomial |= VarMask(1) << (v - 1);  // x_v
                    else
                        p.monomial |= VarMask(1) << (n + v - 1);  // y_v
                }
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

MonomialIdeal initial_ideal(const Graph& g) {
    MonomialIdeal mi;
    mi.n = g.n();
    std::vector<VarMask> all;
    for (const AdmissiblePath& p : admissible_paths(g)) all.push_back(p.monomial);
    std::sort(all.begin(), all.end(), [](VarMask a, VarMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (VarMask m : all) {
        bool dominated = false;
        for (VarMask kept : mi.gens)
            if ((kept & ~m) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) mi.gens.push_back(m);
    }
    return mi;
}

BettiTable betti_table(const MonomialIdeal& mi, const OracleOptions& opts) {
    if (2 * mi.n > opts.max_vars)
        throw resource_limit_error("ring has " + std::to_string(2 * mi.n) +
                                   " variables, above the cap of " +
                                   std::to_string(opts.max_vars));
    if (opts.field_char != 0 && !is_prime(opts.field_char))
        throw std::invalid_argument("field characteristic must be 0 or prime");
    std::atomic<uint64_t> face_counter{0};
    Deadline dl{Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(opts.wall_limit)),
                &face_counter, opts.max_faces};
    BettiTable table;

    if (!opts.prune) {
        // reference path: every subset of the full variable set, homology by
        // direct rank computation, no shortcuts
        if (2 * mi.n > 24)
            throw resource_limit_error("unpruned enumeration limited to 24 variables");
        for (VarMask w = 0; w < (VarMask(1) << (2 * mi.n)); ++w) {
            dl.check_time();
            auto e = homology_evector(w, mi.gens, opts.field_char, dl);
            int size = std::popcount(w);
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) table.add(size - static_cast<int>(k), size, e[k]);
        }
        return table;
    }

    // Only subsets that equal the union of the generators inside them can
    // carry homology: any other W has a vertex outside that union, and such a
    // vertex is an apex making the restricted complex a cone. Survivors are
    // split into variable-disjoint components, whose homology multiplies as a
    // join (convolution of the e-vectors), so each distinct connected piece
    // is computed once.
    VarMask support = 0;
    for (VarMask g : mi.gens) support |= g;
    std::vector<int> sup_cols = mask_columns(support);
    int s = static_cast<int>(sup_cols.size());

    std::vector<VarMask> survivors;
    std::map<VarMask, int> comp_id;
    std::vector<VarMask> comp_masks;
    std::vector<std::vector<int>> survivor_comps;
    for (uint64_t sub = 0; sub < (uint64_t(1) << s); ++sub) {
        VarMask w = 0;
        for (int b = 0; b < s; ++b)
            if (sub & (uint64_t(1) << b)) w |= VarMask(1) << sup_cols[static_cast<std::size_t>(b)];
        VarMask covered = 0;
        for (VarMask g : mi.gens)
            if ((g & ~w) == 0) covered |= g;
        if (covered != w) continue;
        std::vector<int> ids;
        for (VarMask c : component_masks(w, mi.gens)) {
            auto [it, fresh] = comp_id.emplace(c, static_cast<int>(comp_masks.size()));
            if (fresh) comp_masks.push_back(c);
            ids.push_back(it->second);
        }
        survivors.push_back(w);
        survivor_comps.push_back(std::move(ids));
        if ((survivors.size() & 0x3ff) == 0) dl.check_time();
    }

    std::vector<std::vector<long long>> evecs(comp_masks.size());
    unsigned hw = std::thread::hardware_concurrency();
    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::clamp(hw, 1u, 8u));
    threads = std::min<int>(threads, std::max<int>(1, static_cast<int>(comp_masks.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < comp_masks.size(); ++i)
            evecs[i] = homology_evector(comp_masks[i], mi.gens, opts.field_char, dl);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    while (true) {
                        std::size_t i = cursor.fetch_add(1);
                        if (i >= comp_masks.size()) break;
                        evecs[i] = homology_evector(comp_masks[i], mi.gens, opts.field_char, dl);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (std::size_t si = 0; si < survivors.size(); ++si) {
        std::vector<long long> e{1};
        for (int id : survivor_comps[si]) e = convolve(e, evecs[static_cast<std::size_t>(id)]);
        int size = std::popcount(survivors[si]);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) table.add(size - static_cast<int>(k), size, e[k]);
    }
    return table;
}

OracleSummary oracle_summary(const Graph& g, const OracleOptions& opts) {
    OracleSummary s;
    s.table = betti_table(initial_ideal(g), opts);
    s.reg = s.table.reg();
    s.pd = s.table.pd();
    s.extremal = s.table.extremal();
    return s;
}

}  // namespace bei
