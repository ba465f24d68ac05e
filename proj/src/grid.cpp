#include "holant/grid.hpp"

#include "holant/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holant {

SignatureGrid SignatureGrid::canonical(const SymSig3& f, int nl, int nr,
                                       const std::vector<std::pair<int, int>>& incidences) {
    SignatureGrid g;
    g.lhs.assign(nl, DenseSig::from_sym3_lhs(f));
    g.rhs.assign(nr, DenseSig::eq3_rhs());
    std::vector<int> lport(nl, 0), rport(nr, 0);
    for (auto [l, r] : incidences) {
        if (l < 0 || l >= nl || r < 0 || r >= nr)
            throw input_error("grid: edge endpoint out of range");
        g.edges.push_back({{GridSide::LHS, l, lport[l]++}, {GridSide::RHS, r, rport[r]++}});
    }
    g.validate();
    return g;
}

const DenseSig& SignatureGrid::sig(GridSide side, int v) const {
    switch (side) {
        case GridSide::LHS: return lhs[v];
        case GridSide::RHS: return rhs[v];
        case GridSide::Straddled: return straddled[v];
    }
    throw internal_error("bad side");
}

void SignatureGrid::validate() const {
    auto count = [&](GridSide side) {
        switch (side) {
            case GridSide::LHS: return lhs.size();
            case GridSide::RHS: return rhs.size();
            default: return straddled.size();
        }
    };
    std::map<std::tuple<int, int, int>, int> used;
    auto touch = [&](const End& e) {
        if (e.vertex < 0 || static_cast<std::size_t>(e.vertex) >= count(e.side))
            throw input_error("grid: vertex out of range");
        const DenseSig& s = sig(e.side, e.vertex);
        if (e.port < 0 || e.port >= s.arity) throw input_error("grid: port out of range");
        if (++used[{static_cast<int>(e.side), e.vertex, e.port}] > 1)
            throw input_error("grid: port used twice");
    };
    for (const Edge& e : edges) {
        touch(e.a);
        touch(e.b);
    }
    std::size_t total_ports = 0;
    for (const DenseSig& s : lhs) total_ports += s.arity;
    for (const DenseSig& s : rhs) total_ports += s.arity;
    for (const DenseSig& s : straddled) total_ports += s.arity;
    if (total_ports != 2 * edges.size()) throw input_error("grid: unused ports remain");
}

SymSig3 SignatureGrid::common_lhs_sym3() const {
    if (lhs.empty()) throw input_error("grid: no LHS vertices");
    auto w = lhs[0].symmetric_weights();
    if (!w || lhs[0].arity != 3) throw input_error("grid: LHS signature not symmetric ternary");
    for (const DenseSig& s : lhs)
        if (!(s == lhs[0])) throw input_error("grid: LHS signatures differ");
    return {(*w)[0].as_rat(), (*w)[1].as_rat(), (*w)[2].as_rat(), (*w)[3].as_rat()};
}

bool SignatureGrid::rhs_all_eq3() const {
    DenseSig eq = DenseSig::eq3_rhs();
    for (const DenseSig& s : rhs)
        if (!(s == eq)) return false;
    return true;
}

int brute_force_cap() {
    if (const char* env = std::getenv("HOLANT_BRUTE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 28;
}

namespace {

// Flattened tensor network: global vertex ids, per-edge endpoint (vertex,
// port) pairs, edges reordered so vertices complete early for pruning.
struct FlatNet {
    std::vector<const DenseSig*> sigs;
    std::vector<std::array<std::pair<int, int>, 2>> edge_ends;

    explicit FlatNet(const SignatureGrid& g) {
        g.validate();
        auto base = [&](GridSide s) {
            if (s == GridSide::LHS) return 0;
            if (s == GridSide::RHS) return static_cast<int>(g.lhs.size());
            return static_cast<int>(g.lhs.size() + g.rhs.size());
        };
        for (const DenseSig& s : g.lhs) sigs.push_back(&s);
        for (const DenseSig& s : g.rhs) sigs.push_back(&s);
        for (const DenseSig& s : g.straddled) sigs.push_back(&s);
        for (const auto& e : g.edges)
            edge_ends.push_back({std::make_pair(base(e.a.side) + e.a.vertex, e.a.port),
                                 std::make_pair(base(e.b.side) + e.b.vertex, e.b.port)});
        reorder();
    }

    void reorder() {
        // Visit vertices in order, grouping each vertex's remaining edges so
        // vertex completions (and zero prunes) happen as early as possible.
        std::vector<std::vector<int>> incident(sigs.size());
        for (std::size_t e = 0; e < edge_ends.size(); ++e) {
            incident[edge_ends[e][0].first].push_back(static_cast<int>(e));
            incident[edge_ends[e][1].first].push_back(static_cast<int>(e));
        }
        std::vector<int> order;
        std::vector<bool> seen(edge_ends.size(), false);
        for (std::size_t v = 0; v < sigs.size(); ++v)
            for (int e : incident[v])
                if (!seen[e]) {
                    seen[e] = true;
                    order.push_back(e);
                }
        std::vector<std::array<std::pair<int, int>, 2>> out;
        out.reserve(edge_ends.size());
        for (int e : order) out.push_back(edge_ends[e]);
        edge_ends = std::move(out);
    }
};

struct BruteEval {
    const FlatNet& net;
    std::vector<std::size_t> idx;
    std::vector<int> remaining;
    QuadExt total{0};

    explicit BruteEval(const FlatNet& n) : net(n) {
        idx.assign(net.sigs.size(), 0);
        remaining.resize(net.sigs.size());
        for (std::size_t v = 0; v < net.sigs.size(); ++v) remaining[v] = net.sigs[v]->arity;
    }

    void set_bit(int vertex, int port, int bit) {
        if (bit) idx[vertex] |= std::size_t(1) << (net.sigs[vertex]->arity - 1 - port);
    }
    void clear_bit(int vertex, int port, int bit) {
        if (bit) idx[vertex] &= ~(std::size_t(1) << (net.sigs[vertex]->arity - 1 - port));
    }

    // Assigns edge e to bit; returns false when a completed vertex is zero.
    // Always leaves the state fully applied (caller must always undo).
    bool apply(std::size_t e, int bit, QuadExt& weight) {
        auto [u, v] = net.edge_ends[e];
        set_bit(u.first, u.second, bit);
        --remaining[u.first];
        set_bit(v.first, v.second, bit);
        --remaining[v.first];
        bool live = true;
        if (remaining[u.first] == 0) {
            const QuadExt& val = net.sigs[u.first]->at(idx[u.first]);
            if (val.is_zero())
                live = false;
            else
                weight *= val;
        }
        if (live && remaining[v.first] == 0) {
            const QuadExt& val = net.sigs[v.first]->at(idx[v.first]);
            if (val.is_zero())
                live = false;
            else
                weight *= val;
        }
        return live;
    }

    void undo(std::size_t e, int bit) {
        auto [u, v] = net.edge_ends[e];
        ++remaining[u.first];
        clear_bit(u.first, u.second, bit);
        ++remaining[v.first];
        clear_bit(v.first, v.second, bit);
    }

    void dfs(std::size_t e, const QuadExt& acc) {
        if (e == net.edge_ends.size()) {
            total += acc;
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            QuadExt w = acc;
            if (apply(e, bit, w)) dfs(e + 1, w);
            undo(e, bit);
        }
    }

    // Assigns the first `prefix` edges according to mask, then runs the DFS
    // over the rest.  Used to partition the space across workers.
    QuadExt run_prefix(std::size_t prefix, std::size_t mask) {
        QuadExt w(1);
        bool live = true;
        std::size_t applied = 0;
        for (; applied < prefix; ++applied) {
            int bit = (mask >> applied) & 1;
            if (!apply(applied, bit, w)) {
                ++applied;
                live = false;
                break;
            }
        }
        if (live) dfs(prefix, w);
        QuadExt result = total;
        for (std::size_t k = applied; k-- > 0;) undo(k, (mask >> k) & 1);
        total = QuadExt(0);
        return result;
    }
};

void check_cap(const SignatureGrid& g, int cap) {
    int limit = cap > 0 ? cap : brute_force_cap();
    if (g.edge_count() > limit)
        throw cap_exceeded("eval_brute: " + std::to_string(g.edge_count()) +
                           " edges exceeds cap " + std::to_string(limit));
}

}  // namespace

QuadExt eval_brute_serial(const SignatureGrid& g, int cap) {
    check_cap(g, cap);
    FlatNet net(g);
    BruteEval ev(net);
    ev.dfs(0, QuadExt(1));
    return ev.total;
}

QuadExt eval_brute(const SignatureGrid& g, int cap) {
    check_cap(g, cap);
    FlatNet net(g);
    const std::size_t nedges = net.edge_ends.size();
#ifdef _OPENMP
    if (nedges >= 10) {
        const std::size_t prefix = std::min<std::size_t>(8, nedges);
        const std::size_t blocks = std::size_t(1) << prefix;
        int nthreads = omp_get_max_threads();
        std::vector<QuadExt> partial(nthreads, QuadExt(0));
#pragma omp parallel
        {
            BruteEval ev(net);
            int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic)
            for (long long mask = 0; mask < static_cast<long long>(blocks); ++mask)
                partial[tid] += ev.run_prefix(prefix, static_cast<std::size_t>(mask));
        }
        QuadExt total(0);
        for (const QuadExt& p : partial) total += p;
        return total;
    }
#endif
    BruteEval ev(net);
    ev.dfs(0, QuadExt(1));
    return ev.total;
}

// --- dp contraction ------------------------------------------------------------

namespace {

struct Tensor {
    std::vector<int> legs;  // edge ids, position = variable order (big-endian)
    std::vector<QuadExt> vals;
};

Tensor contract_pair(const Tensor& A, const Tensor& B) {
    std::vector<int> shared;
    for (int l : A.legs)
        if (std::find(B.legs.begin(), B.legs.end(), l) != B.legs.end()) shared.push_back(l);

    std::vector<int> out_legs;
    std::vector<int> a_keep, b_keep;  // positions
    for (std::size_t i = 0; i < A.legs.size(); ++i)
        if (std::find(shared.begin(), shared.end(), A.legs[i]) == shared.end()) {
            out_legs.push_back(A.legs[i]);
            a_keep.push_back(static_cast<int>(i));
        }
    for (std::size_t i = 0; i < B.legs.size(); ++i)
        if (std::find(shared.begin(), shared.end(), B.legs[i]) == shared.end()) {
            out_legs.push_back(B.legs[i]);
            b_keep.push_back(static_cast<int>(i));
        }
    std::vector<int> a_shared, b_shared;
    for (int l : shared) {
        a_shared.push_back(static_cast<int>(
            std::find(A.legs.begin(), A.legs.end(), l) - A.legs.begin()));
        b_shared.push_back(static_cast<int>(
            std::find(B.legs.begin(), B.legs.end(), l) - B.legs.begin()));
    }

    int na = static_cast<int>(A.legs.size()), nb = static_cast<int>(B.legs.size());
    int nout = static_cast<int>(out_legs.size()), ns = static_cast<int>(shared.size());
    int a_out = static_cast<int>(a_keep.size());

    Tensor R;
    R.legs = out_legs;
    R.vals.assign(std::size_t(1) << nout, QuadExt(0));
    for (std::size_t o = 0; o < R.vals.size(); ++o) {
        QuadExt sum(0);
        for (std::size_t s = 0; s < (std::size_t(1) << ns); ++s) {
            std::size_t ia = 0, ib = 0;
            for (int k = 0; k < a_out; ++k)
                if ((o >> (nout - 1 - k)) & 1) ia |= std::size_t(1) << (na - 1 - a_keep[k]);
            for (int k = a_out; k < nout; ++k)
                if ((o >> (nout - 1 - k)) & 1)
                    ib |= std::size_t(1) << (nb - 1 - b_keep[k - a_out]);
            for (int k = 0; k < ns; ++k)
                if ((s >> k) & 1) {
                    ia |= std::size_t(1) << (na - 1 - a_shared[k]);
                    ib |= std::size_t(1) << (nb - 1 - b_shared[k]);
                }
            if (A.vals[ia].is_zero() || B.vals[ib].is_zero()) continue;
            sum += A.vals[ia] * B.vals[ib];
        }
        R.vals[o] = sum;
    }
    return R;
}

}  // namespace

QuadExt eval_dp(const SignatureGrid& g, int arity_cap) {
    g.validate();
    FlatNet net(g);
    std::vector<Tensor> ts(net.sigs.size());
    for (std::size_t v = 0; v < net.sigs.size(); ++v) {
        ts[v].legs.assign(net.sigs[v]->arity, -1);
        ts[v].vals = net.sigs[v]->values;
    }
    for (std::size_t e = 0; e < net.edge_ends.size(); ++e) {
        auto [u, v] = net.edge_ends[e];
        ts[u.first].legs[u.second] = static_cast<int>(e);
        ts[v.first].legs[v.second] = static_cast<int>(e);
    }

    std::vector<Tensor> live = std::move(ts);
    while (live.size() > 1) {
        int bi = -1, bj = -1, best = 1 << 30;
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                int shared = 0;
                for (int l : live[i].legs)
                    if (std::find(live[j].legs.begin(), live[j].legs.end(), l) !=
                        live[j].legs.end())
                        ++shared;
                if (shared == 0) continue;
                int result =
                    static_cast<int>(live[i].legs.size() + live[j].legs.size()) - 2 * shared;
                if (result < best) {
                    best = result;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        if (bi < 0) break;  // only disconnected scalars remain
        if (best > arity_cap)
            throw cap_exceeded("eval_dp: intermediate arity " + std::to_string(best) +
                               " exceeds cap " + std::to_string(arity_cap));
        Tensor merged = contract_pair(live[bi], live[bj]);
        live.erase(live.begin() + bj);
        live[bi] = std::move(merged);
    }
    QuadExt total(1);
    for (const Tensor& t : live) {
        if (!t.legs.empty()) throw internal_error("eval_dp: dangling legs remain");
        total *= t.vals[0];
    }
    return total;
}

// --- set systems ---------------------------------------------------------------

void SetSystem::validate() const {
    std::vector<int> deg(element_count, 0);
    for (const auto& s : sets)
        for (int x : s) {
            if (x < 0 || x >= element_count) throw input_error("set system: element out of range");
            ++deg[x];
        }
    for (int d : deg)
        if (d != 3) throw input_error("set system: every element must fill exactly 3 slots");
}

SignatureGrid from_set_system(const SetSystem& s) {
    s.validate();
    std::vector<std::pair<int, int>> inc;
    for (std::size_t j = 0; j < s.sets.size(); ++j)
        for (int x : s.sets[j]) inc.emplace_back(x, static_cast<int>(j));
    return SignatureGrid::canonical(SymSig3{1, 0, -1, 2}, s.element_count,
                                    static_cast<int>(s.sets.size()), inc);
}

Rat cover_value(const SetSystem& s, int set_cap) {
    s.validate();
    int k = static_cast<int>(s.sets.size());
    if (k > set_cap)
        throw cap_exceeded("cover_value: " + std::to_string(k) + " sets exceeds cap " +
                           std::to_string(set_cap));
    Rat total(0);
    std::vector<int> cover(s.element_count, 0);
    // DFS over subfamilies with incremental coverage counts.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            long l = 0, h = 0;
            for (int c : cover) {
                if (c == 1) return;  // not leafless
                if (c == 2) ++l;
                if (c == 3) ++h;
            }
            Rat term = (l % 2 == 0) ? Rat(1) : Rat(-1);
            for (long j = 0; j < h; ++j) term *= 2;
            total += term;
            return;
        }
        self(self, i + 1);
        for (int x : s.sets[i]) ++cover[x];
        self(self, i + 1);
        for (int x : s.sets[i]) --cover[x];
    };
    rec(rec, 0);
    return total;
}

// --- ledger / holographic transform ---------------------------------------------

void ScalarLedger::mul(const Rat& r) { rational_factor *= r; }

void ScalarLedger::mul_pow(const Rat& base, long exp) {
    for (auto& [b, e] : power_terms)
        if (b == base) {
            e += exp;
            return;
        }
    power_terms.emplace_back(base, exp);
}

Rat ScalarLedger::collapse() const {
    Rat r = rational_factor;
    for (const auto& [b, e] : power_terms) r *= rat_pow(b, e);
    return r;
}

std::string ScalarLedger::str() const {
    std::string s = rat_str(rational_factor);
    for (const auto& [b, e] : power_terms)
        s += " * (" + rat_str(b) + ")^" + std::to_string(e);
    return s;
}

std::pair<SignatureGrid, ScalarLedger> apply_holo_to_grid(const SignatureGrid& g, const Mat2& m) {
    if (m.det().is_zero()) throw input_error("apply_holo_to_grid: singular matrix");
    if (!g.straddled.empty())
        throw input_error("apply_holo_to_grid: straddled vertices unsupported");
    SignatureGrid out = g;
    ScalarLedger ledger;
    for (DenseSig& s : out.lhs) s = holo_transform_row(s, m);
    for (DenseSig& s : out.rhs) {
        auto [t, scalar] = holo_transform_col(s, m);
        s = std::move(t);
        ledger.mul_pow(scalar, 1);
    }
    return {out, ledger};
}

// --- tractable closed forms -------------------------------------------------------

namespace {

// Union-find over grid vertices (LHS then RHS).
struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Rat tractable_eval(const SignatureGrid& g) {
    if (!g.straddled.empty() || !g.rhs_all_eq3())
        throw input_error("tractable_eval: canonical grid with =3 on the RHS required");
    SymSig3 f = g.common_lhs_sym3();
    SigClass cls = classify_form(f);

    if (cls.kind == SigClassKind::Degenerate) {
        const auto& d = *cls.degenerate;
        Rat per_rhs = d.u0 * d.u0 * d.u0 + d.u1 * d.u1 * d.u1;
        return rat_pow(d.scale, static_cast<long>(g.lhs.size())) *
               rat_pow(per_rhs, static_cast<long>(g.rhs.size()));
    }
    if (cls.kind == SigClassKind::GenEq) {
        int nl = static_cast<int>(g.lhs.size()), nr = static_cast<int>(g.rhs.size());
        UF uf(nl + nr);
        for (const auto& e : g.edges) {
            int a = e.a.side == GridSide::LHS ? e.a.vertex : nl + e.a.vertex;
            int b = e.b.side == GridSide::LHS ? e.b.vertex : nl + e.b.vertex;
            uf.join(a, b);
        }
        std::map<int, long> lhs_in_comp;
        for (int v = 0; v < nl; ++v) ++lhs_in_comp[uf.find(v)];
        // RHS-only components contribute a factor 2 (both constant assignments,
        // each giving an empty product = 1).
        std::map<int, bool> comp_seen;
        for (int v = 0; v < nl + nr; ++v) comp_seen.emplace(uf.find(v), false);
        Rat total(1);
        for (auto& [root, _] : comp_seen) {
            long c = lhs_in_comp.count(root) ? lhs_in_comp[root] : 0;
            total *= rat_pow(f.f0, c) + rat_pow(f.f3, c);
        }
        return total;
    }
    throw input_error("tractable_eval: signature is neither degenerate nor Gen-Eq");
}

SignatureGrid insert_straddled(const SignatureGrid& g, const std::vector<int>& slot_edges,
                               const std::vector<Mat2>& mats) {
    if (mats.size() != slot_edges.size() && mats.size() != 1)
        throw input_error("insert_straddled: one matrix per slot (or a single shared one)");
    SignatureGrid out = g;
    for (std::size_t k = 0; k < slot_edges.size(); ++k) {
        int e = slot_edges[k];
        if (e < 0 || e >= g.edge_count()) throw input_error("insert_straddled: bad edge index");
        const Mat2& m = mats[mats.size() == 1 ? 0 : k];
        DenseSig d;
        d.arity = 2;
        d.lhs_exposed = 1;
        d.rhs_exposed = 1;
        d.values = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
        out.straddled.push_back(d);
        int sv = static_cast<int>(out.straddled.size()) - 1;

        // Orient: port 0 (row index) faces the RHS endpoint of the old edge.
        SignatureGrid::Edge old = out.edges[e];
        SignatureGrid::End to_rhs = old.a, to_lhs = old.b;
        if (to_rhs.side == GridSide::LHS) std::swap(to_rhs, to_lhs);
        if (to_rhs.side != GridSide::RHS || to_lhs.side != GridSide::LHS)
            throw input_error("insert_straddled: slot edge must join LHS to RHS");
        out.edges[e] = {SignatureGrid::End{GridSide::Straddled, sv, 0}, to_rhs};
        out.edges.push_back({to_lhs, SignatureGrid::End{GridSide::Straddled, sv, 1}});
    }
    out.validate();
    return out;
}

SignatureGrid random_canonical_grid(const SymSig3& f, int n, std::mt19937_64& rng) {
    std::vector<int> ports(3 * n);
    std::iota(ports.begin(), ports.end(), 0);
    std::shuffle(ports.begin(), ports.end(), rng);
    std::vector<std::pair<int, int>> inc;
    for (int i = 0; i < 3 * n; ++i) inc.emplace_back(i / 3, ports[i] / 3);
    return SignatureGrid::canonical(f, n, n, inc);
}

}  // namespace holant
