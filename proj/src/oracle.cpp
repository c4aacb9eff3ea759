#include "reconforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "reconforge/errors.hpp"

namespace reconforge {

namespace {

constexpr int max_host_vertices = 64;

struct HostMasks {
    int n = 0;
    std::uint64_t full = 0;
    std::uint64_t loops = 0;
    std::vector<std::uint64_t> adj; // adj[c] = closed neighbourhood bits of c

    explicit HostMasks(const Graph& h) : n(h.vertex_count()) {
        if (n > max_host_vertices)
            throw precondition_error("hom oracle supports hosts with at most 64 vertices, got " +
                                     std::to_string(n));
        full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        adj.assign(n, 0);
        for (int c = 0; c < n; ++c)
            for (int w : h.neighbours(c)) adj[c] |= std::uint64_t{1} << w;
        for (int c = 0; c < n; ++c)
            if (h.has_loop(c)) loops |= std::uint64_t{1} << c;
    }
};

struct Codec {
    int n = 0;
    int bits = 0;
    std::size_t words = 0;

    Codec(int n_g, int n_h) : n(n_g) {
        bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(1, n_h - 1)))));
        words = (static_cast<std::size_t>(n) * bits + 63) / 64;
        if (words == 0) words = 1;
    }
    void set(std::uint64_t* s, int v, int c) const {
        const std::size_t pos = static_cast<std::size_t>(v) * bits;
        const std::size_t w = pos >> 6;
        const int off = static_cast<int>(pos & 63);
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        s[w] = (s[w] & ~(mask << off)) | (static_cast<std::uint64_t>(c) << off);
        if (off + bits > 64) {
            const int hi = off + bits - 64;
            const std::uint64_t himask = (std::uint64_t{1} << hi) - 1;
            s[w + 1] = (s[w + 1] & ~himask) | (static_cast<std::uint64_t>(c) >> (64 - off));
        }
    }
    int get(const std::uint64_t* s, int v) const { return StateView{s, bits}.get(v); }
    void encode(std::uint64_t* s, const Colouring& col) const {
        std::fill(s, s + words, 0);
        for (int v = 0; v < n; ++v) set(s, v, col[v]);
    }
    Colouring decode(const std::uint64_t* s) const {
        Colouring col(n);
        for (int v = 0; v < n; ++v) col[v] = get(s, v);
        return col;
    }
};

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Arena of packed states with an open-addressing index.
class StateStore {
public:
    explicit StateStore(std::size_t words) : words_(words) { table_.assign(1 << 12, 0); }

    std::size_t size() const { return count_; }
    const std::uint64_t* state(std::size_t idx) const { return arena_.data() + idx * words_; }

    // Returns (index, inserted).
    std::pair<std::size_t, bool> insert(const std::uint64_t* s) {
        if ((count_ + 1) * 10 > table_.size() * 7) grow();
        const std::uint64_t h = hash(s);
        std::size_t slot = h & (table_.size() - 1);
        while (table_[slot] != 0) {
            const std::size_t idx = table_[slot] - 1;
            if (std::equal(s, s + words_, state(idx))) return {idx, false};
            slot = (slot + 1) & (table_.size() - 1);
        }
        arena_.insert(arena_.end(), s, s + words_);
        table_[slot] = ++count_;
        return {count_ - 1, true};
    }

    // Lookup without insertion; returns npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const std::uint64_t* s) const {
        const std::uint64_t h = hash(s);
        std::size_t slot = h & (table_.size() - 1);
        while (table_[slot] != 0) {
            const std::size_t idx = table_[slot] - 1;
            if (std::equal(s, s + words_, state(idx))) return idx;
            slot = (slot + 1) & (table_.size() - 1);
        }
        return npos;
    }

private:
    std::uint64_t hash(const std::uint64_t* s) const {
        std::uint64_t h = 0x2545f4914f6cdd1dull;
        for (std::size_t i = 0; i < words_; ++i) h = mix64(h ^ s[i]);
        return h;
    }
    void grow() {
        std::vector<std::size_t> newtab;
        std::size_t cap = table_.size() * 2;
        newtab.assign(cap, 0);
        for (std::size_t idx = 0; idx < count_; ++idx) {
            std::size_t slot = hash(state(idx)) & (cap - 1);
            while (newtab[slot] != 0) slot = (slot + 1) & (cap - 1);
            newtab[slot] = idx + 1;
        }
        table_ = std::move(newtab);
    }

    std::size_t words_;
    std::vector<std::uint64_t> arena_;
    std::vector<std::size_t> table_;
    std::size_t count_ = 0;
};

void require_hom(const Graph& g, const Graph& h, const Colouring& f, const char* what) {
    if (!is_homomorphism(g, h, f))
        throw precondition_error(std::string(what) + " is not a homomorphism");
}

} // namespace

EnumerationResult enumerate_homs(const Graph& g, const Graph& h, std::uint64_t cap) {
    const HostMasks masks(h);
    const int n = g.vertex_count();
    EnumerationResult out;
    if (n == 0) {
        out.homs.push_back({});
        return out;
    }

    // domains[v] maintained by forward checking as vertices 0..n-1 get assigned
    std::vector<std::uint64_t> domain(n, masks.full);
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v)) domain[v] &= masks.loops;

    Colouring cur(n, -1);
    std::vector<std::vector<std::pair<int, std::uint64_t>>> undo(n);

    int v = 0;
    std::vector<std::uint64_t> remaining(n);
    remaining[0] = domain[0];
    while (v >= 0) {
        if (remaining[v] == 0) {
            // backtrack
            --v;
            if (v >= 0)
                for (auto& [w, old] : undo[v]) domain[w] = old;
            continue;
        }
        const int c = std::countr_zero(remaining[v]);
        remaining[v] &= remaining[v] - 1;
        cur[v] = c;
        if (v == n - 1) {
            if (out.homs.size() == cap) {
                // one more than the cap allows proves the enumeration short
                out.cap_exceeded = true;
                return out;
            }
            out.homs.push_back(cur);
            continue;
        }
        // forward-check later neighbours
        undo[v].clear();
        bool dead = false;
        for (int w : g.neighbours(v)) {
            if (w <= v) continue;
            const std::uint64_t nd = domain[w] & masks.adj[c];
            if (nd != domain[w]) {
                undo[v].emplace_back(w, domain[w]);
                domain[w] = nd;
                if (nd == 0) dead = true;
            }
        }
        if (dead) {
            for (auto& [w, old] : undo[v]) domain[w] = old;
            continue;
        }
        ++v;
        remaining[v] = domain[v];
    }
    return out;
}

std::vector<Colouring> hom_neighbours(const Graph& g, const Graph& h, const Colouring& f,
                                      MoveRule rule) {
    require_hom(g, h, f, "hom_neighbours: f");
    const HostMasks masks(h);
    std::vector<Colouring> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t cand = masks.full;
        for (int u : g.neighbours(v)) cand &= (u == v) ? masks.loops : masks.adj[f[u]];
        if (rule == MoveRule::Reflexive) cand &= masks.adj[f[v]];
        cand &= ~(std::uint64_t{1} << f[v]);
        while (cand) {
            const int c = std::countr_zero(cand);
            cand &= cand - 1;
            Colouring next = f;
            next[v] = c;
            out.push_back(std::move(next));
        }
    }
    return out;
}

ExploreResult explore_component(const Graph& g, const Graph& h, const Colouring& start,
                                const Colouring* target, const ExploreOptions& options) {
    require_hom(g, h, start, "explore: start");
    if (target) require_hom(g, h, *target, "explore: target");
    const HostMasks masks(h);
    const int n = g.vertex_count();
    const Codec codec(n, h.vertex_count());

    ExploreResult res;
    res.colour_changed.assign(n, 0);
    res.probe_hit.assign(options.probes.size(), 0);

    StateStore store(codec.words);
    std::vector<std::size_t> parent;
    const bool track = options.record_parents || target != nullptr || bool(options.stop_when);

    std::vector<std::uint64_t> buf(codec.words);
    codec.encode(buf.data(), start);
    store.insert(buf.data());
    if (track) parent.push_back(0);

    std::vector<std::uint64_t> tbuf(codec.words);
    std::size_t target_idx = StateStore::npos;
    if (target) {
        codec.encode(tbuf.data(), *target);
        if (std::equal(buf.data(), buf.data() + codec.words, tbuf.data())) target_idx = 0;
    }
    StateView start_view{buf.data(), codec.bits};
    if (options.stop_when && options.stop_when(start_view) && target_idx == StateStore::npos)
        target_idx = 0;

    std::vector<std::uint64_t> succ(codec.words);
    Colouring cur(n);
    std::size_t head = 0;
    bool done = target_idx != StateStore::npos;

    while (!done && head < store.size()) {
        // Copy the popped state: the arena may reallocate during insertion.
        std::copy(store.state(head), store.state(head) + codec.words, buf.data());
        for (int v = 0; v < n; ++v) cur[v] = codec.get(buf.data(), v);

        for (int v = 0; v < n && !done; ++v) {
            std::uint64_t cand = masks.full;
            for (int u : g.neighbours(v)) cand &= (u == v) ? masks.loops : masks.adj[cur[u]];
            if (options.rule == MoveRule::Reflexive) cand &= masks.adj[cur[v]];
            cand &= ~(std::uint64_t{1} << cur[v]);
            while (cand) {
                const int c = std::countr_zero(cand);
                cand &= cand - 1;
                std::copy(buf.begin(), buf.end(), succ.begin());
                codec.set(succ.data(), v, c);
                const StateView view{succ.data(), codec.bits};
                if (options.admit && !options.admit(view)) {
                    ++res.rejected_moves;
                    if (!res.sample_rejected) res.sample_rejected = codec.decode(succ.data());
                    continue;
                }
                auto [idx, inserted] = store.insert(succ.data());
                if (!inserted) continue;
                if (store.size() > options.cap) {
                    // discovering one state beyond the cap proves the cap short
                    res.cap_exceeded = true;
                    res.states = store.size() - 1;
                    return res;
                }
                if (track) parent.push_back(head);
                if (c != start[v]) res.colour_changed[v] = 1;
                if (target && std::equal(succ.begin(), succ.end(), tbuf.data())) {
                    target_idx = idx;
                    done = true;
                    break;
                }
                if (options.stop_when && options.stop_when(view)) {
                    target_idx = idx;
                    done = true;
                    break;
                }
            }
        }
        ++head;
    }

    res.states = store.size();
    res.exhausted = !done && head >= store.size();
    res.target_found = target_idx != StateStore::npos;
    if (res.target_found && track) {
        std::vector<std::size_t> chain;
        for (std::size_t i = target_idx;; i = parent[i]) {
            chain.push_back(i);
            if (i == 0) break;
        }
        Witness w;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            w.steps.push_back(codec.decode(store.state(*it)));
        res.witness = std::move(w);
    }
    for (std::size_t i = 0; i < options.probes.size(); ++i) {
        codec.encode(succ.data(), options.probes[i]);
        res.probe_hit[i] = store.find(succ.data()) != StateStore::npos;
    }
    return res;
}

ReachResult reachable(const Graph& g, const Graph& h, const Colouring& f, const Colouring& gcol,
                      MoveRule rule, std::uint64_t cap) {
    ExploreOptions opt;
    opt.rule = rule;
    opt.cap = cap;
    opt.record_parents = true;
    ExploreResult er = explore_component(g, h, f, &gcol, opt);
    ReachResult out;
    out.states_explored = er.states;
    out.cap = cap;
    if (er.target_found) {
        out.status = ReachStatus::Reachable;
        out.witness = std::move(er.witness);
    } else if (er.cap_exceeded) {
        out.status = ReachStatus::CapExceeded;
    } else {
        out.status = ReachStatus::Unreachable;
    }
    return out;
}

FrozenResult frozen_vertices(const Graph& g, const Graph& h, const Colouring& f, MoveRule rule,
                             std::uint64_t cap) {
    ExploreOptions opt;
    opt.rule = rule;
    opt.cap = cap;
    ExploreResult er = explore_component(g, h, f, nullptr, opt);
    FrozenResult out;
    out.exhausted = er.exhausted;
    out.states = er.states;
    out.frozen.assign(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) out.frozen[v] = !er.colour_changed[v];
    return out;
}

WitnessCheck validate_witness(const Graph& g, const Graph& h, const Witness& w, MoveRule rule) {
    if (w.steps.empty()) return {false, 0, "witness has no states"};
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        if (!is_homomorphism(g, h, w.steps[i]))
            return {false, i, "step " + std::to_string(i) + " is not a homomorphism"};
    }
    for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
        const Colouring& a = w.steps[i];
        const Colouring& b = w.steps[i + 1];
        int changed = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (a[v] != b[v]) {
                if (changed != -1)
                    return {false, i + 1,
                            "steps " + std::to_string(i) + "->" + std::to_string(i + 1) +
                                " differ on more than one vertex"};
                changed = v;
            }
        if (changed == -1)
            return {false, i + 1,
                    "steps " + std::to_string(i) + "->" + std::to_string(i + 1) + " are equal"};
        if (rule == MoveRule::Reflexive && !h.has_edge(a[changed], b[changed]))
            return {false, i + 1,
                    "step " + std::to_string(i + 1) + " recolours vertex " +
                        std::to_string(changed) + " to a non-neighbour"};
    }
    return {true, 0, ""};
}

} // namespace reconforge
