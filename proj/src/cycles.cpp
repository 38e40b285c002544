#include "symmset/cycles.hpp"

#include <algorithm>

namespace symmset {

namespace {

// Position of elem in the canonical relabeling of P \ {removed}.
int face_index(int elem, int removed) { return elem - (elem > removed ? 1 : 0); }

void emit(const TraceFn& trace, const std::string& msg) {
    if (trace) trace(msg);
}

std::vector<int> class_sizes(const EquivRel& rel) {
    std::vector<int> sizes(static_cast<std::size_t>(rel.num_classes()), 0);
    for (int c : rel.class_of) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

}  // namespace

Cycle validate_cycle(SymSetPtr M, const FinSet& P, std::vector<Structure> faces) {
    require(M != nullptr, "validate_cycle: missing symmetric set");
    require(P.size >= 2, "validate_cycle: P must have at least 2 elements");
    require(static_cast<int>(faces.size()) == P.size, "validate_cycle: one face per element required");
    for (int p = 0; p < P.size; ++p) {
        const Structure& c = faces[static_cast<std::size_t>(p)];
        require(c.owner == M->name(), "validate_cycle: face " + std::to_string(p) +
                                          " belongs to " + c.owner + ", not " + M->name());
        require(c.carrier.size == P.size - 1,
                "validate_cycle: face " + std::to_string(p) + " has the wrong carrier size");
    }
    if (P.size >= 3) {
        for (int p = 0; p < P.size; ++p)
            for (int q = p + 1; q < P.size; ++q) {
                const Structure& cp = faces[static_cast<std::size_t>(p)];
                const Structure& cq = faces[static_cast<std::size_t>(q)];
                Structure lhs = M->pullback(cp, delta(cp.carrier, face_index(q, p)));
                Structure rhs = M->pullback(cq, delta(cq.carrier, face_index(p, q)));
                require(lhs == rhs, "validate_cycle: cycle equation violated at pair (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")");
            }
    }
    return Cycle{std::move(M), P, std::move(faces)};
}

Cycle restrict_to_cycle(SymSetPtr M, const Structure& f) {
    require(M != nullptr, "restrict_to_cycle: missing symmetric set");
    require(f.owner == M->name(), "restrict_to_cycle: structure belongs to " + f.owner);
    require(f.carrier.size >= 2, "restrict_to_cycle: carrier must have at least 2 points");
    std::vector<Structure> faces;
    faces.reserve(static_cast<std::size_t>(f.carrier.size));
    for (int p = 0; p < f.carrier.size; ++p)
        faces.push_back(M->pullback(f, delta(f.carrier, p)));
    return Cycle{std::move(M), f.carrier, std::move(faces)};
}

std::vector<Structure> brute_force_fillers(const Cycle& cycle, std::uint64_t guard) {
    const SymSet& M = *cycle.symset;
    std::uint64_t count = M.structure_count(cycle.P);
    require(count <= guard, "brute_force_fillers: size guard exceeded (" + std::to_string(count) +
                                " candidate structures)");
    std::vector<FinFn> deltas;
    deltas.reserve(static_cast<std::size_t>(cycle.P.size));
    for (int p = 0; p < cycle.P.size; ++p) deltas.push_back(delta(cycle.P, p));

    std::vector<Structure> fillers;
    for (std::uint64_t i = 0; i < count; ++i) {
        Structure f = M.structure_at(cycle.P, i);
        bool ok = true;
        for (int p = 0; p < cycle.P.size && ok; ++p)
            ok = M.pullback(f, deltas[static_cast<std::size_t>(p)]) == cycle.faces[static_cast<std::size_t>(p)];
        if (ok) fillers.push_back(std::move(f));
    }
    return fillers;
}

CycleStats cycle_stats(const Cycle& cycle) {
    const SymSet& M = *cycle.symset;
    CycleStats stats;
    stats.face_mass.reserve(cycle.faces.size());
    int max_mass = 0;
    for (const Structure& c : cycle.faces) {
        int m = mass(M, c);
        stats.face_mass.push_back(m);
        max_mass = std::max(max_mass, m);
    }
    stats.n = max_mass - 1;
    stats.d = cycle.k() - stats.n;
    for (int p = 0; p < cycle.P.size; ++p) {
        if (stats.face_mass[static_cast<std::size_t>(p)] == max_mass)
            stats.upper.push_back(p);
        else
            stats.lower.push_back(p);
    }
    return stats;
}

bool ReductionGraph::has_edge(int p, int q) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
}

std::vector<std::pair<int, int>> ReductionGraph::upper_edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < upper.size(); ++i)
        for (std::size_t j = i + 1; j < upper.size(); ++j)
            if (has_edge(upper[i], upper[j]) && has_edge(upper[j], upper[i]))
                out.emplace_back(upper[i], upper[j]);
    return out;
}

ReductionGraph reduction_graph(const Cycle& cycle) {
    const SymSet& M = *cycle.symset;
    CycleStats stats = cycle_stats(cycle);

    ReductionGraph g;
    g.P = cycle.P;
    g.upper = stats.upper;
    g.lower = stats.lower;

    if (cycle.k() >= 2) {
        for (int q = 0; q < cycle.P.size; ++q) {
            EquivRel cong = ez_congruence(M, cycle.faces[static_cast<std::size_t>(q)]);
            std::vector<int> sizes = class_sizes(cong);
            for (int p = 0; p < cycle.P.size; ++p) {
                if (p == q) continue;
                int cls = cong.class_of[static_cast<std::size_t>(face_index(p, q))];
                if (sizes[static_cast<std::size_t>(cls)] >= 2) g.edges.emplace_back(p, q);
            }
        }
        std::sort(g.edges.begin(), g.edges.end());
    }

    std::vector<char> in_upper(static_cast<std::size_t>(cycle.P.size), 0);
    for (int p : g.upper) in_upper[static_cast<std::size_t>(p)] = 1;

    for (const auto& [p, q] : g.edges)
        ensure(in_upper[static_cast<std::size_t>(p)] || !in_upper[static_cast<std::size_t>(q)],
               "reduction_graph: edge from a low-mass vertex into a maximal-mass vertex");
    for (int p : g.upper)
        for (int q : g.upper)
            if (p != q)
                ensure(g.has_edge(p, q) == g.has_edge(q, p),
                       "reduction_graph: asymmetric edge between maximal-mass vertices");

    if (stats.d >= 2) {
        std::vector<int> indegree(static_cast<std::size_t>(cycle.P.size), 0);
        for (const auto& [p, q] : g.edges) ++indegree[static_cast<std::size_t>(q)];
        for (int q = 0; q < cycle.P.size; ++q)
            ensure(indegree[static_cast<std::size_t>(q)] >= stats.d,
                   "reduction_graph: vertex " + std::to_string(q) + " has indegree below d");
        ensure(static_cast<int>(g.upper.size()) >= stats.d + 1,
               "reduction_graph: fewer than d+1 maximal-mass vertices");
    }

    // The undirected restriction to P̄, on relabeled vertices.
    std::vector<int> pos(static_cast<std::size_t>(cycle.P.size), -1);
    for (std::size_t i = 0; i < g.upper.size(); ++i) pos[static_cast<std::size_t>(g.upper[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> up_edges;
    for (const auto& [p, q] : g.upper_edges())
        up_edges.emplace_back(pos[static_cast<std::size_t>(p)], pos[static_cast<std::size_t>(q)]);
    std::vector<std::string> names;
    names.reserve(g.upper.size());
    for (int p : g.upper) names.push_back(cycle.P.display(p));
    g.upper_subgraph = UGraph(FinSet(static_cast<int>(g.upper.size()), std::move(names)), std::move(up_edges));
    return g;
}

bool meets_filling_inequalities(int n, int k) { return (k - n) >= 3 && k > 2 * n - 1; }

bool is_exceptional_case(int n, int k) { return n == 1 && k == 3; }

Structure seed_filler(const Cycle& cycle, int p, int q, const TraceFn& trace) {
    const SymSet& M = *cycle.symset;
    require(p != q && p >= 0 && q >= 0 && p < cycle.P.size && q < cycle.P.size,
            "seed_filler: bad vertex pair");
    require(cycle.k() >= 2, "seed_filler: needs faces with at least 2 points");

    CycleStats stats = cycle_stats(cycle);
    const Structure& cp = cycle.faces[static_cast<std::size_t>(p)];
    const Structure& cq = cycle.faces[static_cast<std::size_t>(q)];
    int top = stats.n + 1;
    require(stats.face_mass[static_cast<std::size_t>(p)] == top &&
                stats.face_mass[static_cast<std::size_t>(q)] == top,
            "seed_filler: both faces must have maximal mass");
    require(reduces(M, cp, face_index(q, p)) && reduces(M, cq, face_index(p, q)),
            "seed_filler: the pair is not a mutual reduction edge");

    Structure shared = M.pullback(cp, delta(cp.carrier, face_index(q, p)));
    Structure shared2 = M.pullback(cq, delta(cq.carrier, face_index(p, q)));
    require(shared == shared2, "seed_filler: cycle equation fails at the seed pair");

    EzDecomposition ezd = ez_decompose(M, shared);
    emit(trace, "seed(" + std::to_string(p) + "," + std::to_string(q) +
                    "): shared double face decomposed, mass " + std::to_string(ezd.mass));

    FinFn beta_p = decomposition_lifting(M, cp, face_index(q, p), ezd);
    FinFn beta_q = decomposition_lifting(M, cq, face_index(p, q), ezd);
    emit(trace, "seed: face decompositions lifted along both points");

    std::vector<int> images(static_cast<std::size_t>(cycle.P.size));
    for (int r = 0; r < cycle.P.size; ++r) {
        if (r == p) {
            images[static_cast<std::size_t>(r)] = beta_q(face_index(p, q));
        } else if (r == q) {
            images[static_cast<std::size_t>(r)] = beta_p(face_index(q, p));
        } else {
            int vp = beta_p(face_index(r, p));
            int vq = beta_q(face_index(r, q));
            ensure(vp == vq, "seed_filler: lifted maps disagree at point " + std::to_string(r));
            images[static_cast<std::size_t>(r)] = vp;
        }
    }
    FinFn beta(cycle.P, beta_p.cod, std::move(images));
    ensure(is_surjective(beta), "seed_filler: common extension is not surjective");

    Structure f = M.pullback(ezd.quotient_structure, beta);
    ensure(M.pullback(f, delta(cycle.P, p)) == cp, "seed_filler: seed does not restrict to the first face");
    ensure(M.pullback(f, delta(cycle.P, q)) == cq, "seed_filler: seed does not restrict to the second face");
    ensure(mass(M, f) == top, "seed_filler: seed does not have mass n+1");
    emit(trace, "seed: restrictions at both points and mass n+1 verified");
    return f;
}

std::vector<int> propagate_filler(const Cycle& cycle, const Structure& f, std::vector<int> s,
                                  const TraceFn& trace) {
    const SymSet& M = *cycle.symset;
    CycleStats stats = cycle_stats(cycle);
    require(mass(M, f) == stats.n + 1, "propagate_filler: candidate must have mass n+1");

    std::vector<char> in_s(static_cast<std::size_t>(cycle.P.size), 0);
    for (int v : s) {
        require(v >= 0 && v < cycle.P.size, "propagate_filler: seed set out of range");
        require(M.pullback(f, delta(cycle.P, v)) == cycle.faces[static_cast<std::size_t>(v)],
                "propagate_filler: candidate does not restrict to face " + std::to_string(v));
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    if (cycle.k() < 2) {
        std::vector<int> out;
        for (int v = 0; v < cycle.P.size; ++v)
            if (in_s[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    std::vector<char> in_upper(static_cast<std::size_t>(cycle.P.size), 0);
    for (int v : stats.upper) in_upper[static_cast<std::size_t>(v)] = 1;

    // reducers[r] = points of P \ {r} whose ~c_r class is not a singleton.
    std::vector<std::vector<int>> reducers(static_cast<std::size_t>(cycle.P.size));
    for (int r = 0; r < cycle.P.size; ++r) {
        EquivRel cong = ez_congruence(M, cycle.faces[static_cast<std::size_t>(r)]);
        std::vector<int> sizes = class_sizes(cong);
        for (int v = 0; v < cycle.P.size; ++v) {
            if (v == r) continue;
            int cls = cong.class_of[static_cast<std::size_t>(face_index(v, r))];
            if (sizes[static_cast<std::size_t>(cls)] >= 2) reducers[static_cast<std::size_t>(r)].push_back(v);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < cycle.P.size; ++r) {
            if (in_s[static_cast<std::size_t>(r)]) continue;
            int witnesses = 0;
            for (int v : reducers[static_cast<std::size_t>(r)])
                if (in_s[static_cast<std::size_t>(v)] && in_upper[static_cast<std::size_t>(v)]) ++witnesses;
            if (witnesses < 2) continue;
            ensure(M.pullback(f, delta(cycle.P, r)) == cycle.faces[static_cast<std::size_t>(r)],
                   "propagate_filler: propagation step failed at point " + std::to_string(r));
            emit(trace, "propagate: restriction verified at point " + std::to_string(r));
            in_s[static_cast<std::size_t>(r)] = 1;
            changed = true;
        }
    }

    std::vector<int> out;
    for (int v = 0; v < cycle.P.size; ++v)
        if (in_s[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

Structure construct_degenerate_filler(const Cycle& cycle, const TraceFn& trace) {
    const SymSet& M = *cycle.symset;
    validate_cycle(cycle.symset, cycle.P, cycle.faces);

    CycleStats stats = cycle_stats(cycle);
    int k = cycle.k();
    bool starred = meets_filling_inequalities(stats.n, k);
    bool exceptional = is_exceptional_case(stats.n, k);
    require(starred || exceptional,
            "construct_degenerate_filler: hypotheses fail (n=" + std::to_string(stats.n) +
                ", k=" + std::to_string(k) + ", d=" + std::to_string(stats.d) +
                "); the filling theorem does not apply");

    ReductionGraph rg = reduction_graph(cycle);
    auto edges = rg.upper_edges();
    ensure(!edges.empty(), "construct_degenerate_filler: no edge among maximal-mass vertices");
    auto [p, q] = edges.front();
    emit(trace, "fill: seeding at edge (" + std::to_string(p) + "," + std::to_string(q) + ")");

    Structure f = seed_filler(cycle, p, q, trace);

    if (exceptional && !starred) {
        // (n,k) = (1,3): the seed is already the filler; check all faces.
        for (int r = 0; r < cycle.P.size; ++r)
            ensure(M.pullback(f, delta(cycle.P, r)) == cycle.faces[static_cast<std::size_t>(r)],
                   "construct_degenerate_filler: exceptional case verification failed at point " +
                       std::to_string(r));
        emit(trace, "fill: exceptional case (n,k)=(1,3), all four faces verified directly");
    } else {
        std::vector<int> closure = propagate_filler(cycle, f, {p, q}, trace);
        ensure(static_cast<int>(closure.size()) == cycle.P.size,
               "construct_degenerate_filler: propagation stalled on " +
                   std::to_string(closure.size()) + " of " + std::to_string(cycle.P.size) + " points");
    }

    for (int r = 0; r < cycle.P.size; ++r)
        ensure(M.pullback(f, delta(cycle.P, r)) == cycle.faces[static_cast<std::size_t>(r)],
               "construct_degenerate_filler: final verification failed at point " + std::to_string(r));
    ensure(mass(M, f) == stats.n + 1, "construct_degenerate_filler: filler mass is not n+1");
    ensure(mass(M, f) < cycle.P.size, "construct_degenerate_filler: filler is not degenerate");
    emit(trace, "fill: full verification passed, filler mass " + std::to_string(stats.n + 1));
    return f;
}

}  // namespace symmset
